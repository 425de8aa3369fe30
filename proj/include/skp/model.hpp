#pragma once

#include <cmath>
#include <limits>

// Screened Kratzer potential under combined magnetic and Aharonov-Bohm
// flux fields: parameter types, the dimensionless mapping and the
// closed-form bound spectrum with its analytic field derivatives.
//
// All quantities are in natural units by default (hbar = mu = e = c =
// k_B = 1); every formula keeps the symbolic constants so the defaults
// can be overridden.

namespace skp {

struct Constants {
    double hbar = 1.0;
    double mu = 1.0;       // effective mass
    double e_charge = 1.0;
    double c_light = 1.0;
    double k_B = 1.0;

    // Minimal-coupling charge factor and flux quantum.
    double tau() const { return -e_charge / c_light; }
    double flux_quantum() const { return hbar * c_light / e_charge; }

    // Throws std::invalid_argument unless all fields are strictly positive.
    void validate() const;
};

// V(r) = (-A/r + C/r^2) exp(-alpha r).
// A = 2 De re and C = De re^2 when built from dissociation data.
struct PotentialParams {
    double A = 1.0;      // energy*length
    double C = 0.5;      // energy*length^2
    double alpha = 0.005; // inverse length, > 0

    static PotentialParams from_dissociation(double De, double re, double alpha);
    void validate() const; // alpha > 0, A > 0, C >= 0
};

struct FieldConfig {
    double B = 0.0;      // magnetic field magnitude, >= 0
    double phi_AB = 0.0; // Aharonov-Bohm flux, >= 0

    double xi(const Constants& k) const { return phi_AB / k.flux_quantum(); }
    void validate() const;
};

struct QuantumState {
    int n = 0; // radial quantum number, >= 0
    int m = 0; // magnetic quantum number, any sign
};

// The dimensionless quantities the radial problem reduces to.
// nu enters the spectrum (its radicand carries -delta3); sigma_exp is
// the wavefunction edge exponent (its radicand carries +delta3). The
// two coincide whenever B or phi_AB vanishes.
struct DimensionlessSet {
    double beta1 = 0;  // 2 mu A / (hbar^2 alpha)
    double beta2 = 0;  // 2 mu C / hbar^2
    double delta1 = 0; // 2 m tau B / (hbar alpha)
    double delta2 = 0; // tau^2 B^2 / (hbar alpha)^2
    double delta3 = 0; // tau^2 B phi_AB / (hbar^2 alpha pi)
    double gamma = 0;  // (m + xi)^2 - 1/4
    double xi = 0;
    double tau = 0;
    double nu = 0;        // 1/2 + sqrt(delta2 + beta2 - delta1 - delta3 + (m+xi)^2)
    double sigma_exp = 0; // 1/2 + sqrt(1/4 + beta2 + delta2 + delta3 - delta1 + gamma)
    double lambda_exp = std::numeric_limits<double>::quiet_NaN(); // set once an energy is attached
};

// Bound-state cutoff data. eta_max is the stationary point of the
// closed-form E(n): the largest continuous index before E turns over.
struct SpectrumCutoffs {
    double P1 = 0;      // (hbar^2 alpha^2 / 2 mu) ((m+xi)^2 - 1/4)
    double P2 = 0;      // delta2 - beta1 - (m+xi)^2 + 1/4
    double eta_max = 0; // -nu + sqrt(-P2) when -P2 > nu^2, else 0
    int n_max = 0;      // floor(eta_max)
};

// ---- operations ------------------------------------------------------

// Potential value at r > 0. Throws std::domain_error for r <= 0.
double potential_eval(const PotentialParams& p, double r);

// Greene-Aldrich surrogate for 1/r^2: alpha^2 / (1 - exp(-alpha r))^2.
double greene_aldrich(double alpha, double r);

// alpha * 2C/A; the surrogate above degrades once this exceeds ~0.1.
// Returns 0 when A == 0 (no characteristic radius).
double ga_validity_metric(const PotentialParams& p);

// Populates every dimensionless field except lambda_exp. Throws
// std::domain_error ("no bound spectrum under these fields") when the
// nu radicand is negative. sigma_exp is NaN if its own radicand is.
DimensionlessSet dimensionless_map(const PotentialParams& p, const FieldConfig& f,
                                   const QuantumState& q, const Constants& k);

// lambda(E) = sqrt(eps + gamma) with eps = -2 mu E / (hbar alpha)^2.
// Throws std::domain_error when the radicand is negative.
double lambda_exponent(const DimensionlessSet& d, const PotentialParams& p,
                       const Constants& k, double energy);

// Closed-form level E_{nm} of the two-dimensional problem.
double energy_2d(const PotentialParams& p, const FieldConfig& f,
                 const QuantumState& q, const Constants& k);
// Same formula at non-integer m (used by the 3D reduction m = ell + 1/2).
double energy_2d(const PotentialParams& p, const FieldConfig& f, double m, int n,
                 const Constants& k);

// Three-dimensional reduction E_{n ell} = E_2d at m = ell + 1/2; defined
// at zero fields only (throws std::domain_error otherwise).
double energy_3d(const PotentialParams& p, int ell, int n, const Constants& k);

// Analytic dE/dB and d2E/dB2 at fixed (n, m, phi_AB). Throws
// std::domain_error when the nu radicand is within tolerance of zero
// ("derivative singular").
double energy_dB(const PotentialParams& p, const FieldConfig& f,
                 const QuantumState& q, const Constants& k);
double energy_d2B(const PotentialParams& p, const FieldConfig& f,
                  const QuantumState& q, const Constants& k);

SpectrumCutoffs cutoffs(const PotentialParams& p, const FieldConfig& f, int m,
                        const Constants& k);

// Termination defect of the series solution at energy E for level n:
// (lambda + nu) - sqrt(eps - beta1 + delta2) + n, with the two root
// branches fixed by sign(P2 - (n+nu)^2) and sign(lambda + nu + n) so the
// expression vanishes exactly at E = energy_2d(n, m). Preconditions
// eps + gamma >= 0 and eps - beta1 + delta2 >= 0 (std::domain_error).
double quantization_residual(const PotentialParams& p, const FieldConfig& f,
                             const QuantumState& q, const Constants& k, double energy);

} // namespace skp
