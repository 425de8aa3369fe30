#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include "skp/model.hpp"

// Canonical partition function by three routes (direct sum over levels,
// adaptive quadrature of the classical-limit integral, and its erfi
// closed form) and the thermodynamic / magnetic property chain built on
// top of it, at finite and zero temperature.

namespace skp::thermo {

enum class ZMethod { DirectSum, Quadrature, ClosedForm };
enum class Convention { Standard, PaperLiteral };

const char* to_string(ZMethod m);
const char* to_string(Convention c);

// Thrown when the erfi arguments of the closed form leave the
// representable range; callers fall back to the quadrature route.
struct ClosedFormUnstable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coefficients of the classical-limit integrand exp(-beta E(phi)) with
// E(phi) = P1 - (hbar^2 alpha^2 / 2 mu) ((P2 - phi^2) / (2 phi))^2, i.e.
// -E(phi) = M/phi^2 + N phi^2 + W over phi in [nu, eta + nu].
struct IntegralParams {
    double M_coef = 0; // hbar^2 alpha^2 P2^2 / (8 mu), >= 0
    double N_coef = 0; // hbar^2 alpha^2 / (8 mu), > 0
    double W_coef = 0; // -hbar^2 alpha^2 P2 / (4 mu) - P1
    double phi_lo = 0; // nu
    double phi_hi = 0; // eta + nu
};

// Error-function arguments of the closed form, purely imaginary for
// physical M, N, beta > 0 (kept for the complex-assembly cross-check).
struct ErfTerms {
    std::complex<double> lam1, lam2, pi1, pi2, xi_term;
};

IntegralParams integral_params(const PotentialParams& p, const FieldConfig& f, int m,
                               const Constants& k);
ErfTerms closed_form_terms(const IntegralParams& ip, double beta);

// Z as the finite Boltzmann sum over n = 0..n_max (bit-identical to
// oracle::brute_force_partition). beta <= 0 throws std::domain_error.
double partition_direct(const PotentialParams& p, const FieldConfig& f, int m,
                        const Constants& k, double beta);

// Z as the adaptive quadrature of exp(-beta E(phi)) over [nu, eta+nu]
// to <= 1e-10 relative. Throws std::domain_error when eta_max = 0
// ("classical limit undefined").
double partition_quadrature(const PotentialParams& p, const FieldConfig& f, int m,
                            const Constants& k, double beta);

// Z from the antiderivative of the same integrand,
//   Z = e^{beta W} sqrt(pi)/(4 sqrt(a)) [ e^{2 sqrt(ab)} erfi(u+)|_lo^hi
//                                       + e^{-2 sqrt(ab)} erfi(u-)|_lo^hi ],
// a = beta N, b = beta M, u±(phi) = sqrt(a) phi -/+ sqrt(b)/phi.
// Throws ClosedFormUnstable when an erfi argument exceeds 30.
double partition_closed(const PotentialParams& p, const FieldConfig& f, int m,
                        const Constants& k, double beta);

// Same value assembled from error functions of imaginary argument with
// principal square roots of the negative-real radicands (cross-check;
// the imaginary residue of the assembly is asserted <= 1e-8 relative).
double partition_closed_complex(const PotentialParams& p, const FieldConfig& f, int m,
                                const Constants& k, double beta);

struct ThermoPoint {
    double beta = 0, B = 0, phi_AB = 0;
    double Z = 0;             // > 0
    double U = 0;             // internal energy
    double Cv = 0;            // units of k_B
    double F = 0;             // free energy
    double S = 0;             // units of k_B
    double magnetization = 0; // energy per field unit
    double chi = 0;           // energy per field unit squared
    ZMethod z_method = ZMethod::DirectSum;
    Convention convention = Convention::Standard;
};

// All seven quantities at one (beta, B, phi_AB). The DirectSum route is
// fully analytic (ensemble moments of E, dE/dB, d2E/dB2); the other
// routes differentiate Z numerically (relative step 1e-6 in beta,
// 1e-4 max(1,B) in B, one Richardson level). Convention selects the
// standard definitions Cv = -k beta^2 dU/dbeta, S = k(ln Z + beta U)
// or the literal ones Cv = k dU/dbeta, S = -k dF/dbeta.
ThermoPoint thermo_point(const PotentialParams& p, const FieldConfig& f, int m,
                         const Constants& k, double beta,
                         ZMethod method = ZMethod::DirectSum,
                         Convention conv = Convention::Standard);

// Per-state zero-temperature response: M = -dE/dB analytically, and
// chi = dM/dB by central differences (step 1e-4 max(1,B), Richardson).
double magnetization_zero_T(const PotentialParams& p, const FieldConfig& f,
                            const QuantumState& q, const Constants& k);
double susceptibility_zero_T(const PotentialParams& p, const FieldConfig& f,
                             const QuantumState& q, const Constants& k);

} // namespace skp::thermo
