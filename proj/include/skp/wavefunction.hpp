#pragma once

#include "skp/model.hpp"

// Radial bound-state function rho(s) = s^lambda (1-s)^sigma F(s) with the
// terminating series F, in both the s = exp(-alpha r) coordinate and r.

namespace skp::wavefunction {

struct RadialSolution {
    double lambda_exp = 0; // edge exponent at s = 0 (r -> inf)
    double sigma_exp = 0;  // edge exponent at s = 1 (r -> 0)
    int n = 0;
    double a = 0, b = 0, c = 0; // series parameters; a = -n at quantized energies
    double norm = 1.0;          // multiplicative normalization constant
};

// Solution at the quantized energy of state q. Throws std::domain_error
// ("non-normalizable state") when either edge exponent is complex.
RadialSolution radial_solution(const PotentialParams& p, const FieldConfig& f,
                               const QuantumState& q, const Constants& k);

// Unnormalized-by-default evaluation; includes sol.norm.
double rho_s(const RadialSolution& sol, double s);
double rho_r(const RadialSolution& sol, const PotentialParams& p, double r);

// Returns a copy scaled so integral_0^inf rho(r)^2 dr = 1 to <= 1e-8
// relative (adaptive quadrature split at the peak, tails cut where the
// integrand falls below 1e-16 of its maximum). The dr measure follows
// from the 1/sqrt(2 pi r) prefactor of the full wavefunction. Requires
// lambda > 0 and sigma > 1/2 (std::domain_error otherwise).
RadialSolution normalize(const RadialSolution& sol, const PotentialParams& p);

// Interior sign changes of rho_r on a dense grid (test support).
int count_nodes(const RadialSolution& sol, const PotentialParams& p,
                double r_lo, double r_hi, int samples);

} // namespace skp::wavefunction
