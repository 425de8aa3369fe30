#pragma once

#include <vector>

#include "skp/model.hpp"

// Independent numerical verification of the closed forms: a finite-
// difference eigensolver for the approximated radial equation plus
// brute-force references for the cutoff index and the partition sum.

namespace skp::oracle {

struct FdGrid {
    double r_min = 1e-3;
    double r_max = 2000.0;
    int points = 20001; // total grid points including both Dirichlet ends
    double spacing() const { return (r_max - r_min) / (points - 1); }
};

struct FdResult {
    std::vector<double> energies; // ascending, only states below threshold
    bool truncated = false;       // fewer bound states than requested
};

// The full r-dependent coefficient of the radial equation apart from the
// energy term, i.e. U(r) in  rho'' + [2 mu E / hbar^2 + U(r)] rho = 0.
// Throws std::domain_error for r <= 0.
double effective_potential(const PotentialParams& p, const FieldConfig& f, int m,
                           const Constants& k, double r);

// Energy above which states stop being square-integrable: the r -> inf
// limit of the equation threshold, (hbar^2 alpha^2 / 2 mu)((m+xi)^2 - 1/4).
double continuum_threshold(const PotentialParams& p, const FieldConfig& f, int m,
                           const Constants& k);

// Lowest `count` eigenvalues of the three-point discretization with
// Dirichlet ends, extracted by Sturm bisection (batched across shifts).
FdResult fd_eigenvalues(const PotentialParams& p, const FieldConfig& f, int m,
                        const Constants& k, const FdGrid& grid, int count);

// Same, Richardson-extrapolated from the grid and its half-spacing
// refinement: (4 E_{h/2} - E_h) / 3 per level.
FdResult fd_eigenvalues_extrapolated(const PotentialParams& p, const FieldConfig& f,
                                     int m, const Constants& k, const FdGrid& grid,
                                     int count);

// Grid sized from the expected decay length and turning point of the
// lowest `n_states` levels (falls back to generic bounds when the
// consistent closed form provides no state).
FdGrid auto_grid(const PotentialParams& p, const FieldConfig& f, int m,
                 const Constants& k, int n_states);

// Closed-form spectrum of the equation effective_potential() actually
// defines. Differs from model::energy_2d in the sign the Coulomb-like
// attraction enters the quantization polynomial (see README, "Numerical
// notes"); agrees with the Hulthen spectrum in the C = 0, gamma = 0
// limit. Throws std::domain_error when level n is not square-integrable.
double radial_eq_energy_2d(const PotentialParams& p, const FieldConfig& f,
                           const QuantumState& q, const Constants& k);
// Number of square-integrable levels of that spectrum (0 if none).
int radial_eq_state_count(const PotentialParams& p, const FieldConfig& f, int m,
                          const Constants& k);

// argmax over n in [0, n_ceiling] of the closed-form E(n).
int brute_force_nmax(const PotentialParams& p, const FieldConfig& f, int m,
                     const Constants& k, int n_ceiling);

// Direct Boltzmann sum over n = 0..n_max of exp(-beta E_n).
// Throws std::domain_error for beta <= 0.
double brute_force_partition(const PotentialParams& p, const FieldConfig& f, int m,
                             const Constants& k, double beta);

} // namespace skp::oracle
