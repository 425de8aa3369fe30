#include "skp/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "skp/quadrature.hpp"
#include "skp/specfun.hpp"

namespace skp::wavefunction {

RadialSolution radial_solution(const PotentialParams& p, const FieldConfig& f,
                               const QuantumState& q, const Constants& k) {
    const DimensionlessSet d = dimensionless_map(p, f, q, k);
    const double E = energy_2d(p, f, q, k);

    RadialSolution sol;
    sol.n = q.n;
    if (std::isnan(d.sigma_exp))
        throw std::domain_error("radial_solution: non-normalizable state (sigma complex)");
    sol.sigma_exp = d.sigma_exp;
    sol.lambda_exp = lambda_exponent(d, p, k, E); // throws if complex
    sol.a = -q.n;
    sol.b = q.n + 2.0 * (sol.lambda_exp + sol.sigma_exp);
    sol.c = 2.0 * sol.lambda_exp + 1.0;
    return sol;
}

double rho_s(const RadialSolution& sol, double s) {
    if (s < 0.0 || s > 1.0) throw std::domain_error("rho_s: s must lie in [0, 1]");
    if (s == 0.0) return sol.lambda_exp > 0.0 ? 0.0 : sol.norm;
    if (s == 1.0) return sol.sigma_exp > 0.0 ? 0.0 : sol.norm;
    const double series = specfun::gauss_2f1_terminating(sol.n, sol.b, sol.c, s);
    return sol.norm * std::pow(s, sol.lambda_exp) * std::pow(1.0 - s, sol.sigma_exp) * series;
}

double rho_r(const RadialSolution& sol, const PotentialParams& p, double r) {
    if (!(r > 0)) throw std::domain_error("rho_r: r must be > 0");
    const double s = std::exp(-p.alpha * r);
    return rho_s(sol, s);
}

RadialSolution normalize(const RadialSolution& sol, const PotentialParams& p) {
    if (!(sol.lambda_exp > 0.0) || !(sol.sigma_exp > 0.5))
        throw std::domain_error("normalize: exponents give a non-integrable density");

    // Locate the density peak on a log grid, then trim both tails where
    // the integrand drops below 1e-16 of it.
    const double r_lo0 = 1e-6 / p.alpha * 1e-3;
    const double r_hi0 = (sol.lambda_exp > 0 ? 60.0 / (sol.lambda_exp * p.alpha) : 1e6) +
                         40.0 / p.alpha;
    auto dens = [&](double r) {
        const double v = rho_r(sol, p, r);
        return v * v;
    };
    double peak = 0.0, r_peak = 1.0;
    const int scan = 3000;
    const double llo = std::log(std::max(r_lo0, 1e-12)), lhi = std::log(r_hi0);
    for (int i = 0; i <= scan; ++i) {
        const double r = std::exp(llo + (lhi - llo) * i / scan);
        const double v = dens(r);
        if (v > peak) {
            peak = v;
            r_peak = r;
        }
    }
    if (!(peak > 0.0)) throw std::domain_error("normalize: density vanishes everywhere");

    const double cut = 1e-16 * peak;
    double a = r_peak, b = r_peak;
    for (int i = scan; i >= 0; --i) {
        const double r = std::exp(llo + (lhi - llo) * i / scan);
        if (r < r_peak && dens(r) > cut) a = r;
    }
    for (int i = 0; i <= scan; ++i) {
        const double r = std::exp(llo + (lhi - llo) * i / scan);
        if (r > r_peak && dens(r) > cut) b = r;
    }
    a = std::max(a * 0.5, 1e-12);
    b = b * 1.5;

    const double integral = quadrature::adaptive_simpson(dens, a, r_peak, 1e-11) +
                            quadrature::adaptive_simpson(dens, r_peak, b, 1e-11);
    if (!(integral > 0.0) || !std::isfinite(integral))
        throw std::domain_error("normalize: quadrature failed");

    RadialSolution out = sol;
    out.norm = sol.norm / std::sqrt(integral);
    return out;
}

int count_nodes(const RadialSolution& sol, const PotentialParams& p,
                double r_lo, double r_hi, int samples) {
    int nodes = 0;
    double prev = 0.0;
    bool have_prev = false;
    for (int i = 0; i <= samples; ++i) {
        const double r = r_lo + (r_hi - r_lo) * i / samples;
        const double v = rho_r(sol, p, r);
        if (v == 0.0) continue;
        if (have_prev && std::signbit(v) != std::signbit(prev)) ++nodes;
        prev = v;
        have_prev = true;
    }
    return nodes;
}

} // namespace skp::wavefunction
