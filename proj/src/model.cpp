#include "skp/model.hpp"

#include <cmath>
#include <stdexcept>

namespace skp {

namespace {

struct MapCore {
    double beta1, beta2, delta1, delta2, delta3, gamma, xi, tau;
    double m_eff;     // m + xi
    double nu_rad;    // radicand of nu
    double sigma_rad; // radicand of sigma
};

// Shared by the integer-m operations and the half-integer 3D reduction.
MapCore map_core(const PotentialParams& p, const FieldConfig& f, double m,
                 const Constants& k) {
    MapCore c{};
    const double h2 = k.hbar * k.hbar;
    c.tau = k.tau();
    c.xi = f.xi(k);
    c.beta1 = 2.0 * k.mu * p.A / (h2 * p.alpha);
    c.beta2 = 2.0 * k.mu * p.C / h2;
    c.delta1 = 2.0 * m * c.tau * f.B / (k.hbar * p.alpha);
    c.delta2 = c.tau * c.tau * f.B * f.B / (h2 * p.alpha * p.alpha);
    c.delta3 = c.tau * c.tau * f.B * f.phi_AB / (h2 * p.alpha * M_PI);
    c.m_eff = m + c.xi;
    c.gamma = c.m_eff * c.m_eff - 0.25;
    c.nu_rad = c.delta2 + c.beta2 - c.delta1 - c.delta3 + c.m_eff * c.m_eff;
    c.sigma_rad = 0.25 + c.beta2 + c.delta2 + c.delta3 - c.delta1 + c.gamma;
    return c;
}

double nu_of(const MapCore& c) {
    if (c.nu_rad < 0.0)
        throw std::domain_error("no bound spectrum under these fields (nu radicand < 0)");
    return 0.5 + std::sqrt(c.nu_rad);
}

double energy_scale(const PotentialParams& p, const Constants& k) {
    return k.hbar * k.hbar * p.alpha * p.alpha / (2.0 * k.mu); // hbar^2 alpha^2 / 2 mu
}

double p2_of(const MapCore& c) { return c.delta2 - c.beta1 - c.m_eff * c.m_eff + 0.25; }

double energy_impl(const PotentialParams& p, const FieldConfig& f, double m, int n,
                   const Constants& k) {
    if (n < 0) throw std::domain_error("radial quantum number must be >= 0");
    const MapCore c = map_core(p, f, m, k);
    const double nu = nu_of(c);
    const double phi = n + nu;
    const double lam = (p2_of(c) - phi * phi) / (2.0 * phi);
    const double es = energy_scale(p, k);
    return es * c.gamma - es * lam * lam;
}

} // namespace

void Constants::validate() const {
    if (!(hbar > 0 && mu > 0 && e_charge > 0 && c_light > 0 && k_B > 0))
        throw std::invalid_argument("Constants: all fields must be strictly positive");
}

PotentialParams PotentialParams::from_dissociation(double De, double re, double alpha) {
    PotentialParams p;
    p.A = 2.0 * De * re;
    p.C = De * re * re;
    p.alpha = alpha;
    p.validate();
    return p;
}

void PotentialParams::validate() const {
    if (!(alpha > 0)) throw std::invalid_argument("PotentialParams: alpha must be > 0");
    if (!(A > 0)) throw std::invalid_argument("PotentialParams: A must be > 0");
    if (!(C >= 0)) throw std::invalid_argument("PotentialParams: C must be >= 0");
}

void FieldConfig::validate() const {
    if (!(B >= 0)) throw std::invalid_argument("FieldConfig: B must be >= 0");
    if (!(phi_AB >= 0)) throw std::invalid_argument("FieldConfig: phi_AB must be >= 0");
}

double potential_eval(const PotentialParams& p, double r) {
    if (!(r > 0)) throw std::domain_error("potential_eval: r must be > 0");
    return (-p.A / r + p.C / (r * r)) * std::exp(-p.alpha * r);
}

double greene_aldrich(double alpha, double r) {
    if (!(r > 0)) throw std::domain_error("greene_aldrich: r must be > 0");
    if (alpha == 0.0) return 1.0 / (r * r); // limiting identity
    const double d = -std::expm1(-alpha * r); // 1 - exp(-alpha r), no cancellation
    return alpha * alpha / (d * d);
}

double ga_validity_metric(const PotentialParams& p) {
    if (p.A <= 0) return 0.0;
    return p.alpha * 2.0 * p.C / p.A;
}

DimensionlessSet dimensionless_map(const PotentialParams& p, const FieldConfig& f,
                                   const QuantumState& q, const Constants& k) {
    if (q.n < 0) throw std::domain_error("QuantumState: n must be >= 0");
    const MapCore c = map_core(p, f, q.m, k);
    DimensionlessSet d;
    d.beta1 = c.beta1;
    d.beta2 = c.beta2;
    d.delta1 = c.delta1;
    d.delta2 = c.delta2;
    d.delta3 = c.delta3;
    d.gamma = c.gamma;
    d.xi = c.xi;
    d.tau = c.tau;
    d.nu = nu_of(c);
    d.sigma_exp = c.sigma_rad >= 0.0 ? 0.5 + std::sqrt(c.sigma_rad)
                                     : std::numeric_limits<double>::quiet_NaN();
    return d;
}

double lambda_exponent(const DimensionlessSet& d, const PotentialParams& p,
                       const Constants& k, double energy) {
    const double eps = -energy / energy_scale(p, k);
    const double rad = eps + d.gamma;
    if (rad < 0.0) throw std::domain_error("lambda_exponent: radicand < 0");
    return std::sqrt(rad);
}

double energy_2d(const PotentialParams& p, const FieldConfig& f,
                 const QuantumState& q, const Constants& k) {
    return energy_impl(p, f, q.m, q.n, k);
}

double energy_2d(const PotentialParams& p, const FieldConfig& f, double m, int n,
                 const Constants& k) {
    return energy_impl(p, f, m, n, k);
}

double energy_3d(const PotentialParams& p, int ell, int n, const Constants& k) {
    if (ell < 0) throw std::domain_error("energy_3d: ell must be >= 0");
    if (n < 0) throw std::domain_error("energy_3d: n must be >= 0");
    const double es = energy_scale(p, k);
    const double ll1 = static_cast<double>(ell) * (ell + 1);
    const double beta1 = 2.0 * k.mu * p.A / (k.hbar * k.hbar * p.alpha);
    const double beta2 = 2.0 * k.mu * p.C / (k.hbar * k.hbar);
    const double nu = 0.5 + std::sqrt(0.25 + ll1 + beta2);
    const double phi = n + nu;
    const double num = phi * phi + ll1 + beta1;
    const double lam = num / (2.0 * phi);
    return es * ll1 - es * lam * lam;
}

namespace {

struct BDerivs {
    double E, dE, d2E;
};

BDerivs energy_b_derivatives(const PotentialParams& p, const FieldConfig& f,
                             const QuantumState& q, const Constants& k) {
    const MapCore c = map_core(p, f, q.m, k);
    const double scale = std::fabs(c.delta2) + std::fabs(c.beta2) + std::fabs(c.delta1) +
                         std::fabs(c.delta3) + c.m_eff * c.m_eff;
    if (c.nu_rad < 0.0)
        throw std::domain_error("no bound spectrum under these fields (nu radicand < 0)");
    if (c.nu_rad <= 1e-12 * std::max(1.0, scale))
        throw std::domain_error("energy_dB: derivative singular (nu radicand ~ 0)");

    const double h2 = k.hbar * k.hbar;
    const double a = p.alpha;
    const double t = c.tau;
    // B-derivatives of the dimensionless parameters.
    const double d1p = 2.0 * q.m * t / (k.hbar * a);
    const double d2p = 2.0 * t * t * f.B / (h2 * a * a);
    const double d2pp = 2.0 * t * t / (h2 * a * a);
    const double d3p = t * t * f.phi_AB / (h2 * a * M_PI);

    const double D = c.nu_rad;
    const double Dp = d2p - d1p - d3p;
    const double Dpp = d2pp;
    const double sqD = std::sqrt(D);
    const double nup = Dp / (2.0 * sqD);
    const double nupp = Dpp / (2.0 * sqD) - Dp * Dp / (4.0 * D * sqD);

    const double P2 = p2_of(c);
    const double P2p = d2p;
    const double P2pp = d2pp;

    const double phi = q.n + 0.5 + sqD;
    const double php = nup;
    const double phpp = nupp;

    const double lam = (P2 - phi * phi) / (2.0 * phi);
    const double lamp = P2p / (2.0 * phi) - P2 * php / (2.0 * phi * phi) - php / 2.0;
    const double lampp = P2pp / (2.0 * phi) - P2p * php / (phi * phi) -
                         P2 * phpp / (2.0 * phi * phi) + P2 * php * php / (phi * phi * phi) -
                         phpp / 2.0;

    const double es = energy_scale(p, k);
    BDerivs out;
    out.E = es * c.gamma - es * lam * lam;
    out.dE = -2.0 * es * lam * lamp;
    out.d2E = -2.0 * es * (lamp * lamp + lam * lampp);
    return out;
}

} // namespace

double energy_dB(const PotentialParams& p, const FieldConfig& f,
                 const QuantumState& q, const Constants& k) {
    return energy_b_derivatives(p, f, q, k).dE;
}

double energy_d2B(const PotentialParams& p, const FieldConfig& f,
                  const QuantumState& q, const Constants& k) {
    return energy_b_derivatives(p, f, q, k).d2E;
}

SpectrumCutoffs cutoffs(const PotentialParams& p, const FieldConfig& f, int m,
                        const Constants& k) {
    const MapCore c = map_core(p, f, m, k);
    const double nu = nu_of(c);
    SpectrumCutoffs s;
    s.P1 = energy_scale(p, k) * c.gamma;
    s.P2 = p2_of(c);
    const double neg_p2 = -s.P2;
    s.eta_max = (neg_p2 > nu * nu) ? (-nu + std::sqrt(neg_p2)) : 0.0;
    s.n_max = static_cast<int>(std::floor(s.eta_max));
    return s;
}

double quantization_residual(const PotentialParams& p, const FieldConfig& f,
                             const QuantumState& q, const Constants& k, double energy) {
    if (q.n < 0) throw std::domain_error("QuantumState: n must be >= 0");
    const MapCore c = map_core(p, f, q.m, k);
    const double nu = nu_of(c);
    const double eps = -energy / energy_scale(p, k);

    const double lam_rad = eps + c.gamma;
    const double root_rad = eps - c.beta1 + c.delta2;
    if (lam_rad < 0.0 || root_rad < 0.0)
        throw std::domain_error("quantization_residual: radicand < 0 at this energy");

    // Branch bookkeeping: the signed exponent carries the sign of
    // P2 - (n+nu)^2 and the root the sign of (lambda + nu + n); with
    // these choices the defect vanishes exactly at the quantized energy.
    const double phi = q.n + nu;
    const double lam_sign = (p2_of(c) - phi * phi) >= 0.0 ? 1.0 : -1.0;
    const double lam = lam_sign * std::sqrt(lam_rad);
    const double inner = lam + nu + q.n;
    const double root_sign = inner >= 0.0 ? 1.0 : -1.0;
    return inner - root_sign * std::sqrt(root_rad);
}

} // namespace skp
