#include "skp/thermo.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "skp/oracle.hpp"
#include "skp/quadrature.hpp"
#include "skp/specfun.hpp"

namespace skp::thermo {

const char* to_string(ZMethod m) {
    switch (m) {
        case ZMethod::DirectSum: return "sum";
        case ZMethod::Quadrature: return "quad";
        case ZMethod::ClosedForm: return "closed";
    }
    return "?";
}

const char* to_string(Convention c) {
    return c == Convention::Standard ? "standard" : "paper";
}

IntegralParams integral_params(const PotentialParams& p, const FieldConfig& f, int m,
                               const Constants& k) {
    const SpectrumCutoffs c = cutoffs(p, f, m, k);
    const double es2 = k.hbar * k.hbar * p.alpha * p.alpha / (8.0 * k.mu);
    IntegralParams ip;
    ip.M_coef = es2 * c.P2 * c.P2;
    ip.N_coef = es2;
    ip.W_coef = -2.0 * es2 * c.P2 - c.P1; // -hbar^2 alpha^2 P2 / (4 mu) - P1
    const DimensionlessSet d = dimensionless_map(p, f, {0, m}, k);
    ip.phi_lo = d.nu;
    ip.phi_hi = c.eta_max + d.nu;
    return ip;
}

ErfTerms closed_form_terms(const IntegralParams& ip, double beta) {
    const std::complex<double> sa = std::sqrt(std::complex<double>(-beta * ip.N_coef, 0.0));
    const std::complex<double> sb = std::sqrt(std::complex<double>(-beta * ip.M_coef, 0.0));
    const double eta = ip.phi_hi - ip.phi_lo;
    ErfTerms t;
    t.lam1 = sb / ip.phi_lo;       // sqrt(-M beta) / nu
    t.lam2 = sa * ip.phi_lo;       // sqrt(-N beta) nu
    t.pi1 = sa * eta;              // sqrt(-N beta) eta
    t.pi2 = sb / ip.phi_hi;        // sqrt(-M beta) / (eta + nu)
    t.xi_term = t.pi1 + t.lam2 - t.pi2;
    return t;
}

namespace {

double energy_phi(const IntegralParams& ip, double phi) {
    // E(phi) = -(M/phi^2 + N phi^2 + W)
    return -(ip.M_coef / (phi * phi) + ip.N_coef * phi * phi + ip.W_coef);
}

void require_beta(double beta) {
    if (!(beta > 0)) throw std::domain_error("partition function: beta must be > 0");
}

} // namespace

double partition_direct(const PotentialParams& p, const FieldConfig& f, int m,
                        const Constants& k, double beta) {
    require_beta(beta);
    const SpectrumCutoffs c = cutoffs(p, f, m, k);
    double z = 0.0;
    for (int n = 0; n <= c.n_max; ++n)
        z += std::exp(-beta * energy_2d(p, f, {n, m}, k));
    return z;
}

double partition_quadrature(const PotentialParams& p, const FieldConfig& f, int m,
                            const Constants& k, double beta) {
    require_beta(beta);
    const IntegralParams ip = integral_params(p, f, m, k);
    if (!(ip.phi_hi > ip.phi_lo))
        throw std::domain_error("partition_quadrature: classical limit undefined (eta_max = 0)");
    auto integrand = [&](double phi) { return std::exp(-beta * energy_phi(ip, phi)); };
    return quadrature::adaptive_simpson(integrand, ip.phi_lo, ip.phi_hi, 1e-11);
}

double partition_closed(const PotentialParams& p, const FieldConfig& f, int m,
                        const Constants& k, double beta) {
    require_beta(beta);
    const IntegralParams ip = integral_params(p, f, m, k);
    if (!(ip.phi_hi > ip.phi_lo))
        throw std::domain_error("partition_closed: classical limit undefined (eta_max = 0)");
    if (!(ip.M_coef > 0))
        throw std::domain_error("partition_closed: requires M_coef > 0");

    const double a = beta * ip.N_coef;
    const double b = beta * ip.M_coef;
    const double sqa = std::sqrt(a), sqb = std::sqrt(b);
    const double cross = 2.0 * std::sqrt(a * b);

    auto u_plus = [&](double phi) { return sqa * phi - sqb / phi; };
    auto u_minus = [&](double phi) { return sqa * phi + sqb / phi; };

    const double args[4] = {u_plus(ip.phi_hi), u_plus(ip.phi_lo), u_minus(ip.phi_hi),
                            u_minus(ip.phi_lo)};
    for (double x : args)
        if (std::fabs(x) > 30.0)
            throw ClosedFormUnstable("closed form numerically unstable; use quadrature");

    const double plus_part = specfun::erfi(args[0]) - specfun::erfi(args[1]);
    const double minus_part = specfun::erfi(args[2]) - specfun::erfi(args[3]);
    const double pref = std::sqrt(M_PI) / (4.0 * sqa);
    const double w = beta * ip.W_coef;
    const double z = pref * (std::exp(w + cross) * plus_part + std::exp(w - cross) * minus_part);
    if (!std::isfinite(z))
        throw ClosedFormUnstable("closed form numerically unstable; use quadrature");
    return z;
}

double partition_closed_complex(const PotentialParams& p, const FieldConfig& f, int m,
                                const Constants& k, double beta) {
    require_beta(beta);
    const IntegralParams ip = integral_params(p, f, m, k);
    if (!(ip.phi_hi > ip.phi_lo))
        throw std::domain_error("partition_closed_complex: classical limit undefined");
    using C = std::complex<double>;
    // Principal roots of the negative-real radicands: sqrt(-x) = i sqrt(x).
    const C sa = std::sqrt(C(-beta * ip.N_coef, 0.0)); // i sqrt(beta N)
    const C sb = std::sqrt(C(-beta * ip.M_coef, 0.0)); // i sqrt(beta M)
    auto erf_at = [&](C z) { return specfun::erf_axis(z); };
    // Antiderivative of exp(beta(M/phi^2 + N phi^2 + W)) written with
    // erf of imaginary argument:
    //   Z = e^{beta W} sqrt(pi)/(4 sa) [ e^{-2 sa sb} erf(sa phi - sb/phi)
    //                                  + e^{+2 sa sb} erf(sa phi + sb/phi) ]|_lo^hi
    // with sa sb = -sqrt(ab) real.
    const C cross = 2.0 * sa * sb;
    auto up = [&](double phi) { return sa * phi - sb / phi; };
    auto um = [&](double phi) { return sa * phi + sb / phi; };
    const C bracket = std::exp(-cross) * (erf_at(up(ip.phi_hi)) - erf_at(up(ip.phi_lo))) +
                      std::exp(cross) * (erf_at(um(ip.phi_hi)) - erf_at(um(ip.phi_lo)));
    const C z = std::exp(C(beta * ip.W_coef, 0.0)) * std::sqrt(M_PI) / (4.0 * sa) * bracket;
    if (std::fabs(z.imag()) > 1e-8 * std::max(1e-300, std::fabs(z.real())))
        throw std::runtime_error("partition_closed_complex: imaginary residue too large");
    return z.real();
}

namespace {

struct LevelData {
    std::vector<double> E, dE, d2E;
};

LevelData level_data(const PotentialParams& p, const FieldConfig& f, int m,
                     const Constants& k) {
    const SpectrumCutoffs c = cutoffs(p, f, m, k);
    LevelData d;
    d.E.reserve(c.n_max + 1);
    for (int n = 0; n <= c.n_max; ++n) {
        const QuantumState q{n, m};
        d.E.push_back(energy_2d(p, f, q, k));
        d.dE.push_back(energy_dB(p, f, q, k));
        d.d2E.push_back(energy_d2B(p, f, q, k));
    }
    return d;
}

double z_by_method(const PotentialParams& p, const FieldConfig& f, int m,
                   const Constants& k, double beta, ZMethod method) {
    switch (method) {
        case ZMethod::DirectSum: return partition_direct(p, f, m, k, beta);
        case ZMethod::Quadrature: return partition_quadrature(p, f, m, k, beta);
        case ZMethod::ClosedForm: return partition_closed(p, f, m, k, beta);
    }
    throw std::logic_error("z_by_method: bad method");
}

ThermoPoint thermo_point_direct(const PotentialParams& p, const FieldConfig& f, int m,
                                const Constants& k, double beta, Convention conv) {
    const LevelData lv = level_data(p, f, m, k);
    double Z = 0.0;
    for (double e : lv.E) Z += std::exp(-beta * e);

    double sE = 0, sE2 = 0, sD = 0, sD2 = 0, sDD = 0;
    for (std::size_t i = 0; i < lv.E.size(); ++i) {
        const double w = std::exp(-beta * lv.E[i]) / Z;
        sE += w * lv.E[i];
        sE2 += w * lv.E[i] * lv.E[i];
        sD += w * lv.dE[i];
        sD2 += w * lv.dE[i] * lv.dE[i];
        sDD += w * lv.d2E[i];
    }
    const double var_e = sE2 - sE * sE;

    ThermoPoint t;
    t.beta = beta;
    t.B = f.B;
    t.phi_AB = f.phi_AB;
    t.z_method = ZMethod::DirectSum;
    t.convention = conv;
    t.Z = Z;
    t.U = sE;
    t.F = -std::log(Z) / beta;
    t.magnetization = -sD;
    t.chi = -sDD + beta * (sD2 - sD * sD);
    if (conv == Convention::Standard) {
        t.Cv = k.k_B * beta * beta * var_e;             // -k beta^2 dU/dbeta
        t.S = k.k_B * (std::log(Z) + beta * sE);        // k beta (U - F)
    } else {
        t.Cv = -k.k_B * var_e;                          // k dU/dbeta
        t.S = -k.k_B * (std::log(Z) + beta * sE) / (beta * beta); // -k dF/dbeta
    }
    return t;
}

ThermoPoint thermo_point_numeric(const PotentialParams& p, const FieldConfig& f, int m,
                                 const Constants& k, double beta, ZMethod method,
                                 Convention conv) {
    auto lnz_of_beta = [&](double bb) {
        if (!(bb > 0)) throw std::domain_error("thermo_point: beta step left the domain");
        return std::log(z_by_method(p, f, m, k, bb, method));
    };
    auto z_at_field = [&](double bb) {
        FieldConfig ff = f;
        ff.B = bb;
        return z_by_method(p, ff, m, k, beta, method);
    };

    const double hb = 1e-6 * beta;
    if (beta - hb <= 0.0)
        throw std::domain_error("thermo_point: derivative step underflow near beta edge");

    ThermoPoint t;
    t.beta = beta;
    t.B = f.B;
    t.phi_AB = f.phi_AB;
    t.z_method = method;
    t.convention = conv;
    t.Z = z_by_method(p, f, m, k, beta, method);
    t.U = -quadrature::derivative_richardson(lnz_of_beta, beta, hb);
    t.F = -std::log(t.Z) / beta;

    // Second beta-derivative wants a larger step than the first.
    const double hb2 = 1e-4 * beta;
    const double d2lnz = quadrature::second_derivative_richardson(lnz_of_beta, beta, hb2);
    if (conv == Convention::Standard) {
        t.Cv = k.k_B * beta * beta * d2lnz;
        t.S = k.k_B * (std::log(t.Z) + beta * t.U);
    } else {
        t.Cv = -k.k_B * d2lnz; // k dU/dbeta
        t.S = -k.k_B * (std::log(t.Z) + beta * t.U) / (beta * beta);
    }

    const double hB = 1e-4 * std::max(1.0, f.B);
    auto m_of_b = [&](double bb) {
        const double dz = quadrature::derivative_richardson(z_at_field, bb, hB);
        return dz / (beta * z_at_field(bb));
    };
    t.magnetization = m_of_b(f.B);
    t.chi = quadrature::derivative_richardson(m_of_b, f.B, hB);
    return t;
}

} // namespace

ThermoPoint thermo_point(const PotentialParams& p, const FieldConfig& f, int m,
                         const Constants& k, double beta, ZMethod method, Convention conv) {
    require_beta(beta);
    if (method == ZMethod::DirectSum) return thermo_point_direct(p, f, m, k, beta, conv);
    return thermo_point_numeric(p, f, m, k, beta, method, conv);
}

double magnetization_zero_T(const PotentialParams& p, const FieldConfig& f,
                            const QuantumState& q, const Constants& k) {
    return -energy_dB(p, f, q, k);
}

double susceptibility_zero_T(const PotentialParams& p, const FieldConfig& f,
                             const QuantumState& q, const Constants& k) {
    const double h = 1e-4 * std::max(1.0, f.B);
    auto mag = [&](double b) {
        FieldConfig ff = f;
        ff.B = b;
        return magnetization_zero_T(p, ff, q, k);
    };
    return quadrature::derivative_richardson(mag, f.B, h);
}

} // namespace skp::thermo
