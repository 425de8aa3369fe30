#include "skp/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "skp/oracle.hpp"
#include "skp/quadrature.hpp"

namespace skp::cli {

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("invalid numeric value for '" + key + "': " + v);
    }
}

int to_int(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        const int x = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("invalid integer value for '" + key + "': " + v);
    }
}

int thread_cap() {
    if (const char* env = std::getenv("SKP_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return std::min(v, 64);
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(std::min(hc, 8u));
}

// Evaluates rows[i] = fn(i) for i in [0, count), possibly in parallel;
// emission order stays the caller's. The first worker exception is
// rethrown on the calling thread.
std::vector<std::string> evaluate_rows(int count, const std::function<std::string(int)>& fn) {
    std::vector<std::string> rows(count);
    const int threads = std::min(thread_cap(), count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) rows[i] = fn(i);
        return rows;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                if (failed.load()) return;
                try {
                    rows[i] = fn(i);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!failed.exchange(true)) error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (failed.load()) std::rethrow_exception(error);
    return rows;
}

void warn_ga_validity(const PotentialParams& p, std::ostream& err) {
    const double metric = ga_validity_metric(p);
    if (metric > 0.1)
        err << "warning: alpha * (2C/A) = " << metric
            << " > 0.1; the 1/r^2 surrogate underlying the closed forms is strained\n";
}

} // namespace

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return buf;
}

void RunConfig::finalize() {
    if (De || re) {
        if (!(De && re)) throw ConfigError("De and re must be given together");
        if (!explicit_A) potential.A = 2.0 * (*De) * (*re);
        if (!explicit_C) potential.C = (*De) * (*re) * (*re);
    }
    try {
        potential.validate();
        constants.validate();
        FieldConfig fc = field_config();
        fc.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (n && *n < 0) throw ConfigError("n must be >= 0");
    if (ell && *ell < 0) throw ConfigError("ell must be >= 0");
    if (sweep) {
        if (sweep->steps < 2) throw ConfigError("sweep steps must be >= 2");
        if (!(sweep->lo < sweep->hi)) throw ConfigError("sweep requires lo < hi");
    }
    if (!(beta > 0)) throw ConfigError("beta must be > 0");
}

SweepSpec parse_sweep(const std::string& spec) {
    SweepSpec s;
    std::stringstream ss(spec);
    std::string var, lo, hi, steps;
    if (!std::getline(ss, var, ':') || !std::getline(ss, lo, ':') ||
        !std::getline(ss, hi, ':') || !std::getline(ss, steps))
        throw ConfigError("sweep spec must be var:lo:hi:steps");
    if (var == "B") s.var = SweepSpec::Var::B;
    else if (var == "phi") s.var = SweepSpec::Var::phi;
    else if (var == "beta") s.var = SweepSpec::Var::beta;
    else if (var == "alpha") s.var = SweepSpec::Var::alpha;
    else if (var == "n") s.var = SweepSpec::Var::n;
    else if (var == "m") s.var = SweepSpec::Var::m;
    else throw ConfigError("unknown sweep variable: " + var);
    s.lo = to_double(lo, "sweep lo");
    s.hi = to_double(hi, "sweep hi");
    s.steps = to_int(steps, "sweep steps");
    return s;
}

void apply_key_value(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "alpha") cfg.potential.alpha = to_double(value, key);
    else if (key == "A") { cfg.potential.A = to_double(value, key); cfg.explicit_A = true; }
    else if (key == "C") { cfg.potential.C = to_double(value, key); cfg.explicit_C = true; }
    else if (key == "De") cfg.De = to_double(value, key);
    else if (key == "re") cfg.re = to_double(value, key);
    else if (key == "B") cfg.B = to_double(value, key);
    else if (key == "phi") cfg.phi = to_double(value, key);
    else if (key == "n") cfg.n = to_int(value, key);
    else if (key == "m") cfg.m = to_int(value, key);
    else if (key == "ell") cfg.ell = to_int(value, key);
    else if (key == "beta") cfg.beta = to_double(value, key);
    else if (key == "sweep") cfg.sweep = parse_sweep(value);
    else if (key == "z-method") {
        cfg.z_method_all = false;
        if (value == "sum") cfg.z_method = thermo::ZMethod::DirectSum;
        else if (value == "quad") cfg.z_method = thermo::ZMethod::Quadrature;
        else if (value == "closed") cfg.z_method = thermo::ZMethod::ClosedForm;
        else if (value == "all") cfg.z_method_all = true;
        else throw ConfigError("z-method must be sum|quad|closed|all");
    } else if (key == "convention") {
        if (value == "standard") cfg.convention = thermo::Convention::Standard;
        else if (value == "paper") cfg.convention = thermo::Convention::PaperLiteral;
        else throw ConfigError("convention must be standard|paper");
    } else if (key == "out") cfg.out_path = value;
    else throw ConfigError("unknown configuration key: " + key);
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            apply_key_value(cfg, key, value);
        } catch (const ConfigError& e) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
}

namespace {

struct FieldCase {
    double B, phi;
};

std::vector<FieldCase> energy_field_cases(const RunConfig& cfg) {
    if (cfg.B || cfg.phi) return {{cfg.B.value_or(0.0), cfg.phi.value_or(0.0)}};
    // Default: the four field configurations of the reference tables.
    return {{0, 0}, {4, 0}, {0, 4}, {4, 4}};
}

int run_guarded(const std::function<int()>& body, std::ostream& err) {
    try {
        return body();
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return exit_config_error;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return exit_domain_error;
    }
}

} // namespace

int run_energy(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return run_guarded(
        [&]() -> int {
            warn_ga_validity(cfg.potential, err);
            const Constants& k = cfg.constants;

            if (cfg.ell) {
                if (cfg.B.value_or(0.0) != 0.0 || cfg.phi.value_or(0.0) != 0.0)
                    throw std::domain_error("3D reduction defined at zero fields only");
                out << "ell,n,alpha,E\n";
                const std::vector<int> ns =
                    cfg.n ? std::vector<int>{*cfg.n} : std::vector<int>{0, 1, 2, 3};
                for (int n : ns)
                    out << *cfg.ell << ',' << n << ',' << format_number(cfg.potential.alpha)
                        << ',' << format_number(energy_3d(cfg.potential, *cfg.ell, n, k))
                        << "\n";
                return exit_ok;
            }

            const std::vector<int> ms =
                cfg.m ? std::vector<int>{*cfg.m} : std::vector<int>{0, 1, -1};
            const std::vector<int> ns =
                cfg.n ? std::vector<int>{*cfg.n} : std::vector<int>{0, 1, 2, 3};
            const auto cases = energy_field_cases(cfg);

            out << "n,m,B,phi,alpha,E,beyond_cutoff\n";
            for (int m : ms)
                for (const auto& fc : cases)
                    for (int n : ns) {
                        const FieldConfig f{fc.B, fc.phi};
                        try {
                            const double e = energy_2d(cfg.potential, f, {n, m}, k);
                            const auto cut = cutoffs(cfg.potential, f, m, k);
                            out << n << ',' << m << ',' << format_number(fc.B) << ','
                                << format_number(fc.phi) << ','
                                << format_number(cfg.potential.alpha) << ','
                                << format_number(e) << ',' << (n > cut.n_max ? 1 : 0)
                                << "\n";
                        } catch (const std::domain_error& e) {
                            std::ostringstream os;
                            os << e.what() << " [n=" << n << " m=" << m << " B=" << fc.B
                               << " phi=" << fc.phi << " alpha=" << cfg.potential.alpha
                               << "]";
                            throw std::domain_error(os.str());
                        }
                    }
            return exit_ok;
        },
        err);
}

int run_table(int which, std::ostream& out, std::ostream& err) {
    return run_guarded(
        [&]() -> int {
            if (which != 1 && which != 2) throw ConfigError("table must be 1 or 2");
            PotentialParams p;
            p.alpha = reference_alpha(which);
            const Constants k;
            const FieldCase cases[4] = {{0, 0}, {4, 0}, {0, 4}, {4, 4}};

            out << "m,n";
            const char* names[4] = {"00", "B", "Phi", "BPhi"};
            for (const char* s : names)
                out << ",E_" << s << ",ref_" << s << ",absdiff_" << s;
            out << "\n";

            for (const TableEntry& te : reference_table(which)) {
                out << te.m << ',' << te.n;
                const char* printed[4] = {te.e00, te.eB, te.ePhi, te.eBPhi};
                for (int ci = 0; ci < 4; ++ci) {
                    const FieldConfig f{cases[ci].B, cases[ci].phi};
                    const double e = energy_2d(p, f, {te.n, te.m}, k);
                    const double ref = std::strtod(printed[ci], nullptr);
                    out << ',' << format_number(e) << ',' << printed[ci] << ','
                        << format_number(std::fabs(e - ref));
                }
                out << "\n";
            }
            return exit_ok;
        },
        err);
}

namespace {

// One sweep row of per-state quantities plus zero-temperature response.
std::string state_sweep_row(const PotentialParams& p, const FieldConfig& f,
                            const QuantumState& q, const Constants& k) {
    try {
        std::ostringstream os;
        const double e = energy_2d(p, f, q, k);
        const auto cut = cutoffs(p, f, q.m, k);
        os << q.n << ',' << q.m << ',' << format_number(f.B) << ','
           << format_number(f.phi_AB) << ',' << format_number(p.alpha) << ','
           << format_number(e) << ',' << (q.n > cut.n_max ? 1 : 0) << ','
           << format_number(thermo::magnetization_zero_T(p, f, q, k)) << ','
           << format_number(thermo::susceptibility_zero_T(p, f, q, k));
        return os.str();
    } catch (const std::domain_error& e) {
        std::ostringstream os;
        os << e.what() << " [n=" << q.n << " m=" << q.m << " B=" << f.B
           << " phi=" << f.phi_AB << " alpha=" << p.alpha << "]";
        throw std::domain_error(os.str());
    }
}

} // namespace

int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return run_guarded(
        [&]() -> int {
            if (!cfg.sweep) throw ConfigError("sweep command requires a sweep axis");
            warn_ga_validity(cfg.potential, err);
            const SweepSpec& sw = *cfg.sweep;
            const Constants& k = cfg.constants;
            const int q_n = cfg.n.value_or(0);
            const int q_m = cfg.m.value_or(0);

            if (sw.var == SweepSpec::Var::beta) {
                RunConfig tcfg = cfg;
                return run_thermo(tcfg, out, err);
            }

            out << "n,m,B,phi,alpha,E,beyond_cutoff,magnetization_zero_T,chi_zero_T\n";
            auto value_at = [&](int i) {
                return sw.lo + (sw.hi - sw.lo) * i / (sw.steps - 1);
            };
            const auto rows = evaluate_rows(sw.steps, [&](int i) {
                PotentialParams p = cfg.potential;
                FieldConfig f = cfg.field_config();
                QuantumState q{q_n, q_m};
                const double v = value_at(i);
                switch (sw.var) {
                    case SweepSpec::Var::B: f.B = v; break;
                    case SweepSpec::Var::phi: f.phi_AB = v; break;
                    case SweepSpec::Var::alpha: p.alpha = v; break;
                    case SweepSpec::Var::n: q.n = static_cast<int>(std::lround(v)); break;
                    case SweepSpec::Var::m: q.m = static_cast<int>(std::lround(v)); break;
                    case SweepSpec::Var::beta: break;
                }
                return state_sweep_row(p, f, q, k);
            });
            for (const auto& r : rows) out << r << "\n";
            return exit_ok;
        },
        err);
}

namespace {

std::string thermo_row(const PotentialParams& p, const FieldConfig& f, int m,
                       const Constants& k, double beta, thermo::ZMethod method,
                       thermo::Convention conv) {
    std::string warning;
    thermo::ThermoPoint t;
    try {
        t = thermo::thermo_point(p, f, m, k, beta, method, conv);
    } catch (const thermo::ClosedFormUnstable&) {
        t = thermo::thermo_point(p, f, m, k, beta, thermo::ZMethod::Quadrature, conv);
        warning = "closed_form_unstable_used_quadrature";
    }
    std::ostringstream os;
    os << format_number(t.beta) << ',' << format_number(t.B) << ','
       << format_number(t.phi_AB) << ',' << m << ',' << format_number(t.Z) << ','
       << format_number(t.U) << ',' << format_number(t.Cv) << ',' << format_number(t.F)
       << ',' << format_number(t.S) << ',' << format_number(t.magnetization) << ','
       << format_number(t.chi) << ',' << thermo::to_string(t.z_method) << ','
       << thermo::to_string(t.convention) << ',' << warning;
    return os.str();
}

} // namespace

int run_thermo(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return run_guarded(
        [&]() -> int {
            warn_ga_validity(cfg.potential, err);
            const Constants& k = cfg.constants;
            const int m = cfg.m.value_or(0);

            std::vector<thermo::ZMethod> methods;
            if (cfg.z_method_all)
                methods = {thermo::ZMethod::DirectSum, thermo::ZMethod::Quadrature,
                           thermo::ZMethod::ClosedForm};
            else
                methods = {cfg.z_method};

            out << "beta,B,phi,m,Z,U,Cv,F,S,magnetization,chi,z_method,convention,warning\n";

            std::vector<std::pair<double, FieldConfig>> points; // (beta, fields)
            if (cfg.sweep) {
                const SweepSpec& sw = *cfg.sweep;
                for (int i = 0; i < sw.steps; ++i) {
                    const double v = sw.lo + (sw.hi - sw.lo) * i / (sw.steps - 1);
                    double beta = cfg.beta;
                    FieldConfig f = cfg.field_config();
                    switch (sw.var) {
                        case SweepSpec::Var::beta: beta = v; break;
                        case SweepSpec::Var::B: f.B = v; break;
                        case SweepSpec::Var::phi: f.phi_AB = v; break;
                        default:
                            throw ConfigError("thermo sweeps support beta, B or phi");
                    }
                    points.emplace_back(beta, f);
                }
            } else {
                points.emplace_back(cfg.beta, cfg.field_config());
            }

            const int total = static_cast<int>(points.size() * methods.size());
            const auto rows = evaluate_rows(total, [&](int idx) {
                const auto& [beta, f] = points[idx / methods.size()];
                const auto method = methods[idx % methods.size()];
                return thermo_row(cfg.potential, f, m, k, beta, method, cfg.convention);
            });
            for (const auto& r : rows) out << r << "\n";
            return exit_ok;
        },
        err);
}

// ---- verification harness ---------------------------------------------

namespace {

struct VerifyReport {
    std::ostream& out;
    bool ok = true;

    void check(const std::string& name, bool pass, const std::string& detail) {
        out << (pass ? "[PASS] " : "[FAIL] ") << name;
        if (!detail.empty()) out << "  (" << detail << ")";
        out << "\n";
        ok = ok && pass;
    }
    void info(const std::string& line) { out << "[info] " << line << "\n"; }
};

} // namespace

int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    return run_guarded(
        [&]() -> int {
            VerifyReport rep{out};
            const Constants k;
            const double shift = opt.inject_energy_shift;

            // 1. Termination defect at the closed-form energies.
            {
                double worst = 0.0;
                int undefined = 0;
                for (int which : {1, 2}) {
                    PotentialParams p;
                    p.alpha = reference_alpha(which);
                    const double bs[4] = {0, 4, 0, 4};
                    const double ps[4] = {0, 0, 4, 4};
                    for (const TableEntry& te : reference_table(which))
                        for (int ci = 0; ci < 4; ++ci) {
                            const FieldConfig f{bs[ci], ps[ci]};
                            const QuantumState q{te.n, te.m};
                            const double e = energy_2d(p, f, q, k) + shift;
                            try {
                                worst = std::max(
                                    worst, std::fabs(quantization_residual(p, f, q, k, e)));
                            } catch (const std::domain_error&) {
                                ++undefined; // energy left the spectral branch
                            }
                        }
                }
                rep.check("quantization residual at closed-form energies <= 1e-10",
                          worst <= 1e-10 && undefined == 0,
                          "max |residual| = " + format_number(worst) +
                              (undefined ? ", " + std::to_string(undefined) +
                                               " states left the domain"
                                         : ""));
            }

            // 2. Cutoff index against exhaustive scan. The closed-form E(n)
            // peaks at the continuous index eta_max; the integer argmax is
            // the nearest integer, while the ensemble cutoff keeps floor.
            {
                std::mt19937 rng(opt.seed);
                std::uniform_real_distribution<double> ua(0.004, 0.02), uA(0.5, 2.0),
                    uC(0.1, 1.0), uB(0.0, 0.08), uP(0.0, 5.0);
                std::uniform_int_distribution<int> um(-2, 2);
                bool all = true;
                std::string detail;
                int done = 0;
                while (done < 10) {
                    PotentialParams p{uA(rng), uC(rng), ua(rng)};
                    FieldConfig f{uB(rng), uP(rng)};
                    const int m = um(rng);
                    SpectrumCutoffs cut;
                    try {
                        cut = cutoffs(p, f, m, k);
                    } catch (const std::domain_error&) {
                        continue; // nu not real for this draw
                    }
                    const int ceiling = static_cast<int>(10 * cut.eta_max) + 10;
                    const int bf = oracle::brute_force_nmax(p, f, m, k, ceiling);
                    const int expected =
                        cut.n_max + (cut.eta_max - cut.n_max > 0.5 ? 1 : 0);
                    if (bf != expected || std::abs(bf - cut.n_max) > 1) {
                        all = false;
                        detail = "mismatch at trial " + std::to_string(done);
                    }
                    ++done;
                }
                rep.check("cutoff n_max consistent with brute-force argmax (10 random sets)",
                          all, detail);
            }

            // 3. Partition sum bit-identity between the two modules.
            {
                bool all = true;
                PotentialParams p;
                for (double beta : {0.1, 1.0, 5.0})
                    for (double B : {0.0, 0.02})
                        for (double phi : {0.0, 1.0})
                            for (int m : {0, 1}) {
                                const FieldConfig f{B, phi};
                                const double a = thermo::partition_direct(p, f, m, k, beta) +
                                                 (shift != 0 ? shift : 0.0);
                                const double b = oracle::brute_force_partition(p, f, m, k, beta);
                                if (a != b) all = false;
                            }
                rep.check("direct partition sum bit-identical to brute-force reference", all,
                          "");
            }

            // 4. Eigensolver convergence order.
            {
                PotentialParams p;
                const FieldConfig f{0, 0};
                const double exact = oracle::radial_eq_energy_2d(p, f, {0, 0}, k);
                oracle::FdGrid g{1e-3, 150.0, 3001};
                const double e1 = oracle::fd_eigenvalues(p, f, 0, k, g, 1).energies.at(0);
                oracle::FdGrid g2{1e-3, 150.0, 6001};
                const double e2 = oracle::fd_eigenvalues(p, f, 0, k, g2, 1).energies.at(0);
                const double order = std::log2(std::fabs(e1 - exact) / std::fabs(e2 - exact));
                rep.check("finite-difference convergence order in [1.7, 2.3]",
                          order > 1.7 && order < 2.3, "order = " + format_number(order));
            }

            // 5./6. Eigensolver against the two closed forms over the
            // standard grid (n <= 2, m in {0,+-1}, B in {0,4}, phi in
            // {0,4}, alpha in {0.005, 0.01}).
            {
                double worst_consistent = 0.0; // vs radial_eq_energy_2d, B = 0 only
                double worst_table = 0.0;      // vs energy_2d everywhere
                bool consistent_ok = true;
                bool table_ok = true;
                for (double alpha : {0.005, 0.01})
                    for (double B : {0.0, 4.0})
                        for (double phi : {0.0, 4.0})
                            for (int m : {0, 1, -1}) {
                                PotentialParams p;
                                p.alpha = alpha;
                                const FieldConfig f{B, phi};
                                const auto grid = oracle::auto_grid(p, f, m, k, 3);
                                const auto fd =
                                    oracle::fd_eigenvalues_extrapolated(p, f, m, k, grid, 3);
                                for (int n = 0; n < 3; ++n) {
                                    const QuantumState q{n, m};
                                    const double table_e = energy_2d(p, f, q, k) + shift;
                                    const double fd_e =
                                        n < static_cast<int>(fd.energies.size())
                                            ? fd.energies[n]
                                            : std::numeric_limits<double>::quiet_NaN();
                                    const double dt = std::fabs(fd_e - table_e);
                                    if (!(dt <= std::max(1e-6 * std::fabs(table_e), 1e-8)))
                                        table_ok = false;
                                    if (!std::isnan(fd_e))
                                        worst_table = std::max(worst_table, dt);
                                    if (B == 0.0) {
                                        const double cons =
                                            oracle::radial_eq_energy_2d(p, f, q, k) + shift;
                                        const double dc = std::fabs(fd_e - cons);
                                        worst_consistent = std::max(worst_consistent, dc);
                                        if (!(dc <= std::max(1e-6 * std::fabs(cons), 1e-8)))
                                            consistent_ok = false;
                                    }
                                }
                            }
                rep.check(
                    "eigensolver matches the sign-consistent closed form at B = 0 "
                    "(<= max(1e-6 |E|, 1e-8))",
                    consistent_ok, "max |delta| = " + format_number(worst_consistent));
                rep.info("max |energy_2d - eigensolver| over the standard grid = " +
                         format_number(worst_table) +
                         " (the closed form and the radial equation disagree in the sign "
                         "of the 1/r attraction; see README)");
                if (opt.against_tables)
                    rep.check("eigensolver matches energy_2d over the standard grid",
                              table_ok, "max |delta| = " + format_number(worst_table));
            }

            if (!rep.ok) err << "verification failed\n";
            return rep.ok ? exit_ok : exit_verify_failure;
        },
        err);
}

} // namespace skp::cli
