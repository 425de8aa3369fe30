#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "skp/model.hpp"
#include "skp/thermo.hpp"

// Command drivers behind the skp executable: configuration handling,
// CSV emission for tables / sweeps / thermodynamics, and the
// verification harness. Kept in the library so tests can drive the
// exact code paths the binary runs.

namespace skp::cli {

// Process exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verify_failure = 1;
inline constexpr int exit_config_error = 2;
inline constexpr int exit_domain_error = 3;

struct SweepSpec {
    enum class Var { B, phi, beta, alpha, n, m };
    Var var = Var::B;
    double lo = 0, hi = 1;
    int steps = 2; // >= 2, lo < hi
};

struct RunConfig {
    PotentialParams potential;          // A, C, alpha (after finalize())
    std::optional<double> De, re;       // alternative potential inputs
    bool explicit_A = false, explicit_C = false;
    Constants constants;
    std::optional<double> B, phi;       // unset -> command-specific defaults
    std::optional<int> n, m, ell;
    double beta = 1.0;
    std::optional<SweepSpec> sweep;
    thermo::ZMethod z_method = thermo::ZMethod::DirectSum;
    bool z_method_all = false;
    thermo::Convention convention = thermo::Convention::Standard;
    std::string out_path; // empty -> stdout

    // Resolves De/re into A and C (explicit A/C win) and validates.
    // Throws std::runtime_error on inconsistent input.
    void finalize();
    FieldConfig field_config() const { return {B.value_or(0.0), phi.value_or(0.0)}; }
};

// `key = value` per line, '#' comments, keys exactly the CLI flag names.
// Throws std::runtime_error with a line diagnostic on parse failure.
void apply_config_file(RunConfig& cfg, const std::string& path);
void apply_key_value(RunConfig& cfg, const std::string& key, const std::string& value);
SweepSpec parse_sweep(const std::string& spec); // "var:lo:hi:steps"

// Fixed CSV formatting: 12 significant digits, scientific, '.' decimal,
// ',' separator, header row, LF line endings.
std::string format_number(double v);

int run_energy(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_table(int which, std::ostream& out, std::ostream& err);
int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_thermo(const RunConfig& cfg, std::ostream& out, std::ostream& err);

struct VerifyOptions {
    bool against_tables = false;   // gate the eigensolver against energy_2d
    double inject_energy_shift = 0; // test hook: perturb closed-form energies
    unsigned seed = 20240817;
};
int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);

// Built-in reference eigenvalue tables (printed strings preserved).
struct TableEntry {
    int m, n;
    const char* e00;   // B=0,   phi=0
    const char* eB;    // B=4,   phi=0
    const char* ePhi;  // B=0,   phi=4
    const char* eBPhi; // B=4,   phi=4
};
const std::vector<TableEntry>& reference_table(int which); // 1 or 2
double reference_alpha(int which);
// Half a unit in the last printed decimal digit.
double printed_tolerance(const char* printed);

} // namespace skp::cli
