#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "skp/cli.hpp"

namespace {

// Registers the shared model/field/thermo options on a subcommand. The
// collected (key, value) pairs are applied after any --config file so
// command-line flags win.
struct OptionCapture {
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string config_path;

    void add_to(CLI::App* cmd) {
        auto capture = [this](const std::string& key) {
            return [this, key](const std::string& v) {
                pairs.emplace_back(key, v);
                return true;
            };
        };
        cmd->add_option("--config", config_path, "configuration file (key = value lines)");
        for (const char* key : {"alpha", "A", "C", "De", "re", "B", "phi", "beta"})
            cmd->add_option_function<std::string>("--" + std::string(key), capture(key))
                ->expected(1);
        for (const char* key : {"n", "m", "ell"})
            cmd->add_option_function<std::string>("--" + std::string(key), capture(key))
                ->expected(1);
        cmd->add_option_function<std::string>("--sweep", capture("sweep"),
                                              "var:lo:hi:steps with var in B|phi|beta|alpha|n|m")
            ->expected(1);
        cmd->add_option_function<std::string>("--z-method", capture("z-method"),
                                              "sum|quad|closed|all")
            ->expected(1);
        cmd->add_option_function<std::string>("--convention", capture("convention"),
                                              "standard|paper")
            ->expected(1);
        cmd->add_option_function<std::string>("--out", capture("out"), "output CSV path")
            ->expected(1);
    }

    int build(skp::cli::RunConfig& cfg) {
        try {
            if (!config_path.empty()) skp::cli::apply_config_file(cfg, config_path);
            for (const auto& [k, v] : pairs) skp::cli::apply_key_value(cfg, k, v);
            cfg.finalize();
        } catch (const std::exception& e) {
            std::cerr << "config error: " << e.what() << "\n";
            return skp::cli::exit_config_error;
        }
        return skp::cli::exit_ok;
    }
};

int with_output(const skp::cli::RunConfig& cfg,
                const std::function<int(std::ostream&)>& body) {
    if (cfg.out_path.empty()) return body(std::cout);
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) {
        std::cerr << "config error: cannot open output file " << cfg.out_path << "\n";
        return skp::cli::exit_config_error;
    }
    return body(out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"screened Kratzer potential under magnetic and AB-flux fields: "
                 "spectra, partition function, thermodynamic and magnetic response"};
    app.require_subcommand(1);

    auto* energy = app.add_subcommand("energy", "closed-form eigenvalues as CSV");
    auto* table = app.add_subcommand("table", "built-in reference eigenvalue tables");
    auto* sweep = app.add_subcommand("sweep", "parameter sweep of per-state quantities");
    auto* thermo = app.add_subcommand("thermo", "thermodynamic functions at finite beta");
    auto* verify = app.add_subcommand("verify", "run the independent numerical checks");

    OptionCapture energy_opts, table_opts, sweep_opts, thermo_opts;
    energy_opts.add_to(energy);
    sweep_opts.add_to(sweep);
    thermo_opts.add_to(thermo);

    int table_which = 1;
    table->add_option("--table", table_which, "table number (1 or 2)");
    std::string table_out;
    table->add_option("--out", table_out, "output CSV path");

    skp::cli::VerifyOptions vopt;
    verify->add_flag("--gate-tables", vopt.against_tables,
                     "also gate the eigensolver against the energy_2d closed form");
    verify->add_option("--inject-energy-shift", vopt.inject_energy_shift,
                       "test hook: perturb closed-form energies by this amount");
    verify->add_option("--seed", vopt.seed, "seed for randomized checks");

    CLI11_PARSE(app, argc, argv);

    if (table->parsed()) {
        skp::cli::RunConfig cfg;
        cfg.out_path = table_out;
        return with_output(cfg, [&](std::ostream& out) {
            return skp::cli::run_table(table_which, out, std::cerr);
        });
    }
    if (verify->parsed()) return skp::cli::run_verify(vopt, std::cout, std::cerr);

    OptionCapture* opts = energy->parsed() ? &energy_opts
                          : sweep->parsed() ? &sweep_opts
                                            : &thermo_opts;
    skp::cli::RunConfig cfg;
    if (const int rc = opts->build(cfg); rc != skp::cli::exit_ok) return rc;

    return with_output(cfg, [&](std::ostream& out) {
        if (energy->parsed()) return skp::cli::run_energy(cfg, out, std::cerr);
        if (sweep->parsed()) return skp::cli::run_sweep(cfg, out, std::cerr);
        return skp::cli::run_thermo(cfg, out, std::cerr);
    });
}
