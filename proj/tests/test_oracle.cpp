#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "skp/model.hpp"
#include "skp/oracle.hpp"

using namespace skp;

namespace {
const Constants natural{};
const PotentialParams table5{1.0, 0.5, 0.005};
const PotentialParams table10{1.0, 0.5, 0.01};
} // namespace

TEST_CASE("effective_potential term structure") {
    SUBCASE("zero fields reduce to the three-term form") {
        const FieldConfig f{0, 0};
        for (double r : {0.5, 3.0, 40.0, 700.0}) {
            const double a = table5.alpha;
            const double s = std::exp(-a * r);
            const double d = -std::expm1(-a * r);
            const double beta1 = 2.0 / a, beta2 = 1.0, gamma = -0.25;
            const double expect =
                a * a * (beta1 * s / d - beta2 * s / (d * d) - gamma / (d * d));
            CHECK(oracle::effective_potential(table5, f, 0, natural, r) ==
                  doctest::Approx(expect).epsilon(1e-14));
        }
    }
    SUBCASE("approaches its r -> inf limit exponentially") {
        const FieldConfig f{4, 4};
        for (int m : {0, 1, -1}) {
            const double limit = -(dimensionless_map(table5, f, {0, m}, natural).gamma) *
                                 table5.alpha * table5.alpha;
            // Residuals track exp(-alpha r) down to the rounding floor of
            // the limit itself.
            const double r30 = std::fabs(
                oracle::effective_potential(table5, f, m, natural, 30.0 / table5.alpha) -
                limit);
            const double r40 = std::fabs(
                oracle::effective_potential(table5, f, m, natural, 40.0 / table5.alpha) -
                limit);
            const double r80 = std::fabs(
                oracle::effective_potential(table5, f, m, natural, 80.0 / table5.alpha) -
                limit);
            CHECK(r40 < 2e-4 * r30); // ~ e^{-10}
            CHECK(r80 <= 1e-18);     // rounding floor of a ~1e-4 limit
        }
    }
    SUBCASE("the linear-in-m field term flips sign with m") {
        const FieldConfig f{2, 0};
        const double a2 = table5.alpha * table5.alpha;
        for (double r : {1.0, 10.0, 200.0}) {
            const double up = oracle::effective_potential(table5, f, 1, natural, r);
            const double dn = oracle::effective_potential(table5, f, -1, natural, r);
            // gamma is even in m, so the difference isolates the delta1 term.
            const double d1 = dimensionless_map(table5, f, {0, 1}, natural).delta1;
            const double s = std::exp(-table5.alpha * r);
            const double den = -std::expm1(-table5.alpha * r);
            const double expect = 2.0 * a2 * d1 * s / (den * den);
            CHECK(up - dn == doctest::Approx(expect).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(oracle::effective_potential(table5, {0, 0}, 0, natural, 0.0),
                    std::domain_error);
}

TEST_CASE("fd_eigenvalues on the default-style grid") {
    const oracle::FdGrid g{1e-3, 2000.0, 20001};
    const auto r = oracle::fd_eigenvalues(table5, {0, 0}, 0, natural, g, 1);
    REQUIRE(r.energies.size() == 1);
    // O(h^2)-accurate lowest eigenvalue of the discretized radial
    // equation; the sign-consistent closed form is its h -> 0 limit.
    const double exact = oracle::radial_eq_energy_2d(table5, {0, 0}, {0, 0}, natural);
    CHECK(std::fabs(r.energies[0] - exact) < 1e-3);
}

TEST_CASE("fd convergence is second order and Richardson improves it") {
    const FieldConfig f{0, 0};
    const double exact = oracle::radial_eq_energy_2d(table5, f, {0, 0}, natural);
    const oracle::FdGrid g1{1e-4, 150.0, 4001};
    const oracle::FdGrid g2{1e-4, 150.0, 8001};
    const double e1 = oracle::fd_eigenvalues(table5, f, 0, natural, g1, 1).energies.at(0);
    const double e2 = oracle::fd_eigenvalues(table5, f, 0, natural, g2, 1).energies.at(0);
    const double order = std::log2(std::fabs(e1 - exact) / std::fabs(e2 - exact));
    CHECK(order > 1.7);
    CHECK(order < 2.3);
    const double er =
        oracle::fd_eigenvalues_extrapolated(table5, f, 0, natural, g1, 1).energies.at(0);
    CHECK(std::fabs(er - exact) < std::fabs(e2 - exact));
}

TEST_CASE("fd eigenvalues match the sign-consistent closed form") {
    // A cross-section of the full verification grid (kept small for speed).
    struct Cfg {
        double alpha, B, phi;
        int m;
    };
    for (const Cfg c : {Cfg{0.005, 0, 0, 0}, Cfg{0.005, 0, 4, -1}, Cfg{0.01, 0, 4, 1}}) {
        PotentialParams p{1.0, 0.5, c.alpha};
        const FieldConfig f{c.B, c.phi};
        const auto grid = oracle::auto_grid(p, f, c.m, natural, 3);
        const auto fd = oracle::fd_eigenvalues_extrapolated(p, f, c.m, natural, grid, 3);
        REQUIRE(fd.energies.size() == 3);
        for (int n = 0; n < 3; ++n) {
            const double ref = oracle::radial_eq_energy_2d(p, f, {n, c.m}, natural);
            CHECK(std::fabs(fd.energies[n] - ref) <= std::max(1e-6 * std::fabs(ref), 1e-8));
        }
    }
}

TEST_CASE("fd at B = 4: presence and absence of bound states") {
    // m = 0: no square-integrable level exists; m = -1: exactly one.
    PotentialParams p = table5;
    {
        const FieldConfig f{4, 0};
        CHECK(oracle::radial_eq_state_count(p, f, 0, natural) == 0);
        const auto g = oracle::auto_grid(p, f, 0, natural, 2);
        const auto fd = oracle::fd_eigenvalues(p, f, 0, natural, g, 2);
        CHECK(fd.truncated);
        CHECK(fd.energies.empty());
    }
    {
        const FieldConfig f{4, 0};
        CHECK(oracle::radial_eq_state_count(p, f, -1, natural) == 1);
        const auto g = oracle::auto_grid(p, f, -1, natural, 2);
        const auto fd = oracle::fd_eigenvalues_extrapolated(p, f, -1, natural, g, 2);
        CHECK(fd.truncated); // asked for 2, only 1 exists
        REQUIRE(fd.energies.size() == 1);
        const double ref = oracle::radial_eq_energy_2d(p, f, {0, -1}, natural);
        CHECK(std::fabs(fd.energies[0] - ref) <= std::max(1e-6 * std::fabs(ref), 1e-8));
    }
}

TEST_CASE("the tabulated closed form is not the spectrum of the radial equation") {
    // The two closed forms differ in the sign the 1/r attraction enters
    // the quantization polynomial; the eigensolver sides with the
    // sign-consistent one (see README, "Numerical notes").
    const FieldConfig f{0, 0};
    const double fd =
        oracle::fd_eigenvalues_extrapolated(table5, f, 0, natural,
                                            oracle::auto_grid(table5, f, 0, natural, 1), 1)
            .energies.at(0);
    const double printed = energy_2d(table5, f, {0, 0}, natural);
    const double consistent = oracle::radial_eq_energy_2d(table5, f, {0, 0}, natural);
    CHECK(std::fabs(fd - consistent) < 1e-7);
    CHECK(std::fabs(fd - printed) > 1e-3);
}

TEST_CASE("brute_force_nmax") {
    // eta_max = 18.494 at alpha = 0.005: floor and argmax coincide.
    CHECK(oracle::brute_force_nmax(table5, {0, 0}, 0, natural, 200) == 18);
    // eta_max = 12.633 at alpha = 0.01: the integer argmax of E(n) is the
    // nearest integer 13, one past the ensemble cutoff floor(eta) = 12.
    CHECK(oracle::brute_force_nmax(table10, {0, 0}, 0, natural, 200) == 13);
    CHECK(cutoffs(table10, {0, 0}, 0, natural).n_max == 12);
    CHECK(energy_2d(table10, {0, 0}, {13, 0}, natural) >
          energy_2d(table10, {0, 0}, {12, 0}, natural));
    SUBCASE("E rises monotonically up to n_max") {
        double prev = -1e300;
        for (int n = 0; n <= 18; ++n) {
            const double e = energy_2d(table5, {0, 0}, {n, 0}, natural);
            CHECK(e > prev);
            prev = e;
        }
    }
    SUBCASE("nearest-integer relation to cutoffs over random parameters") {
        std::mt19937 rng(4242);
        std::uniform_real_distribution<double> ua(0.004, 0.02), uA(0.5, 2.0), uC(0.1, 1.0),
            uB(0.0, 0.08), uP(0.0, 5.0);
        std::uniform_int_distribution<int> um(-2, 2);
        int done = 0;
        while (done < 10) {
            PotentialParams p{uA(rng), uC(rng), ua(rng)};
            const FieldConfig f{uB(rng), uP(rng)};
            const int m = um(rng);
            SpectrumCutoffs c;
            try {
                c = cutoffs(p, f, m, natural);
            } catch (const std::domain_error&) {
                continue;
            }
            const int ceiling = static_cast<int>(10 * c.eta_max) + 10;
            const int bf = oracle::brute_force_nmax(p, f, m, natural, ceiling);
            CHECK(bf == c.n_max + (c.eta_max - c.n_max > 0.5 ? 1 : 0));
            ++done;
        }
    }
}

TEST_CASE("brute_force_partition") {
    SUBCASE("beta -> 0 counts the states") {
        const double z = oracle::brute_force_partition(table5, {0, 0}, 0, natural, 1e-10);
        CHECK(z == doctest::Approx(19.0).epsilon(1e-9));
    }
    SUBCASE("single-state ensemble at B = 4") {
        const FieldConfig f{4, 0};
        const double e0 = energy_2d(table5, f, {0, 0}, natural);
        const double z = oracle::brute_force_partition(table5, f, 0, natural, 2.0);
        CHECK(z == std::exp(-2.0 * e0));
    }
    CHECK_THROWS_AS(oracle::brute_force_partition(table5, {0, 0}, 0, natural, 0.0),
                    std::domain_error);
    CHECK_THROWS_AS(oracle::brute_force_partition(table5, {0, 0}, 0, natural, -1.0),
                    std::domain_error);
}

TEST_CASE("continuum threshold separates bound from box states") {
    const FieldConfig f{0, 0};
    const double thr = oracle::continuum_threshold(table5, f, 0, natural);
    CHECK(thr == doctest::Approx(-0.25 * 1.25e-5).epsilon(1e-12));
    // Requesting far more states than exist sets the truncation flag and
    // returns only the sub-threshold ones.
    const oracle::FdGrid g{1e-3, 2000.0, 20001};
    const auto r = oracle::fd_eigenvalues(table5, f, 0, natural, g, 500);
    CHECK(r.truncated);
    CHECK(r.energies.size() < 500);
    for (double e : r.energies) CHECK(e < thr);
    // Bound-state count agrees with the ensemble cutoff to within one
    // (the topmost level has a decay length comparable to the box).
    const int n_max = cutoffs(table5, f, 0, natural).n_max;
    CHECK(std::abs(static_cast<int>(r.energies.size()) - (n_max + 1)) <= 1);
}

TEST_CASE("fd_eigenvalues argument validation") {
    CHECK_THROWS_AS(oracle::fd_eigenvalues(table5, {0, 0}, 0, natural, {1e-3, 100.0, 2}, 1),
                    std::domain_error);
    CHECK_THROWS_AS(oracle::fd_eigenvalues(table5, {0, 0}, 0, natural, {0.0, 100.0, 101}, 1),
                    std::domain_error);
    CHECK_THROWS_AS(oracle::fd_eigenvalues(table5, {0, 0}, 0, natural, {1e-3, 100.0, 101}, 0),
                    std::domain_error);
}
