#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "skp/kernels/sturm.hpp"

using namespace skp::kernels;

namespace {

// Discrete Laplacian tridiag(-1, 2, -1): eigenvalues 2 - 2 cos(k pi/(N+1)),
// k = 1..N, an analytic ground truth for the counts.
int laplacian_count_below(int N, double shift) {
    int cnt = 0;
    for (int k = 1; k <= N; ++k)
        if (2.0 - 2.0 * std::cos(k * M_PI / (N + 1)) < shift) ++cnt;
    return cnt;
}

} // namespace

TEST_CASE("scalar Sturm counts match the analytic Laplacian spectrum") {
    const int N = 257;
    std::vector<double> diag(N, 2.0), e2(N - 1, 1.0);
    std::vector<double> shifts;
    for (int i = 0; i <= 40; ++i) shifts.push_back(-0.5 + 5.0 * i / 40.0);
    std::vector<int> counts(shifts.size());
    sturm_count_batch_scalar(diag.data(), e2.data(), N, shifts.data(), counts.data(),
                             shifts.size());
    for (std::size_t i = 0; i < shifts.size(); ++i)
        CHECK(counts[i] == laplacian_count_below(N, shifts[i]));
}

TEST_CASE("counts are monotone in the shift and handle exact eigenvalue hits") {
    const int N = 64;
    std::vector<double> diag(N, 2.0), e2(N - 1, 1.0);
    // Shift exactly on an eigenvalue: count is "strictly below".
    const double ev3 = 2.0 - 2.0 * std::cos(3 * M_PI / (N + 1));
    int c = -1;
    sturm_count_batch_scalar(diag.data(), e2.data(), N, &ev3, &c, 1);
    CHECK(c >= 2);
    CHECK(c <= 3);
    int prev = -1;
    for (double x = -1.0; x < 5.0; x += 0.01) {
        int cc = 0;
        sturm_count_batch_scalar(diag.data(), e2.data(), N, &x, &cc, 1);
        CHECK(cc >= prev);
        prev = cc;
    }
}

TEST_CASE("SIMD variants are bit-identical to the scalar reference") {
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> ud(-3.0, 3.0), ue(0.0, 2.0);
    for (int trial = 0; trial < 25; ++trial) {
        const int N = 32 + static_cast<int>(rng() % 900);
        std::vector<double> diag(N), e2(N - 1);
        for (auto& d : diag) d = ud(rng);
        for (auto& e : e2) e = ue(rng);
        // Include pathological shifts that hit diagonal entries exactly.
        std::vector<double> shifts{diag[0], diag[N / 2], 0.0, -10.0, 10.0};
        for (int i = 0; i < 9; ++i) shifts.push_back(ud(rng));
        std::vector<int> ref(shifts.size()), got(shifts.size());
        sturm_count_batch_scalar(diag.data(), e2.data(), N, shifts.data(), ref.data(),
                                 shifts.size());
#if defined(SKP_HAVE_AVX2_KERNELS)
        if (__builtin_cpu_supports("avx2")) {
            sturm_count_batch_avx2(diag.data(), e2.data(), N, shifts.data(), got.data(),
                                   shifts.size());
            for (std::size_t i = 0; i < shifts.size(); ++i) CHECK(ref[i] == got[i]);
        }
#endif
#if defined(SKP_HAVE_NEON_KERNELS)
        sturm_count_batch_neon(diag.data(), e2.data(), N, shifts.data(), got.data(),
                               shifts.size());
        for (std::size_t i = 0; i < shifts.size(); ++i) CHECK(ref[i] == got[i]);
#endif
    }
}

TEST_CASE("dispatch selects a known variant") {
    const std::string name = active_kernel_name();
    CHECK((name == "scalar" || name == "avx2" || name == "neon"));
    CHECK(sturm_count_batch() != nullptr);
}
