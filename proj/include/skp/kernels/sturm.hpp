#pragma once

#include <cstddef>

// Sturm-sequence spectrum counting for symmetric tridiagonal matrices,
// the inner loop of the bisection eigensolver. The recurrence is
// sequential along the matrix but independent across shifts, so the
// vector variants process one shift per SIMD lane. All variants perform
// the identical operation sequence (div, sub, sub, zero-pivot patch) and
// therefore return bit-identical counts; the equivalence tests assert
// exact equality.

namespace skp::kernels {

// counts[j] = number of eigenvalues of tridiag(diag, e2) strictly below
// shifts[j]. e2 holds the squared off-diagonal entries (size n-1).
using SturmCountFn = void (*)(const double* diag, const double* e2, std::size_t n,
                              const double* shifts, int* counts, std::size_t nshifts);

void sturm_count_batch_scalar(const double* diag, const double* e2, std::size_t n,
                              const double* shifts, int* counts, std::size_t nshifts);

#if defined(__x86_64__) || defined(_M_X64)
#define SKP_HAVE_AVX2_KERNELS 1
void sturm_count_batch_avx2(const double* diag, const double* e2, std::size_t n,
                            const double* shifts, int* counts, std::size_t nshifts);
#endif

#if defined(__aarch64__)
#define SKP_HAVE_NEON_KERNELS 1
void sturm_count_batch_neon(const double* diag, const double* e2, std::size_t n,
                            const double* shifts, int* counts, std::size_t nshifts);
#endif

// Variant selected at load time from CPU features; the SKP_SIMD
// environment variable ("scalar", "avx2", "neon", "auto") overrides.
SturmCountFn sturm_count_batch();
const char* active_kernel_name();

} // namespace skp::kernels
