#include "skp/kernels/sturm.hpp"

#if defined(SKP_HAVE_AVX2_KERNELS)

#include <immintrin.h>

namespace skp::kernels {

// Four shifts per iteration, one per lane. No FMA: the scalar reference
// uses separate div/sub steps and IEEE division and subtraction are
// correctly rounded, so keeping the same operation order makes the two
// paths bit-identical.
void sturm_count_batch_avx2(const double* diag, const double* e2, std::size_t n,
                            const double* shifts, int* counts, std::size_t nshifts) {
    const __m256d zero = _mm256_setzero_pd();
    const __m256d neg_tiny = _mm256_set1_pd(-5e-324);

    std::size_t j = 0;
    for (; j + 4 <= nshifts; j += 4) {
        const __m256d x = _mm256_loadu_pd(shifts + j);
        __m256d q = _mm256_sub_pd(_mm256_set1_pd(diag[0]), x);
        __m256d is_zero = _mm256_cmp_pd(q, zero, _CMP_EQ_OQ);
        q = _mm256_blendv_pd(q, neg_tiny, is_zero);
        __m256i cnt = _mm256_sub_epi64(_mm256_setzero_si256(),
                                       _mm256_castpd_si256(_mm256_cmp_pd(q, zero, _CMP_LT_OQ)));
        for (std::size_t i = 1; i < n; ++i) {
            const __m256d t = _mm256_div_pd(_mm256_set1_pd(e2[i - 1]), q);
            q = _mm256_sub_pd(_mm256_sub_pd(_mm256_set1_pd(diag[i]), x), t);
            is_zero = _mm256_cmp_pd(q, zero, _CMP_EQ_OQ);
            q = _mm256_blendv_pd(q, neg_tiny, is_zero);
            cnt = _mm256_sub_epi64(cnt,
                                   _mm256_castpd_si256(_mm256_cmp_pd(q, zero, _CMP_LT_OQ)));
        }
        alignas(32) long long lanes[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), cnt);
        for (int l = 0; l < 4; ++l) counts[j + l] = static_cast<int>(lanes[l]);
    }
    if (j < nshifts)
        sturm_count_batch_scalar(diag, e2, n, shifts + j, counts + j, nshifts - j);
}

} // namespace skp::kernels

#endif // SKP_HAVE_AVX2_KERNELS
