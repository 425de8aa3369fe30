#include "skp/kernels/sturm.hpp"

#if defined(SKP_HAVE_NEON_KERNELS)

#include <arm_neon.h>

namespace skp::kernels {

// Two shifts per iteration. Same operation sequence as the scalar
// reference (div, sub, sub, zero patch), so counts are bit-identical.
void sturm_count_batch_neon(const double* diag, const double* e2, std::size_t n,
                            const double* shifts, int* counts, std::size_t nshifts) {
    const float64x2_t zero = vdupq_n_f64(0.0);
    const float64x2_t neg_tiny = vdupq_n_f64(-5e-324);

    std::size_t j = 0;
    for (; j + 2 <= nshifts; j += 2) {
        const float64x2_t x = vld1q_f64(shifts + j);
        float64x2_t q = vsubq_f64(vdupq_n_f64(diag[0]), x);
        uint64x2_t is_zero = vceqq_f64(q, zero);
        q = vbslq_f64(is_zero, neg_tiny, q);
        // vcltq mask is all-ones, i.e. -1 as signed; subtracting counts.
        int64x2_t cnt = vnegq_s64(vreinterpretq_s64_u64(vcltq_f64(q, zero)));
        for (std::size_t i = 1; i < n; ++i) {
            const float64x2_t t = vdivq_f64(vdupq_n_f64(e2[i - 1]), q);
            q = vsubq_f64(vsubq_f64(vdupq_n_f64(diag[i]), x), t);
            is_zero = vceqq_f64(q, zero);
            q = vbslq_f64(is_zero, neg_tiny, q);
            cnt = vsubq_s64(cnt, vreinterpretq_s64_u64(vcltq_f64(q, zero)));
        }
        counts[j] = static_cast<int>(vgetq_lane_s64(cnt, 0));
        counts[j + 1] = static_cast<int>(vgetq_lane_s64(cnt, 1));
    }
    if (j < nshifts)
        sturm_count_batch_scalar(diag, e2, n, shifts + j, counts + j, nshifts - j);
}

} // namespace skp::kernels

#endif // SKP_HAVE_NEON_KERNELS
