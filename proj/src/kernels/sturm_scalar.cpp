#include "skp/kernels/sturm.hpp"

namespace skp::kernels {

// LDL^T pivot recurrence q_i = (d_i - x) - e2_{i-1}/q_{i-1}; the number
// of negative pivots equals the number of eigenvalues below x. A zero
// pivot is replaced by the smallest negative subnormal, the conventional
// patch that keeps the count monotone in x. The SIMD variants repeat the
// identical operation sequence, so counts are bit-identical across
// implementations.
void sturm_count_batch_scalar(const double* diag, const double* e2, std::size_t n,
                              const double* shifts, int* counts, std::size_t nshifts) {
    constexpr double neg_tiny = -5e-324;
    for (std::size_t j = 0; j < nshifts; ++j) {
        const double x = shifts[j];
        double q = diag[0] - x;
        if (q == 0.0) q = neg_tiny;
        int cnt = q < 0.0 ? 1 : 0;
        for (std::size_t i = 1; i < n; ++i) {
            const double t = e2[i - 1] / q;
            q = (diag[i] - x) - t;
            if (q == 0.0) q = neg_tiny;
            cnt += q < 0.0 ? 1 : 0;
        }
        counts[j] = cnt;
    }
}

} // namespace skp::kernels
