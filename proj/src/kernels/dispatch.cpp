#include "skp/kernels/sturm.hpp"

#include <cstdlib>
#include <string>

namespace skp::kernels {

namespace {

struct Selection {
    SturmCountFn fn;
    const char* name;
};

Selection select() {
    const char* env = std::getenv("SKP_SIMD");
    const std::string pref = env ? env : "auto";
    if (pref == "scalar") return {sturm_count_batch_scalar, "scalar"};
#if defined(SKP_HAVE_AVX2_KERNELS)
    if (pref == "avx2") return {sturm_count_batch_avx2, "avx2"};
    if (pref == "auto" && __builtin_cpu_supports("avx2"))
        return {sturm_count_batch_avx2, "avx2"};
#endif
#if defined(SKP_HAVE_NEON_KERNELS)
    if (pref == "neon" || pref == "auto") return {sturm_count_batch_neon, "neon"};
#endif
    return {sturm_count_batch_scalar, "scalar"};
}

const Selection& cached() {
    static const Selection s = select();
    return s;
}

} // namespace

SturmCountFn sturm_count_batch() { return cached().fn; }
const char* active_kernel_name() { return cached().name; }

} // namespace skp::kernels
