#include "chroma/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace chroma::kern {

bool avx2_available() {
#if defined(CHROMA_HAVE_AVX2)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

namespace {

const Ops* select() {
    const char* env = std::getenv("CHROMA_KERNELS");
    if (env && std::strcmp(env, "scalar") == 0) return &scalar_ops;
#if defined(CHROMA_HAVE_AVX2)
    if (avx2_available()) return &avx2_ops;
#endif
    return &scalar_ops;
}

} // namespace

const Ops& active() {
    static const Ops* selected = select();
    return *selected;
}

} // namespace chroma::kern
