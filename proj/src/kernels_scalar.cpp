#include "chroma/kernels.hpp"

#include <bit>

namespace chroma::kern {

namespace {

std::uint64_t and_count_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t nw) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < nw; ++i)
        total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    return total;
}

std::uint64_t popcount_scalar(const std::uint64_t* a, std::size_t nw) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < nw; ++i)
        total += static_cast<std::uint64_t>(std::popcount(a[i]));
    return total;
}

void and_into_scalar(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw) {
    for (std::size_t i = 0; i < nw; ++i) dst[i] = a[i] & b[i];
}

void or_into_scalar(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw) {
    for (std::size_t i = 0; i < nw; ++i) dst[i] = a[i] | b[i];
}

void andnot_into_scalar(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw) {
    for (std::size_t i = 0; i < nw; ++i) dst[i] = a[i] & ~b[i];
}

bool is_subset_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t nw) {
    for (std::size_t i = 0; i < nw; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

} // namespace

const Ops scalar_ops = {
    and_count_scalar, popcount_scalar,   and_into_scalar,
    or_into_scalar,   andnot_into_scalar, is_subset_scalar,
    "scalar",
};

} // namespace chroma::kern
