#pragma once

#include <cstddef>
#include <cstdint>

// Word-level set kernels. Vertex sets are arrays of 64-bit words; these
// operations sit in the inner loops of clique enumeration, link
// computation and the coloring solvers. A scalar reference implementation
// always exists; an AVX2 variant is selected at runtime when the CPU
// supports it. Both implement exactly the same contract and are
// equivalence-tested against each other.

namespace chroma::kern {

struct Ops {
    // popcount(a & b)
    std::uint64_t (*and_count)(const std::uint64_t* a, const std::uint64_t* b, std::size_t nw);
    // popcount(a)
    std::uint64_t (*popcount)(const std::uint64_t* a, std::size_t nw);
    // dst = a & b
    void (*and_into)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw);
    // dst = a | b
    void (*or_into)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw);
    // dst = a & ~b
    void (*andnot_into)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw);
    // (a & ~b) == 0, i.e. a is a subset of b
    bool (*is_subset)(const std::uint64_t* a, const std::uint64_t* b, std::size_t nw);
    const char* name;
};

extern const Ops scalar_ops;

#if defined(CHROMA_HAVE_AVX2)
extern const Ops avx2_ops;
#endif

bool avx2_available();

// The runtime-selected implementation. Honors CHROMA_KERNELS=scalar|avx2
// (requesting avx2 on a CPU without it falls back to scalar).
const Ops& active();

} // namespace chroma::kern
