#pragma once

#include "chroma/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chroma {

inline constexpr long long kIsoBudget = 5'000'000;

// Exact backtracking isomorphism with degree / neighborhood-degree pruning.
// mapping[a] = b on success. Throws BudgetError when the node budget is
// exhausted; never returns a guessed answer.
struct IsoResult {
    bool isomorphic = false;
    std::vector<int> mapping;
};
IsoResult are_isomorphic(const Graph& a, const Graph& b, long long budget = kIsoBudget);

// Canonical form via individualization-refinement with a minimal-leaf rule:
// equal certificates iff isomorphic. Deterministic; throws BudgetError.
std::string canonical_certificate(const Graph& g, long long budget = kIsoBudget);

} // namespace chroma
