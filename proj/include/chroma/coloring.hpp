#pragma once

#include "chroma/graph.hpp"
#include "chroma/manifolds.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chroma {

inline constexpr long long kColorBudget = 50'000'000;

struct Coloring {
    int k = 0;                // colors used (max index + 1)
    std::vector<int> colors;  // total map vertex -> 0..k-1
};

// no monochromatic edge; every Coloring returned by this module has been
// run through this check
bool proper(const Graph& g, const Coloring& c);

Coloring make_coloring(std::vector<int> colors);

// DSATUR greedy (most saturated vertex first, smallest feasible color)
Coloring greedy_coloring(const Graph& g);

enum class KStatus { Colored, Refuted, Unknown };

struct KColorResult {
    KStatus status = KStatus::Unknown;
    Coloring coloring; // when Colored
};

// Decision backend: DSATUR-ordered backtracking with forward checking and
// fresh-color symmetry breaking. Refuted means the search space was
// exhausted; Unknown means the budget ran out first.
KColorResult k_colorable(const Graph& g, int k, long long budget = kColorBudget);

struct ChromaticResult {
    int lower = 0;
    int upper = 0;
    bool optimal = false;
    Coloring coloring;       // proper coloring with `upper` colors
    std::string certificate; // how optimality (or the bracketing) was established
};

// Exact chromatic number: greedy clique lower bound, DSATUR greedy upper
// bound, then a k-colorability ladder. On budget exhaustion returns the
// bracketing interval flagged non-optimal.
ChromaticResult chromatic_number(const Graph& g, long long budget = kColorBudget);

struct IntBound {
    int lower = 0;
    int upper = 0;
    bool exact = false;
};

IntBound clique_number(const Graph& g, long long budget = kColorBudget);
IntBound independence_number(const Graph& g, long long budget = kColorBudget);
IntBound clique_cover_number(const Graph& g, long long budget = kColorBudget);

// Graph on the maximal simplices of a d-manifold, adjacent when two of them
// share a (d-1)-face. Triangle-freeness and (d+1)-regularity are verified
// and recorded, not assumed.
struct DualGraph {
    Graph graph;
    std::vector<Simplex> simplices; // dual vertex -> maximal simplex of the host
    int d = -1;                     // dimension of the maximal simplices
    bool manifold_warning = false;  // host was not recognized as a manifold
    bool triangle_free = false;
    bool regular = false;
    int regularity = -1;
    std::vector<int> component;          // per dual vertex
    std::vector<long long> cycle_rank;   // per component: |E| - |V| + 1
};
DualGraph dual_graph(const Graph& g, long long budget = kRecursionBudget);

struct ForestPartitionReport {
    std::vector<char> side; // 0 = class A, 1 = class B
    bool a_forest = false;
    bool b_forest = false;
    bool success = false;
    std::string method; // "tree-bipartition", "local-exchange", "exact-search" or "none"
    std::vector<std::pair<int, int>> cut_edges; // non-tree edges of the spanning forest
};
ForestPartitionReport two_forest_partition(const DualGraph& dual, long long budget = 20'000'000);

struct Theorem1Result {
    bool ok = false;
    Coloring coloring;
    int d = -1;
    std::string stage; // "forest-partition", "repair", "fallback-greedy", "fallback-search"
    ForestPartitionReport partition;
    std::vector<std::string> trace;
};

// Constructive (2d+2)-coloring pipeline: two-forest partition of the dual
// graph, batch propagation along simplex trees, verification, bounded
// repair, and a k-colorability fallback. ok=false only when even the
// fallback ran out of budget.
Theorem1Result theorem1_color(const Graph& g, long long budget = kColorBudget);

struct BoundsReport {
    int d = -1;
    int lower = 0;
    int upper = 0;
    int conjecture = 0; // ceil(3(d+1)/2)
    std::optional<int> exact;
};
BoundsReport bounds_report(const Graph& g, bool compute_exact = true,
                           long long budget = kColorBudget);

} // namespace chroma
