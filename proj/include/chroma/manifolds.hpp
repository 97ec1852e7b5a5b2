#pragma once

#include "chroma/graph.hpp"

#include <string>
#include <vector>

namespace chroma {

inline constexpr long long kRecursionBudget = 1'000'000;

enum class Verdict { Yes, No, Unknown };

// Result of an existential/recursive recognizer. Yes/no verdicts carry a
// witness where one exists (removal sequence for contractibility, the
// offending vertex or vertex pair for failed manifold checks); unknown
// means the step budget ran out before an exact answer was reached.
struct TriState {
    Verdict verdict = Verdict::Unknown;
    int dim = -2; // sphere/manifold dimension when verdict == Yes
    std::vector<int> witness;
    std::string note;

    bool yes() const { return verdict == Verdict::Yes; }
    bool no() const { return verdict == Verdict::No; }
    bool unknown() const { return verdict == Verdict::Unknown; }
};

// Recursive definitions: the 1-point graph is contractible; G is
// contractible iff some vertex has a contractible unit sphere and a
// contractible deletion. The empty graph is the (-1)-sphere; G is a
// d-sphere iff every unit sphere is a (d-1)-sphere and some vertex deletion
// is contractible. G is a d-manifold iff every unit sphere is a (d-1)-sphere.
TriState is_contractible(const Graph& g, long long budget = kRecursionBudget);
TriState is_sphere(const Graph& g, long long budget = kRecursionBudget);
TriState is_manifold(const Graph& g, long long budget = kRecursionBudget);

// Memoization is keyed by canonical certificate for small graphs and by
// exact adjacency for larger ones; entries are deterministic.
void clear_recognizer_cache();

long long euler_characteristic(const Graph& g);

struct BettiVector {
    std::vector<long long> b;

    long long alternating_sum() const {
        long long s = 0, sign = 1;
        for (long long x : b) {
            s += sign * x;
            sign = -sign;
        }
        return s;
    }
    friend bool operator==(const BettiVector& a, const BettiVector& b) = default;
};

// Betti numbers of the Whitney complex over the rationals, computed by
// exact integer elimination of the boundary matrices (no floating point).
// Trailing zero ranks are trimmed. Throws BudgetError beyond max_simplices
// or on entry overflow.
BettiVector betti(const Graph& g, long long max_simplices = 200000);

// 1 iff the triangle-free graph is a forest, else 2. Throws DomainError on
// inputs with a triangle.
int homotopy_chromatic_triangle_free(const Graph& g);

} // namespace chroma
