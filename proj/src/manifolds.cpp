#include "chroma/manifolds.hpp"

#include "chroma/isomorphism.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

namespace chroma {

namespace {

// Above this size canonical labeling is skipped and cache keys fall back to
// exact adjacency bits; correctness is unaffected, only cross-labeling
// cache sharing is lost.
constexpr int kCertKeyLimit = 32;
constexpr long long kCertBudget = 200'000;

struct BudgetExhausted {};

struct Ctx {
    long long remaining;
    void tick() {
        if (--remaining < 0) throw BudgetExhausted{};
    }
};

struct Caches {
    std::mutex mu;
    std::unordered_map<std::string, bool> contractible;
    std::unordered_map<std::string, int> sphere;   // dim when >= -1, kNo otherwise
    std::unordered_map<std::string, int> manifold; // yes results only
    static constexpr int kNo = -1000;
};

Caches& caches() {
    static Caches c;
    return c;
}

std::string memo_key(const Graph& g) {
    if (g.n() > kCertKeyLimit) return "R" + g.adjacency_key();
    // two-level key: certificates are themselves cached against the raw
    // adjacency so a budget-limited canonicalization never runs twice
    static std::mutex mu;
    static std::unordered_map<std::string, std::string> key_of_bits;
    std::string bits = g.adjacency_key();
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = key_of_bits.find(bits);
        if (it != key_of_bits.end()) return it->second;
    }
    std::string key;
    try {
        key = "C" + canonical_certificate(g, kCertBudget);
    } catch (const BudgetError&) {
        key = "R" + bits;
    }
    std::lock_guard<std::mutex> lock(mu);
    key_of_bits.emplace(std::move(bits), key);
    return key;
}

template <typename Map, typename V>
bool cache_get(Map& map, const std::string& key, V& out) {
    Caches& c = caches();
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = map.find(key);
    if (it == map.end()) return false;
    out = it->second;
    return true;
}

template <typename Map, typename V>
void cache_put(Map& map, const std::string& key, V value) {
    Caches& c = caches();
    std::lock_guard<std::mutex> lock(c.mu);
    map[key] = value;
}

// candidate vertices in ascending (degree, index) order
std::vector<int> by_degree(const Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
    return order;
}

Subgraph delete_vertex(const Graph& g, int v) {
    std::vector<int> keep;
    keep.reserve(static_cast<std::size_t>(g.n()) - 1);
    for (int u = 0; u < g.n(); ++u)
        if (u != v) keep.push_back(u);
    return induced(g, keep);
}

// Contractible graphs have the homology of a point (induction over the
// cone decomposition with Mayer-Vietoris), so nontrivial Betti numbers
// refute contractibility without expanding the recursion.
bool point_homology(const Graph& g) {
    try {
        BettiVector b = betti(g);
        return b.b.size() == 1 && b.b[0] == 1;
    } catch (const BudgetError&) {
        return true; // cannot refute at this size; let the recursion decide
    }
}

bool contractible_rec(const Graph& g, Ctx& ctx);
int sphere_rec(const Graph& g, Ctx& ctx); // dim >= -1, or Caches::kNo

bool contractible_rec(const Graph& g, Ctx& ctx) {
    if (g.n() == 0) return false;
    if (g.n() == 1) return true;
    std::string key = memo_key(g);
    bool hit;
    if (cache_get(caches().contractible, key, hit)) return hit;
    ctx.tick();

    bool answer = false;
    // contractible graphs are connected and have Euler characteristic 1;
    // both follow inductively from the cone construction
    if (is_connected(g) && f_vector(g).euler() == 1 && point_homology(g)) {
        for (int v : by_degree(g)) {
            Subgraph link = unit_sphere(g, v);
            if (!contractible_rec(link.graph, ctx)) continue;
            if (contractible_rec(delete_vertex(g, v).graph, ctx)) {
                answer = true;
                break;
            }
        }
    }
    cache_put(caches().contractible, key, answer);
    return answer;
}

int sphere_rec(const Graph& g, Ctx& ctx) {
    if (g.n() == 0) return -1;
    std::string key = memo_key(g);
    int hit;
    if (cache_get(caches().sphere, key, hit)) return hit;
    ctx.tick();

    int answer = Caches::kNo;
    int d = -2;
    bool links_ok = true;
    for (int v = 0; v < g.n() && links_ok; ++v) {
        int ld = sphere_rec(unit_sphere(g, v).graph, ctx);
        if (ld == Caches::kNo || (d != -2 && ld != d - 1))
            links_ok = false;
        else
            d = ld + 1;
    }
    if (links_ok) {
        // a d-sphere has Euler characteristic 1 + (-1)^d, so a mismatch
        // already rules out any contractible deletion
        long long want = (d % 2 == 0) ? 2 : 0;
        if (f_vector(g).euler() == want) {
            for (int v : by_degree(g)) {
                if (contractible_rec(delete_vertex(g, v).graph, ctx)) {
                    answer = d;
                    break;
                }
            }
        }
    }
    cache_put(caches().sphere, key, answer);
    return answer;
}

// Rebuilds the removal sequence of a graph already known contractible; all
// recursive queries hit the cache along the way.
void replay_witness(const Graph& g, Ctx& ctx, std::vector<int>& out,
                    const std::vector<int>& labels) {
    if (g.n() <= 1) {
        if (g.n() == 1) out.push_back(labels[0]);
        return;
    }
    for (int v : by_degree(g)) {
        if (!contractible_rec(unit_sphere(g, v).graph, ctx)) continue;
        Subgraph rest = delete_vertex(g, v);
        if (!contractible_rec(rest.graph, ctx)) continue;
        out.push_back(labels[v]);
        std::vector<int> sub_labels(rest.vmap.size());
        for (std::size_t i = 0; i < rest.vmap.size(); ++i) sub_labels[i] = labels[rest.vmap[i]];
        replay_witness(rest.graph, ctx, out, sub_labels);
        return;
    }
}

std::string budget_note(long long budget) {
    return "budget of " + std::to_string(budget) + " recursion nodes exhausted";
}

} // namespace

TriState is_contractible(const Graph& g, long long budget) {
    Ctx ctx{budget};
    TriState r;
    try {
        bool yes = contractible_rec(g, ctx);
        r.verdict = yes ? Verdict::Yes : Verdict::No;
        if (yes) {
            try {
                std::vector<int> labels(static_cast<std::size_t>(g.n()));
                for (int v = 0; v < g.n(); ++v) labels[v] = v;
                replay_witness(g, ctx, r.witness, labels);
            } catch (const BudgetExhausted&) {
                // the verdict stands; only the witness replay ran dry
                r.witness.clear();
                r.note = "witness replay " + budget_note(budget);
            }
        } else {
            r.note = g.n() == 0 ? "empty graph is not contractible"
                                : "no vertex has contractible unit sphere and deletion";
        }
    } catch (const BudgetExhausted&) {
        r.verdict = Verdict::Unknown;
        r.note = budget_note(budget);
    }
    return r;
}

TriState is_sphere(const Graph& g, long long budget) {
    Ctx ctx{budget};
    TriState r;
    try {
        int d = sphere_rec(g, ctx);
        if (d == Caches::kNo) {
            r.verdict = Verdict::No;
            r.note = "fails the sphere recursion";
        } else {
            r.verdict = Verdict::Yes;
            r.dim = d;
            try {
                // the deletion vertex, replayed against the cache
                for (int v : g.n() > 0 ? by_degree(g) : std::vector<int>{}) {
                    if (contractible_rec(delete_vertex(g, v).graph, ctx)) {
                        r.witness = {v};
                        break;
                    }
                }
            } catch (const BudgetExhausted&) {
                r.note = "witness replay " + budget_note(budget);
            }
        }
    } catch (const BudgetExhausted&) {
        r.verdict = Verdict::Unknown;
        r.note = budget_note(budget);
    }
    return r;
}

TriState is_manifold(const Graph& g, long long budget) {
    Ctx ctx{budget};
    TriState r;
    if (g.n() == 0) {
        r.verdict = Verdict::Yes;
        r.dim = -1;
        return r;
    }
    std::string key = memo_key(g);
    {
        int dim;
        if (cache_get(caches().manifold, key, dim)) {
            r.verdict = Verdict::Yes;
            r.dim = dim;
            return r;
        }
    }
    try {
        int d = -2;
        int first = -1;
        for (int v = 0; v < g.n(); ++v) {
            int ld = sphere_rec(unit_sphere(g, v).graph, ctx);
            if (ld == Caches::kNo) {
                r.verdict = Verdict::No;
                r.witness = {v};
                r.note = "unit sphere of vertex " + std::to_string(v) + " is not a sphere";
                return r;
            }
            if (d == -2) {
                d = ld + 1;
                first = v;
            } else if (ld + 1 != d) {
                r.verdict = Verdict::No;
                r.witness = {first, v};
                r.note = "unit spheres of vertices " + std::to_string(first) + " and " +
                         std::to_string(v) + " have different dimensions";
                return r;
            }
        }
        r.verdict = Verdict::Yes;
        r.dim = d;
        cache_put(caches().manifold, key, d);
    } catch (const BudgetExhausted&) {
        r.verdict = Verdict::Unknown;
        r.note = budget_note(budget);
    }
    return r;
}

void clear_recognizer_cache() {
    Caches& c = caches();
    std::lock_guard<std::mutex> lock(c.mu);
    c.contractible.clear();
    c.sphere.clear();
    c.manifold.clear();
}

long long euler_characteristic(const Graph& g) { return f_vector(g).euler(); }

int homotopy_chromatic_triangle_free(const Graph& g) {
    if (!is_triangle_free(g)) throw DomainError("homotopy chromatic test requires a triangle-free graph");
    return is_forest(g) ? 1 : 2;
}

} // namespace chroma
