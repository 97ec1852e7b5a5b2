#include "chroma/coloring.hpp"

#include <algorithm>
#include <numeric>

namespace chroma {

Coloring make_coloring(std::vector<int> colors) {
    Coloring c;
    c.colors = std::move(colors);
    int mx = -1;
    for (int x : c.colors) mx = std::max(mx, x);
    c.k = mx + 1;
    return c;
}

bool proper(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != g.n()) return false;
    for (int v = 0; v < g.n(); ++v)
        if (c.colors[v] < 0 || c.colors[v] >= c.k) return false;
    for (auto [u, v] : g.edge_list())
        if (c.colors[u] == c.colors[v]) return false;
    return true;
}

namespace {

void check_proper(const Graph& g, const Coloring& c, const char* where) {
    if (!proper(g, c))
        throw std::logic_error(std::string(where) + ": produced an improper coloring");
}

// DSATUR greedy: color the most saturated vertex (ties: degree, then index)
// with the smallest feasible color.
Coloring greedy_dsatur(const Graph& g) {
    const int n = g.n();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<Bitset> neighbor_colors(static_cast<std::size_t>(n), Bitset(n + 1));
    for (int step = 0; step < n; ++step) {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            int sat = neighbor_colors[v].count();
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        int c = 0;
        while (neighbor_colors[best].test(c)) ++c;
        color[best] = c;
        for (int u = g.nbr(best).next(0); u >= 0; u = g.nbr(best).next(u + 1))
            if (color[u] < 0) neighbor_colors[u].set(c);
    }
    return make_coloring(std::move(color));
}

struct SearchBudget {
    long long remaining;
    bool tick() { return --remaining >= 0; }
};

// Backtracking k-coloring. allowed[v] is the bitmask of colors still open
// for v; fresh colors beyond the highest used one are interchangeable, so
// only the first of them is ever branched on.
struct KColorSearch {
    const Graph& g;
    int k;
    std::vector<int> color;
    std::vector<std::uint64_t> allowed;
    std::vector<int> sat; // distinct neighbor colors
    SearchBudget budget;
    bool out_of_budget = false;

    KColorSearch(const Graph& gg, int kk, long long b)
        : g(gg), k(kk),
          color(static_cast<std::size_t>(gg.n()), -1),
          allowed(static_cast<std::size_t>(gg.n()), (kk >= 64) ? ~std::uint64_t{0}
                                                               : ((std::uint64_t{1} << kk) - 1)),
          sat(static_cast<std::size_t>(gg.n()), 0),
          budget{b} {}

    bool solve(int colored, int used) {
        if (colored == g.n()) return true;
        if (!budget.tick()) {
            out_of_budget = true;
            return false;
        }
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g.n(); ++v) {
            if (color[v] >= 0) continue;
            if (allowed[v] == 0) return false;
            int d = g.degree(v);
            if (sat[v] > best_sat || (sat[v] == best_sat && d > best_deg)) {
                best = v;
                best_sat = sat[v];
                best_deg = d;
            }
        }
        const int cap = std::min(k, used + 1);
        for (int c = 0; c < cap; ++c) {
            if (!(allowed[best] >> c & 1)) continue;
            std::vector<int> touched;
            color[best] = c;
            bool dead = false;
            for (int u = g.nbr(best).next(0); u >= 0; u = g.nbr(best).next(u + 1)) {
                if (color[u] >= 0) continue;
                if (allowed[u] >> c & 1) {
                    allowed[u] &= ~(std::uint64_t{1} << c);
                    ++sat[u];
                    touched.push_back(u);
                    if (allowed[u] == 0) dead = true;
                }
            }
            if (!dead && solve(colored + 1, std::max(used, c + 1))) return true;
            for (int u : touched) {
                allowed[u] |= std::uint64_t{1} << c;
                --sat[u];
            }
            color[best] = -1;
            if (out_of_budget) return false;
        }
        return false;
    }
};

} // namespace

Coloring greedy_coloring(const Graph& g) {
    Coloring c = greedy_dsatur(g);
    check_proper(g, c, "greedy_coloring");
    return c;
}

KColorResult k_colorable(const Graph& g, int k, long long budget) {
    if (k < 0) throw DomainError("k_colorable: negative k");
    KColorResult r;
    if (g.n() == 0) {
        r.status = KStatus::Colored;
        r.coloring = Coloring{0, {}};
        return r;
    }
    if (k == 0) {
        r.status = KStatus::Refuted;
        return r;
    }
    if (k > 62) throw DomainError("k_colorable: k > 62 unsupported");
    KColorSearch search(g, k, budget);
    if (search.solve(0, 0)) {
        r.status = KStatus::Colored;
        r.coloring = make_coloring(std::move(search.color));
        check_proper(g, r.coloring, "k_colorable");
    } else {
        r.status = search.out_of_budget ? KStatus::Unknown : KStatus::Refuted;
    }
    return r;
}

namespace {

// greedy clique from each seed vertex, keep the best
std::vector<int> greedy_clique(const Graph& g) {
    std::vector<int> best;
    for (int seed = 0; seed < g.n(); ++seed) {
        std::vector<int> clique{seed};
        Bitset cand = g.nbr(seed);
        while (cand.any()) {
            // highest degree inside the candidate set
            int pick = -1, pick_deg = -1;
            for (int v = cand.next(0); v >= 0; v = cand.next(v + 1)) {
                int d = cand.and_count(g.nbr(v));
                if (d > pick_deg) {
                    pick_deg = d;
                    pick = v;
                }
            }
            clique.push_back(pick);
            cand &= g.nbr(pick);
        }
        if (clique.size() > best.size()) best = std::move(clique);
    }
    std::sort(best.begin(), best.end());
    return best;
}

} // namespace

ChromaticResult chromatic_number(const Graph& g, long long budget) {
    ChromaticResult r;
    if (g.n() == 0) {
        r.optimal = true;
        r.certificate = "empty graph";
        return r;
    }
    const int lb = static_cast<int>(greedy_clique(g).size());
    Coloring ub_coloring = greedy_dsatur(g);
    check_proper(g, ub_coloring, "chromatic_number greedy");
    int ub = ub_coloring.k;
    r.lower = lb;
    r.upper = ub;
    r.coloring = std::move(ub_coloring);
    if (lb == ub) {
        r.optimal = true;
        r.certificate = "greedy coloring meets clique lower bound K" + std::to_string(lb);
        return r;
    }
    for (int k = lb; k < ub; ++k) {
        KColorResult kr = k_colorable(g, k, budget);
        if (kr.status == KStatus::Colored) {
            r.upper = k;
            r.coloring = std::move(kr.coloring);
            r.optimal = true;
            r.certificate = (k == lb)
                                ? "contains K" + std::to_string(lb)
                                : "search exhausted at " + std::to_string(k - 1) + " colors";
            return r;
        }
        if (kr.status == KStatus::Refuted) {
            r.lower = k + 1;
            continue;
        }
        r.certificate = "budget exhausted; bracketing interval only";
        return r; // Unknown: lower..upper stand, not optimal
    }
    r.optimal = true;
    r.certificate = "search exhausted at " + std::to_string(ub - 1) + " colors";
    return r;
}

namespace {

// exact max clique, branch and bound with a greedy-coloring bound
struct CliqueSearch {
    const Graph& g;
    SearchBudget budget;
    bool out_of_budget = false;
    std::vector<int> best;

    CliqueSearch(const Graph& gg, long long b) : g(gg), budget{b} {}

    // greedy color classes of the candidate set give an upper bound
    int color_bound(const Bitset& cand) {
        int classes = 0;
        Bitset rest = cand;
        while (rest.any()) {
            ++classes;
            Bitset cls_ok = rest;
            for (int v = cls_ok.next(0); v >= 0; v = cls_ok.next(v + 1)) {
                cls_ok -= g.nbr(v); // keep only non-neighbors as future class members
                rest.reset(v);
                cls_ok.reset(v);
            }
        }
        return classes;
    }

    void run(std::vector<int>& cur, Bitset cand) {
        if (!budget.tick()) {
            out_of_budget = true;
            return;
        }
        if (cand.none()) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        if (cur.size() + static_cast<std::size_t>(color_bound(cand)) <= best.size()) return;
        for (int v = cand.next(0); v >= 0 && !out_of_budget; v = cand.next(v + 1)) {
            if (cur.size() + static_cast<std::size_t>(cand.count()) <= best.size()) return;
            cur.push_back(v);
            run(cur, cand & g.nbr(v));
            cur.pop_back();
            cand.reset(v);
        }
    }
};

} // namespace

IntBound clique_number(const Graph& g, long long budget) {
    if (g.n() == 0) return {0, 0, true};
    CliqueSearch s(g, budget);
    s.best = greedy_clique(g);
    std::vector<int> cur;
    s.run(cur, Bitset::full(g.n()));
    int sz = static_cast<int>(s.best.size());
    if (s.out_of_budget) return {sz, g.n(), false};
    return {sz, sz, true};
}

IntBound independence_number(const Graph& g, long long budget) {
    return clique_number(complement(g), budget);
}

IntBound clique_cover_number(const Graph& g, long long budget) {
    ChromaticResult r = chromatic_number(complement(g), budget);
    return {r.lower, r.upper, r.optimal};
}

} // namespace chroma
