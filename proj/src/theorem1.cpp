#include "chroma/coloring.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace chroma {

DualGraph dual_graph(const Graph& g, long long budget) {
    DualGraph d;
    TriState mf = is_manifold(g, budget);
    d.manifold_warning = !mf.yes();
    d.simplices = maximal_cliques(g);
    const int nv = static_cast<int>(d.simplices.size());
    int top = 0;
    for (const Simplex& s : d.simplices) top = std::max(top, s.size());
    d.d = top - 1;

    std::vector<Bitset> bits;
    bits.reserve(static_cast<std::size_t>(nv));
    for (const Simplex& s : d.simplices)
        bits.push_back(Bitset::of(g.n(), s.verts.begin(), s.verts.end()));

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j)
            if (bits[i].and_count(bits[j]) == d.d) edges.emplace_back(i, j);
    d.graph = Graph(nv, edges);

    d.triangle_free = is_triangle_free(d.graph);
    d.regular = nv > 0;
    d.regularity = nv > 0 ? d.graph.degree(0) : -1;
    for (int v = 1; v < nv; ++v)
        if (d.graph.degree(v) != d.regularity) {
            d.regular = false;
            break;
        }

    int nc = count_components(d.graph, &d.component);
    std::vector<long long> verts(static_cast<std::size_t>(nc), 0);
    std::vector<long long> edgec(static_cast<std::size_t>(nc), 0);
    for (int v = 0; v < nv; ++v) ++verts[d.component[v]];
    for (auto [u, v] : d.graph.edge_list()) ++edgec[d.component[u]];
    for (int c = 0; c < nc; ++c) d.cycle_rank.push_back(edgec[c] - verts[c] + 1);
    return d;
}

namespace {

bool side_is_forest(const Graph& g, const std::vector<char>& side, char s) {
    std::vector<int> keep;
    for (int v = 0; v < g.n(); ++v)
        if (side[v] == s) keep.push_back(v);
    return is_forest(induced(g, keep).graph);
}

// spanning forest by BFS; returns parity sides and the non-tree edges
void spanning_bipartition(const Graph& g, std::vector<char>& side,
                          std::vector<std::pair<int, int>>& cut_edges) {
    const int n = g.n();
    std::vector<int> depth(static_cast<std::size_t>(n), -1);
    std::vector<char> tree_edge_seen;
    std::vector<std::pair<int, int>> tree;
    for (int s = 0; s < n; ++s) {
        if (depth[s] >= 0) continue;
        depth[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v = g.nbr(u).next(0); v >= 0; v = g.nbr(u).next(v + 1)) {
                if (depth[v] < 0) {
                    depth[v] = depth[u] + 1;
                    tree.emplace_back(std::min(u, v), std::max(u, v));
                    q.push_back(v);
                }
            }
        }
    }
    std::sort(tree.begin(), tree.end());
    cut_edges.clear();
    for (auto e : g.edge_list())
        if (!std::binary_search(tree.begin(), tree.end(), e)) cut_edges.push_back(e);
    side.assign(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) side[v] = static_cast<char>(depth[v] & 1);
}

// vertices of one cycle inside the class, empty when the class is a forest
std::vector<int> find_cycle(const Graph& g, const std::vector<char>& side, char s) {
    const int n = g.n();
    std::vector<int> state(static_cast<std::size_t>(n), 0); // 0 unseen, 1 active, 2 done
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    for (int root = 0; root < n; ++root) {
        if (side[root] != s || state[root]) continue;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int u = stack.back();
            if (state[u] == 0) {
                state[u] = 1;
                for (int v = g.nbr(u).next(0); v >= 0; v = g.nbr(u).next(v + 1)) {
                    if (side[v] != s || v == parent[u]) continue;
                    if (state[v] == 1) { // back edge: walk u..v through parents
                        std::vector<int> cyc{v};
                        for (int w = u; w != v; w = parent[w]) cyc.push_back(w);
                        return cyc;
                    }
                    if (state[v] == 0) {
                        parent[v] = u;
                        stack.push_back(v);
                    }
                }
            } else {
                state[u] = 2;
                stack.pop_back();
            }
        }
    }
    return {};
}

// union-find with rollback (union by size, no path compression)
struct RollbackDsu {
    std::vector<int> parent, size;
    std::vector<int> journal;

    explicit RollbackDsu(int n) : parent(static_cast<std::size_t>(n)), size(static_cast<std::size_t>(n), 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        journal.push_back(b);
        return true;
    }
    std::size_t mark() const { return journal.size(); }
    void rollback(std::size_t m) {
        while (journal.size() > m) {
            int b = journal.back();
            journal.pop_back();
            size[parent[b]] -= size[b];
            parent[b] = b;
        }
    }
};

struct PartitionSearch {
    const Graph& g;
    long long remaining;
    bool exhausted = false;
    std::vector<char> side;
    RollbackDsu dsu_a, dsu_b;

    PartitionSearch(const Graph& gg, long long budget)
        : g(gg), remaining(budget),
          side(static_cast<std::size_t>(gg.n()), -1), dsu_a(gg.n()), dsu_b(gg.n()) {}

    bool assign(int v) {
        if (v == g.n()) return true;
        if (--remaining < 0) {
            exhausted = true;
            return false;
        }
        const char max_side = v == 0 ? 0 : 1; // A/B swap symmetry
        for (char s = 0; s <= max_side; ++s) {
            RollbackDsu& dsu = s == 0 ? dsu_a : dsu_b;
            std::size_t m = dsu.mark();
            bool ok = true;
            for (int u = g.nbr(v).next(0); u >= 0; u = g.nbr(v).next(u + 1)) {
                if (side[u] != s) continue;
                if (!dsu.unite(v, u)) { // already connected: a same-side cycle
                    ok = false;
                    break;
                }
            }
            if (ok) {
                side[v] = s;
                if (assign(v + 1)) return true;
                side[v] = -1;
            }
            dsu.rollback(m);
            if (exhausted) return false;
        }
        return false;
    }
};

} // namespace

ForestPartitionReport two_forest_partition(const DualGraph& dual, long long budget) {
    const Graph& g = dual.graph;
    ForestPartitionReport rep;
    spanning_bipartition(g, rep.side, rep.cut_edges);
    rep.a_forest = side_is_forest(g, rep.side, 0);
    rep.b_forest = side_is_forest(g, rep.side, 1);
    if (rep.a_forest && rep.b_forest) {
        rep.success = true;
        rep.method = "tree-bipartition";
        return rep;
    }

    // local exchange: move a cycle vertex across while that removes a cycle
    // without creating one on the other side
    std::vector<char> side = rep.side;
    const int max_moves = 10 * std::max(1, g.n());
    bool stuck = false;
    for (int moves = 0; moves < max_moves && !stuck; ++moves) {
        char bad;
        std::vector<int> cyc = find_cycle(g, side, 0);
        if (!cyc.empty())
            bad = 0;
        else {
            cyc = find_cycle(g, side, 1);
            if (cyc.empty()) break; // both forests
            bad = 1;
        }
        stuck = true;
        for (int v : cyc) {
            side[v] = static_cast<char>(1 - bad);
            if (side_is_forest(g, side, static_cast<char>(1 - bad))) {
                stuck = false;
                break;
            }
            side[v] = bad;
        }
    }
    if (side_is_forest(g, side, 0) && side_is_forest(g, side, 1)) {
        rep.side = std::move(side);
        rep.a_forest = rep.b_forest = rep.success = true;
        rep.method = "local-exchange";
        return rep;
    }

    // exact search, vertices in index order
    PartitionSearch search(g, budget);
    if (search.assign(0)) {
        rep.side = std::move(search.side);
        rep.a_forest = rep.b_forest = rep.success = true;
        rep.method = "exact-search";
        return rep;
    }
    rep.method = search.exhausted ? "none (search budget exhausted)" : "none (no partition exists)";
    return rep;
}

namespace {

// Propagate simplex batch colors along the trees of one forest class.
// Root simplices take the batch palette in ascending vertex order; each
// tree edge contributes one new vertex, which takes a free batch color
// (or any free color among the 2d+2 when the batch is blocked).
void propagate_forest(const DualGraph& dual, const std::vector<char>& side,
                      char cls, int d, std::vector<int>& vertex_color,
                      std::vector<std::string>& trace) {
    const Graph& dg = dual.graph;
    const int base = cls == 0 ? 0 : d + 1;
    const int total = 2 * d + 2;
    std::vector<char> visited(static_cast<std::size_t>(dg.n()), 0);

    auto free_color = [&](const Simplex& simplex) {
        std::vector<char> used(static_cast<std::size_t>(total), 0);
        for (int u : simplex.verts)
            if (vertex_color[u] >= 0) used[vertex_color[u]] = 1;
        for (int c = base; c < base + d + 1; ++c)
            if (!used[c]) return c;
        for (int c = 0; c < total; ++c)
            if (!used[c]) return c;
        return -1; // cannot happen: |simplex| = d+1 < 2d+2
    };

    for (int root = 0; root < dg.n(); ++root) {
        if (side[root] != cls || visited[root]) continue;
        // color the root simplex
        for (int u : dual.simplices[root].verts) {
            if (vertex_color[u] >= 0) continue; // first writer wins
            int c = free_color(dual.simplices[root]);
            if (c < 0) {
                trace.push_back("root simplex " + std::to_string(root) + " had no free color");
                continue;
            }
            vertex_color[u] = c;
        }
        visited[root] = 1;
        std::deque<int> q{root};
        while (!q.empty()) {
            int cur = q.front();
            q.pop_front();
            for (int nxt = dg.nbr(cur).next(0); nxt >= 0; nxt = dg.nbr(cur).next(nxt + 1)) {
                if (side[nxt] != cls || visited[nxt]) continue;
                visited[nxt] = 1;
                for (int u : dual.simplices[nxt].verts) {
                    if (vertex_color[u] >= 0) continue;
                    int c = free_color(dual.simplices[nxt]);
                    if (c >= 0) vertex_color[u] = c;
                }
                q.push_back(nxt);
            }
        }
    }
}

// recolor endpoints of conflicting edges with any globally free color
bool repair_pass(const Graph& g, std::vector<int>& color, int total) {
    bool all_clear = true;
    for (auto [u, v] : g.edge_list()) {
        if (color[u] != color[v]) continue;
        all_clear = false;
        for (int w : {u, v}) {
            std::vector<char> used(static_cast<std::size_t>(total), 0);
            for (int x = g.nbr(w).next(0); x >= 0; x = g.nbr(w).next(x + 1))
                if (color[x] >= 0 && color[x] < total) used[color[x]] = 1;
            int pick = -1;
            for (int c = 0; c < total; ++c)
                if (!used[c]) {
                    pick = c;
                    break;
                }
            if (pick >= 0) {
                color[w] = pick;
                break;
            }
        }
    }
    return all_clear;
}

} // namespace

Theorem1Result theorem1_color(const Graph& g, long long budget) {
    Theorem1Result res;
    TriState mf = is_manifold(g);
    if (mf.unknown()) throw BudgetError("theorem1_color: manifold check exhausted its budget");
    if (mf.no()) throw DomainError("theorem1_color: input is not a manifold");
    const int d = mf.dim;
    res.d = d;
    const int total = 2 * d + 2;

    DualGraph dual = dual_graph(g);
    res.trace.push_back("dual graph: " + std::to_string(dual.graph.n()) + " simplices, " +
                        std::to_string(dual.graph.m()) + " adjacencies");
    res.partition = two_forest_partition(dual);
    res.trace.push_back("two-forest partition: " + res.partition.method);

    if (res.partition.success) {
        std::vector<int> vertex_color(static_cast<std::size_t>(g.n()), -1);
        propagate_forest(dual, res.partition.side, 0, d, vertex_color, res.trace);
        propagate_forest(dual, res.partition.side, 1, d, vertex_color, res.trace);
        bool complete = std::all_of(vertex_color.begin(), vertex_color.end(),
                                    [](int c) { return c >= 0; });
        if (complete) {
            Coloring cand = make_coloring(vertex_color);
            if (proper(g, cand)) {
                res.ok = true;
                res.coloring = std::move(cand);
                res.stage = "forest-partition";
                res.trace.push_back("batch propagation proper with " +
                                    std::to_string(res.coloring.k) + " colors");
                return res;
            }
            // bounded repair
            std::vector<int> fixed = vertex_color;
            bool clean = false;
            for (int pass = 0; pass < 4 * std::max(1, g.n()) && !clean; ++pass)
                clean = repair_pass(g, fixed, total);
            if (clean) {
                Coloring rep = make_coloring(fixed);
                if (proper(g, rep)) {
                    res.ok = true;
                    res.coloring = std::move(rep);
                    res.stage = "repair";
                    res.trace.push_back("bounded repair settled at " +
                                        std::to_string(res.coloring.k) + " colors");
                    return res;
                }
            }
            res.trace.push_back("propagation left conflicts beyond repair");
        } else {
            res.trace.push_back("propagation left uncolored vertices");
        }
    }

    // fallback: greedy first, then the decision solver at 2d+2
    Coloring greedy = greedy_coloring(g);
    if (greedy.k <= total) {
        res.ok = true;
        res.coloring = std::move(greedy);
        res.stage = "fallback-greedy";
        res.trace.push_back("greedy coloring used " + std::to_string(res.coloring.k) + " colors");
        return res;
    }
    KColorResult kr = k_colorable(g, total, budget);
    if (kr.status == KStatus::Colored) {
        res.ok = true;
        res.coloring = std::move(kr.coloring);
        res.stage = "fallback-search";
        res.trace.push_back("decision solver found a " + std::to_string(total) + "-coloring");
        return res;
    }
    res.ok = false;
    res.stage = "fallback-search";
    res.trace.push_back(kr.status == KStatus::Unknown
                            ? "fallback search exhausted its budget"
                            : "no (2d+2)-coloring exists (contradiction with Theorem 1)");
    return res;
}

BoundsReport bounds_report(const Graph& g, bool compute_exact, long long budget) {
    TriState mf = is_manifold(g);
    if (mf.unknown()) throw BudgetError("bounds_report: manifold check exhausted its budget");
    if (mf.no()) throw DomainError("bounds_report: input is not a manifold");
    BoundsReport rep;
    rep.d = mf.dim;
    rep.lower = rep.d + 1;
    rep.upper = 2 * rep.d + 2;
    rep.conjecture = (3 * (rep.d + 1) + 1) / 2;
    if (compute_exact) {
        ChromaticResult x = chromatic_number(g, budget);
        if (x.optimal) rep.exact = x.upper;
    }
    return rep;
}

} // namespace chroma
