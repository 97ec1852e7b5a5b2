#include "chroma/graph.hpp"

#include <algorithm>
#include <functional>

namespace chroma {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw DomainError("graph: negative vertex count");
    adj_.assign(static_cast<std::size_t>(n), Bitset(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw DomainError("graph: edge endpoint out of range");
        if (u == v) throw DomainError("graph: self-loop rejected");
        if (!adj_[u].test(v)) {
            adj_[u].set(v);
            adj_[v].set(u);
            ++m_;
        }
    }
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1))
            out.emplace_back(u, v);
    return out;
}

std::string Graph::adjacency_key() const {
    std::string key;
    key.reserve(sizeof(n_) + (adj_.empty() ? 0 : adj_.size() * adj_[0].words() * 8));
    key.append(reinterpret_cast<const char*>(&n_), sizeof(n_));
    for (const Bitset& row : adj_)
        key.append(reinterpret_cast<const char*>(row.data()),
                   row.words() * sizeof(std::uint64_t));
    return key;
}

bool is_clique(const Graph& g, const Simplex& s) {
    for (std::size_t i = 0; i < s.verts.size(); ++i) {
        if (s.verts[i] < 0 || s.verts[i] >= g.n()) return false;
        if (i > 0 && s.verts[i - 1] >= s.verts[i]) return false;
        for (std::size_t j = i + 1; j < s.verts.size(); ++j)
            if (!g.adjacent(s.verts[i], s.verts[j])) return false;
    }
    return true;
}

Subgraph unit_sphere(const Graph& g, int v) {
    if (v < 0 || v >= g.n()) throw DomainError("unit_sphere: vertex out of range");
    return induced(g, g.nbr(v));
}

Subgraph induced(const Graph& g, const Bitset& s) {
    return induced(g, s.to_vector());
}

Subgraph induced(const Graph& g, const std::vector<int>& s) {
    const int k = static_cast<int>(s.size());
    std::vector<int> pos(static_cast<std::size_t>(g.n()), -1);
    for (int i = 0; i < k; ++i) {
        if (s[i] < 0 || s[i] >= g.n()) throw DomainError("induced: vertex out of range");
        if (pos[s[i]] >= 0) throw DomainError("induced: duplicate vertex in selection");
        pos[s[i]] = i;
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(s[i], s[j])) edges.emplace_back(i, j);
    return Subgraph{Graph(k, edges), s};
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph(g.n(), edges);
}

namespace {

// Ascending extension: cand holds vertices > last that are adjacent to all
// of cur, so emitted cliques come out in lexicographic order.
void extend_cliques(const Graph& g, std::vector<int>& cur, const Bitset& cand, int k,
                    const std::function<void(const std::vector<int>&)>& emit) {
    if (static_cast<int>(cur.size()) == k) {
        emit(cur);
        return;
    }
    for (int v = cand.next(0); v >= 0; v = cand.next(v + 1)) {
        cur.push_back(v);
        Bitset next = cand & g.nbr(v);
        next.reset_below(v + 1);
        extend_cliques(g, cur, next, k, emit);
        cur.pop_back();
    }
}

} // namespace

std::vector<Simplex> cliques(const Graph& g, int k) {
    if (k < 1) throw DomainError("cliques: k must be >= 1");
    std::vector<Simplex> out;
    std::vector<int> cur;
    extend_cliques(g, cur, Bitset::full(g.n()), k,
                   [&](const std::vector<int>& c) { out.emplace_back(c); });
    return out;
}

std::vector<Simplex> all_cliques(const Graph& g, long long max_simplices) {
    std::vector<Simplex> out;
    for (int k = 1;; ++k) {
        std::vector<Simplex> layer = cliques(g, k);
        if (layer.empty()) break;
        if (static_cast<long long>(out.size() + layer.size()) > max_simplices)
            throw BudgetError("all_cliques: simplex budget exceeded");
        out.insert(out.end(), std::make_move_iterator(layer.begin()),
                   std::make_move_iterator(layer.end()));
    }
    return out;
}

namespace {

void bron_kerbosch(const Graph& g, std::vector<int>& r, Bitset p, Bitset x,
                   std::vector<Simplex>& out) {
    if (p.none() && x.none()) {
        std::vector<int> clique = r;
        std::sort(clique.begin(), clique.end());
        out.emplace_back(std::move(clique));
        return;
    }
    // pivot: vertex of P∪X with the most neighbors in P
    int pivot = -1, best = -1;
    Bitset px = p | x;
    for (int u = px.next(0); u >= 0; u = px.next(u + 1)) {
        int c = p.and_count(g.nbr(u));
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    Bitset ext = p - g.nbr(pivot);
    for (int v = ext.next(0); v >= 0; v = ext.next(v + 1)) {
        r.push_back(v);
        bron_kerbosch(g, r, p & g.nbr(v), x & g.nbr(v), out);
        r.pop_back();
        p.reset(v);
        x.set(v);
    }
}

} // namespace

std::vector<Simplex> maximal_cliques(const Graph& g) {
    if (g.n() == 0) return {};
    std::vector<Simplex> out;
    std::vector<int> r;
    bron_kerbosch(g, r, Bitset::full(g.n()), Bitset(g.n()), out);
    std::sort(out.begin(), out.end());
    return out;
}

FVector f_vector(const Graph& g) {
    FVector f;
    for (int k = 1;; ++k) {
        long long c = static_cast<long long>(cliques(g, k).size());
        if (c == 0) break;
        f.counts.push_back(c);
    }
    return f;
}

int clique_top_size(const Graph& g) {
    int best = 0;
    for (const Simplex& s : maximal_cliques(g)) best = std::max(best, s.size());
    return best;
}

int count_components(const Graph& g, std::vector<int>* component) {
    std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
    int nc = 0;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = nc;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = g.nbr(u).next(0); v >= 0; v = g.nbr(u).next(v + 1)) {
                if (comp[v] < 0) {
                    comp[v] = nc;
                    stack.push_back(v);
                }
            }
        }
        ++nc;
    }
    if (component) *component = std::move(comp);
    return nc;
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    return count_components(g) == 1;
}

bool is_forest(const Graph& g) {
    return g.m() == g.n() - count_components(g);
}

bool is_cycle_graph(const Graph& g) {
    if (g.n() < 3 || !is_connected(g)) return false;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

bool is_triangle_free(const Graph& g) {
    for (auto [u, v] : g.edge_list())
        if (g.nbr(u).and_count(g.nbr(v)) > 0) return false;
    return true;
}

} // namespace chroma
