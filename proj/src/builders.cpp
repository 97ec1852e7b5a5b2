#include "chroma/builders.hpp"

#include <algorithm>

namespace chroma {

Graph cycle(int n) {
    if (n < 3) throw DomainError("cycle: need at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return Graph(n, edges);
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph points(int n) { return Graph(n, {}); }

Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph octahedron() { return join(points(2), join(points(2), points(2))); }

namespace {
constexpr std::pair<int, int> kIcosahedronEdges[] = {
#include "data/icosahedron_edges.inc"
};
constexpr std::pair<int, int> kCell600Edges[] = {
#include "data/cell600_edges.inc"
};
} // namespace

Graph icosahedron() {
    return Graph(12, {std::begin(kIcosahedronEdges), std::end(kIcosahedronEdges)});
}

Graph cell600() {
    return Graph(120, {std::begin(kCell600Edges), std::end(kCell600Edges)});
}

Graph join(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges = a.edge_list();
    const int off = a.n();
    for (auto [u, v] : b.edge_list()) edges.emplace_back(u + off, v + off);
    for (int u = 0; u < a.n(); ++u)
        for (int v = 0; v < b.n(); ++v) edges.emplace_back(u, v + off);
    return Graph(a.n() + b.n(), edges);
}

Graph suspension(const Graph& g) { return join(g, points(2)); }

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges = a.edge_list();
    const int off = a.n();
    for (auto [u, v] : b.edge_list()) edges.emplace_back(u + off, v + off);
    return Graph(a.n() + b.n(), edges);
}

namespace {

std::vector<Simplex> cliques_by_size(const Graph& g, long long max_simplices) {
    return all_cliques(g, max_simplices); // already (size, lex) ordered
}

Bitset simplex_bits(const Simplex& s, int n) {
    return Bitset::of(n, s.verts.begin(), s.verts.end());
}

} // namespace

Refinement barycentric(const Graph& g, long long max_simplices) {
    Refinement r;
    r.cells = cliques_by_size(g, max_simplices);
    const int m = static_cast<int>(r.cells.size());
    std::vector<Bitset> bits;
    bits.reserve(static_cast<std::size_t>(m));
    for (const Simplex& s : r.cells) {
        bits.push_back(simplex_bits(s, g.n()));
        r.dim_label.push_back(s.dim());
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (r.cells[i].size() == r.cells[j].size()) continue;
            // cells are size-ordered, so i's clique is the smaller one
            if (bits[i].subset_of(bits[j])) edges.emplace_back(i, j);
        }
    r.graph = Graph(m, edges);
    return r;
}

CartesianProduct cartesian(const Graph& a, const Graph& b, long long max_simplices) {
    CartesianProduct p;
    p.cells_a = cliques_by_size(a, max_simplices);
    p.cells_b = cliques_by_size(b, max_simplices);
    const int na = static_cast<int>(p.cells_a.size());
    const int nb = static_cast<int>(p.cells_b.size());
    if (static_cast<long long>(na) * nb > max_simplices)
        throw BudgetError("cartesian: pair count exceeds simplex budget");

    std::vector<Bitset> bits_a, bits_b;
    for (const Simplex& s : p.cells_a) bits_a.push_back(simplex_bits(s, a.n()));
    for (const Simplex& s : p.cells_b) bits_b.push_back(simplex_bits(s, b.n()));

    const int n = na * nb;
    p.pairs.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            p.pairs.emplace_back(i, j);
            p.dim_label.push_back(p.cells_a[i].dim() + p.cells_b[j].dim());
        }

    // sub_a[i][k]: cell i of A contains cell k (non-strictly)
    auto contains_table = [](const std::vector<Bitset>& bits) {
        const int m = static_cast<int>(bits.size());
        std::vector<Bitset> t(static_cast<std::size_t>(m), Bitset(m));
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < m; ++k)
                if (bits[k].subset_of(bits[i])) t[i].set(k);
        return t;
    };
    std::vector<Bitset> sub_a = contains_table(bits_a);
    std::vector<Bitset> sub_b = contains_table(bits_b);

    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        auto [i, j] = p.pairs[static_cast<std::size_t>(v)];
        for (int w = v + 1; w < n; ++w) {
            auto [k, l] = p.pairs[static_cast<std::size_t>(w)];
            if ((sub_a[k].test(i) && sub_b[l].test(j)) ||
                (sub_a[i].test(k) && sub_b[j].test(l)))
                edges.emplace_back(v, w);
        }
    }
    p.graph = Graph(n, edges);
    return p;
}

Graph sabidussi(const Graph& a, const Graph& b) {
    const int n = a.n() * b.n();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        const int ua = u / b.n(), ub = u % b.n();
        for (int v = u + 1; v < n; ++v) {
            const int va = v / b.n(), vb = v % b.n();
            if (a.adjacent(ua, va) || b.adjacent(ub, vb)) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

Graph shannon(const Graph& a, const Graph& b) {
    const int n = a.n() * b.n();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        const int ua = u / b.n(), ub = u % b.n();
        for (int v = u + 1; v < n; ++v) {
            const int va = v / b.n(), vb = v % b.n();
            if ((ua == va || a.adjacent(ua, va)) && (ub == vb || b.adjacent(ub, vb)))
                edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

Graph edge_refine(const Graph& g, int a, int b) {
    if (a < 0 || a >= g.n() || b < 0 || b >= g.n() || a == b || !g.adjacent(a, b))
        throw DomainError("edge_refine: (a, b) is not an edge");
    const int m = g.n();
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edge_list())
        if (!(u == std::min(a, b) && v == std::max(a, b))) edges.emplace_back(u, v);
    edges.emplace_back(a, m);
    edges.emplace_back(b, m);
    Bitset common = g.nbr(a) & g.nbr(b);
    for (int w = common.next(0); w >= 0; w = common.next(w + 1)) edges.emplace_back(w, m);
    return Graph(m + 1, edges);
}

} // namespace chroma
