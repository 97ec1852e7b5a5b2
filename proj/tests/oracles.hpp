// Independent oracles used to freeze expected values. Everything here is
// deliberately naive and shares no code with the implementation paths it
// checks.
#pragma once

#include "chroma/graph.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace oracle {

// all k-vertex cliques by direct subset enumeration (n <= ~20)
inline std::vector<std::vector<int>> naive_cliques(const chroma::Graph& g, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int idx, int from) -> void {
        if (idx == k) {
            out.push_back(pick);
            return;
        }
        for (int v = from; v < g.n(); ++v) {
            bool ok = true;
            for (int i = 0; i < idx; ++i)
                if (!g.adjacent(pick[i], v)) ok = false;
            if (!ok) continue;
            pick[idx] = v;
            self(self, idx + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

// exact chromatic number by plain index-order backtracking (no saturation
// heuristics, no bounds beyond feasibility)
inline bool brute_k_colorable(const chroma::Graph& g, int k) {
    std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
    auto rec = [&](auto&& self, int v, int used) -> bool {
        if (v == g.n()) return true;
        int cap = std::min(k, used + 1);
        for (int c = 0; c < cap; ++c) {
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (color[u] == c && g.adjacent(u, v)) ok = false;
            if (!ok) continue;
            color[v] = c;
            if (self(self, v + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

inline int brute_chromatic(const chroma::Graph& g) {
    if (g.n() == 0) return 0;
    for (int k = 1;; ++k)
        if (brute_k_colorable(g, k)) return k;
}

// rank by floating-point Gaussian elimination with partial pivoting;
// entries of boundary matrices are tiny, so a fixed threshold is safe
inline int float_rank(std::vector<std::vector<double>> m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = r;
        for (std::size_t i = r; i < rows; ++i)
            if (std::fabs(m[i][c]) > std::fabs(m[best][c])) best = i;
        if (std::fabs(m[best][c]) < 1e-9) continue;
        std::swap(m[r], m[best]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            double f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

// Betti numbers over the rationals via float ranks of the boundary maps of
// the Whitney complex, trailing zeros trimmed
inline std::vector<long long> float_betti(const chroma::Graph& g) {
    std::vector<std::vector<std::vector<int>>> layer;
    for (int k = 1;; ++k) {
        auto c = naive_cliques(g, k);
        if (c.empty()) break;
        layer.push_back(std::move(c));
    }
    if (layer.empty()) return {};
    std::vector<int> rank(layer.size() + 1, 0);
    for (std::size_t k = 1; k < layer.size(); ++k) {
        const auto& dom = layer[k];
        const auto& cod = layer[k - 1];
        std::vector<std::vector<double>> m(cod.size(), std::vector<double>(dom.size(), 0.0));
        for (std::size_t col = 0; col < dom.size(); ++col) {
            double sign = 1.0;
            for (std::size_t drop = 0; drop < dom[col].size(); ++drop) {
                std::vector<int> face;
                for (std::size_t i = 0; i < dom[col].size(); ++i)
                    if (i != drop) face.push_back(dom[col][i]);
                auto it = std::lower_bound(cod.begin(), cod.end(), face);
                m[static_cast<std::size_t>(it - cod.begin())][col] = sign;
                sign = -sign;
            }
        }
        rank[k] = float_rank(std::move(m));
    }
    std::vector<long long> b;
    for (std::size_t k = 0; k < layer.size(); ++k)
        b.push_back(static_cast<long long>(layer[k].size()) - rank[k] - rank[k + 1]);
    while (b.size() > 1 && b.back() == 0) b.pop_back();
    return b;
}

// valid Eulerian circuit: consecutive edges, closed, every edge once
inline bool valid_circuit(const chroma::Graph& g, const std::vector<std::pair<int, int>>& c) {
    if (c.empty()) return g.m() == 0;
    if (static_cast<long long>(c.size()) != g.m()) return false;
    std::vector<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < c.size(); ++i) {
        auto [u, v] = c[i];
        if (!g.adjacent(u, v)) return false;
        if (c[(i + 1) % c.size()].first != v) return false;
        seen.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    return true;
}

inline chroma::Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return chroma::Graph(n, edges);
}

inline chroma::Graph relabel(const chroma::Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edge_list()) edges.emplace_back(perm[u], perm[v]);
    return chroma::Graph(g.n(), edges);
}

inline std::vector<int> random_perm(std::mt19937& rng, int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// all 2^(n choose 2) labeled graphs on n vertices (n <= 5)
inline std::vector<chroma::Graph> labeled_graphs(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::vector<chroma::Graph> out;
    for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1) edges.push_back(slots[i]);
        out.emplace_back(n, edges);
    }
    return out;
}

} // namespace oracle
