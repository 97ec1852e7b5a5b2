#include "chroma/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace chroma {

namespace {

struct Budget {
    long long remaining;
    void tick(const char* where) {
        if (--remaining < 0) throw BudgetError(std::string(where) + ": node budget exhausted");
    }
};

std::vector<std::vector<int>> neighbor_degree_lists(const Graph& g) {
    std::vector<int> deg(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        for (int u : g.neighbors(v)) out[v].push_back(deg[u]);
        std::sort(out[v].begin(), out[v].end());
    }
    return out;
}

bool iso_backtrack(const Graph& a, const Graph& b, std::vector<int>& map_ab,
                   std::vector<int>& map_ba, int mapped, Budget& budget,
                   const std::vector<std::vector<int>>& nda,
                   const std::vector<std::vector<int>>& ndb) {
    const int n = a.n();
    if (mapped == n) return true;
    budget.tick("are_isomorphic");

    // next vertex of A: most mapped neighbors, then max degree, then index
    int best = -1, best_mapped = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
        if (map_ab[v] >= 0) continue;
        int cnt = 0;
        for (int u : a.neighbors(v))
            if (map_ab[u] >= 0) ++cnt;
        int d = a.degree(v);
        if (cnt > best_mapped || (cnt == best_mapped && d > best_deg)) {
            best = v;
            best_mapped = cnt;
            best_deg = d;
        }
    }

    for (int w = 0; w < n; ++w) {
        if (map_ba[w] >= 0) continue;
        if (b.degree(w) != best_deg) continue;
        if (ndb[w] != nda[best]) continue;
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            if (map_ab[u] < 0) continue;
            if (a.adjacent(best, u) != b.adjacent(w, map_ab[u])) ok = false;
        }
        if (!ok) continue;
        map_ab[best] = w;
        map_ba[w] = best;
        if (iso_backtrack(a, b, map_ab, map_ba, mapped + 1, budget, nda, ndb)) return true;
        map_ab[best] = -1;
        map_ba[w] = -1;
    }
    return false;
}

} // namespace

IsoResult are_isomorphic(const Graph& a, const Graph& b, long long budget_nodes) {
    if (a.n() != b.n() || a.m() != b.m()) return {};
    auto nda = neighbor_degree_lists(a);
    auto ndb = neighbor_degree_lists(b);
    {
        auto sa = nda, sb = ndb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return {};
    }
    std::vector<int> map_ab(static_cast<std::size_t>(a.n()), -1);
    std::vector<int> map_ba(static_cast<std::size_t>(a.n()), -1);
    Budget budget{budget_nodes};
    if (iso_backtrack(a, b, map_ab, map_ba, 0, budget, nda, ndb))
        return {true, std::move(map_ab)};
    return {};
}

namespace {

// Equitable refinement: split color classes by multisets of neighbor colors
// until stable. Signatures are re-indexed canonically each round, so the
// resulting coloring is invariant under relabeling.
std::vector<int> refine_colors(const Graph& g, std::vector<int> color, Budget& budget) {
    const int n = g.n();
    for (;;) {
        budget.tick("canonical_certificate");
        std::vector<std::pair<std::vector<int>, int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.push_back(color[v]);
            std::vector<int> ncols;
            for (int u : g.neighbors(v)) ncols.push_back(color[u]);
            std::sort(ncols.begin(), ncols.end());
            s.insert(s.end(), ncols.begin(), ncols.end());
            sig[v] = {std::move(s), v};
        }
        std::map<std::vector<int>, int> index;
        for (const auto& [s, v] : sig) index.emplace(s, 0);
        int next = 0;
        for (auto& [s, idx] : index) idx = next++;
        std::vector<int> fresh(static_cast<std::size_t>(n));
        bool changed = false;
        for (int v = 0; v < n; ++v) {
            fresh[v] = index.at(sig[v].first);
            if (fresh[v] != color[v]) changed = true;
        }
        if (!changed) return color;
        color = std::move(fresh);
    }
}

std::string encode_under(const Graph& g, const std::vector<int>& order) {
    const int n = g.n();
    std::string out;
    out.reserve(4 + static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 7) / 8);
    for (int shift = 0; shift < 32; shift += 8)
        out.push_back(static_cast<char>((n >> shift) & 0xff));
    unsigned char acc = 0;
    int bits = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            acc = static_cast<unsigned char>((acc << 1) | (g.adjacent(order[i], order[j]) ? 1 : 0));
            if (++bits == 8) {
                out.push_back(static_cast<char>(acc));
                acc = 0;
                bits = 0;
            }
        }
    }
    if (bits) out.push_back(static_cast<char>(acc << (8 - bits)));
    return out;
}

bool discrete(const std::vector<int>& color) {
    std::vector<char> seen(color.size(), 0);
    for (int c : color) {
        if (c < 0 || static_cast<std::size_t>(c) >= color.size() || seen[c]) return false;
        seen[c] = 1;
    }
    return true;
}

void canon_search(const Graph& g, const std::vector<int>& color, Budget& budget,
                  std::optional<std::string>& best) {
    const int n = g.n();
    if (discrete(color)) {
        std::vector<int> order(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) order[color[v]] = v;
        std::string enc = encode_under(g, order);
        if (!best || enc < *best) best = std::move(enc);
        return;
    }
    // first (smallest color) non-singleton class
    int target_color = -1;
    {
        std::vector<int> size(static_cast<std::size_t>(n), 0);
        for (int c : color) ++size[c];
        for (int c = 0; c < n; ++c) {
            if (size[c] > 1) {
                target_color = c;
                break;
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (color[v] != target_color) continue;
        budget.tick("canonical_certificate");
        std::vector<int> split = color;
        for (int u = 0; u < n; ++u)
            if (split[u] > target_color || (split[u] == target_color && u != v)) split[u] += 1;
        canon_search(g, refine_colors(g, std::move(split), budget), budget, best);
    }
}

} // namespace

namespace {

std::string canonical_connected(const Graph& g, Budget& budget) {
    // complete and edgeless graphs are determined by n alone, and their
    // individualization trees are factorial; short-circuit them
    const long long all = static_cast<long long>(g.n()) * (g.n() - 1) / 2;
    if (g.m() == 0 || g.m() == all) {
        std::string out(g.m() == 0 ? "e" : "k");
        int n = g.n();
        for (int shift = 0; shift < 32; shift += 8)
            out.push_back(static_cast<char>((n >> shift) & 0xff));
        return out;
    }
    std::vector<int> color(static_cast<std::size_t>(g.n()), 0);
    std::optional<std::string> best;
    canon_search(g, refine_colors(g, std::move(color), budget), budget, best);
    return "g" + *best;
}

} // namespace

std::string canonical_certificate(const Graph& g, long long budget_nodes) {
    Budget budget{budget_nodes};
    std::vector<int> comp;
    int nc = count_components(g, &comp);
    if (nc <= 1) return canonical_connected(g, budget);

    // certificate of a disconnected graph: sorted component certificates
    std::vector<std::string> parts;
    for (int c = 0; c < nc; ++c) {
        std::vector<int> verts;
        for (int v = 0; v < g.n(); ++v)
            if (comp[v] == c) verts.push_back(v);
        parts.push_back(canonical_connected(induced(g, verts).graph, budget));
    }
    std::sort(parts.begin(), parts.end());
    std::string out = "c";
    for (const std::string& p : parts) {
        const std::size_t len = p.size();
        for (int shift = 0; shift < 32; shift += 8)
            out.push_back(static_cast<char>((len >> shift) & 0xff));
        out += p;
    }
    return out;
}

} // namespace chroma
