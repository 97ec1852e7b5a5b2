#include "chroma/manifolds.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace chroma {

namespace {

using SparseRow = std::vector<std::pair<int, long long>>; // sorted by column

long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

void normalize_row(SparseRow& row) {
    long long g = 0;
    for (auto& [c, v] : row) g = gcd_ll(g, v);
    if (g > 1)
        for (auto& [c, v] : row) v /= g;
}

// dst = p*dst - q*src, exact integer arithmetic, gcd-normalized
SparseRow combine_rows(const SparseRow& dst, const SparseRow& src, long long p, long long q) {
    SparseRow out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    auto push = [&](int col, __int128 val) {
        if (val == 0) return;
        long long red = static_cast<long long>(val);
        if (red != val) throw BudgetError("betti: elimination entry overflow");
        out.emplace_back(col, red);
    };
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            push(dst[i].first, static_cast<__int128>(p) * dst[i].second);
            ++i;
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            push(src[j].first, -static_cast<__int128>(q) * src[j].second);
            ++j;
        } else {
            push(dst[i].first,
                 static_cast<__int128>(p) * dst[i].second - static_cast<__int128>(q) * src[j].second);
            ++i;
            ++j;
        }
    }
    normalize_row(out);
    return out;
}

// Exact rank over the rationals by sparse row-echelon reduction: each row
// is reduced against the stored pivot rows until its leading column is
// fresh or the row vanishes. All arithmetic is integral (cross-multiply
// then gcd-normalize); no floating point anywhere.
int rank_sparse(int ncols, std::vector<SparseRow> rows) {
    std::vector<int> pivot_of_col(static_cast<std::size_t>(ncols), -1);
    std::vector<SparseRow> pivots;
    int rank = 0;
    for (SparseRow& row : rows) {
        normalize_row(row);
        while (!row.empty()) {
            int lead = row.front().first;
            int p = pivot_of_col[lead];
            if (p < 0) {
                pivot_of_col[lead] = static_cast<int>(pivots.size());
                pivots.push_back(std::move(row));
                ++rank;
                break;
            }
            row = combine_rows(row, pivots[static_cast<std::size_t>(p)],
                               pivots[static_cast<std::size_t>(p)].front().second,
                               row.front().second);
        }
    }
    return rank;
}

} // namespace

BettiVector betti(const Graph& g, long long max_simplices) {
    std::vector<Simplex> simplices = all_cliques(g, max_simplices);
    int top = -1;
    for (const Simplex& s : simplices) top = std::max(top, s.dim());

    // per-dimension lex-sorted lists (all_cliques already emits them sorted)
    std::vector<std::vector<Simplex>> layer(static_cast<std::size_t>(top + 1));
    for (Simplex& s : simplices) layer[static_cast<std::size_t>(s.dim())].push_back(std::move(s));

    BettiVector result;
    if (top < 0) return result;

    auto index_of = [](const std::vector<Simplex>& list, const Simplex& s) {
        auto it = std::lower_bound(list.begin(), list.end(), s);
        return static_cast<int>(it - list.begin());
    };

    // rank of each boundary map d_k : C_k -> C_{k-1}; rows indexed by C_k
    // (row r lists the faces of simplex r with alternating signs)
    std::vector<int> rank(static_cast<std::size_t>(top + 2), 0);
    for (int k = 1; k <= top; ++k) {
        const auto& domain = layer[static_cast<std::size_t>(k)];
        const auto& codomain = layer[static_cast<std::size_t>(k - 1)];
        std::vector<SparseRow> rows(domain.size());
        for (std::size_t r = 0; r < domain.size(); ++r) {
            const Simplex& s = domain[r];
            long long sign = 1;
            for (std::size_t drop = 0; drop < s.verts.size(); ++drop) {
                Simplex face;
                face.verts.reserve(s.verts.size() - 1);
                for (std::size_t i = 0; i < s.verts.size(); ++i)
                    if (i != drop) face.verts.push_back(s.verts[i]);
                rows[r].emplace_back(index_of(codomain, face), sign);
                sign = -sign;
            }
            std::sort(rows[r].begin(), rows[r].end());
        }
        rank[static_cast<std::size_t>(k)] = rank_sparse(static_cast<int>(codomain.size()),
                                                        std::move(rows));
    }

    for (int k = 0; k <= top; ++k) {
        long long fk = static_cast<long long>(layer[static_cast<std::size_t>(k)].size());
        result.b.push_back(fk - rank[static_cast<std::size_t>(k)] -
                           rank[static_cast<std::size_t>(k + 1)]);
    }
    while (result.b.size() > 1 && result.b.back() == 0) result.b.pop_back();
    return result;
}

} // namespace chroma
