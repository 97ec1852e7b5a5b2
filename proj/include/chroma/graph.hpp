#pragma once

#include "chroma/bitset.hpp"
#include "chroma/errors.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace chroma {

// Immutable finite simple graph. Vertices are 0..n-1; adjacency is stored
// as one bitset row per vertex (symmetric, irreflexive). Equality is
// bit-exact equality of (n, adjacency).
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    long long m() const { return m_; }

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const Bitset& nbr(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    // sorted lexicographically, u < v
    std::vector<std::pair<int, int>> edge_list() const;
    std::vector<int> neighbors(int v) const { return adj_[v].to_vector(); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

    // raw adjacency bytes, usable as an exact-identity cache key
    std::string adjacency_key() const;

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<Bitset> adj_;
};

// Sorted vertex tuple; a clique of its host graph wherever one is implied.
struct Simplex {
    std::vector<int> verts;

    Simplex() = default;
    explicit Simplex(std::vector<int> v) : verts(std::move(v)) {}

    int dim() const { return static_cast<int>(verts.size()) - 1; }
    int size() const { return static_cast<int>(verts.size()); }

    friend bool operator==(const Simplex& a, const Simplex& b) = default;
    friend auto operator<=>(const Simplex& a, const Simplex& b) { return a.verts <=> b.verts; }
};

bool is_clique(const Graph& g, const Simplex& s);

// counts[k] = number of k-dimensional simplices (cliques of size k+1)
struct FVector {
    std::vector<long long> counts;

    long long euler() const {
        long long chi = 0, sign = 1;
        for (long long c : counts) {
            chi += sign * c;
            sign = -sign;
        }
        return chi;
    }
    friend bool operator==(const FVector& a, const FVector& b) = default;
};

struct Subgraph {
    Graph graph;
    std::vector<int> vmap; // vmap[new vertex] = original vertex
};

// Induced subgraph on the neighbors of v, relabeled 0..deg(v)-1.
Subgraph unit_sphere(const Graph& g, int v);

// Induced subgraph on S (vertex order preserved), with relabeling map.
Subgraph induced(const Graph& g, const Bitset& s);
Subgraph induced(const Graph& g, const std::vector<int>& s);

Graph complement(const Graph& g);

// All cliques of exactly k vertices, lexicographic. k >= 1.
std::vector<Simplex> cliques(const Graph& g, int k);

// All nonempty cliques ordered by (size, lex). Throws BudgetError when the
// Whitney complex exceeds max_simplices.
std::vector<Simplex> all_cliques(const Graph& g, long long max_simplices = 200000);

// All maximal cliques (Bron-Kerbosch with pivoting), sorted lexicographically.
std::vector<Simplex> maximal_cliques(const Graph& g);

FVector f_vector(const Graph& g);

int clique_top_size(const Graph& g); // size of the largest clique

bool is_connected(const Graph& g);
int count_components(const Graph& g, std::vector<int>* component = nullptr);
bool is_forest(const Graph& g);
bool is_cycle_graph(const Graph& g); // connected, 2-regular, n >= 3
bool is_triangle_free(const Graph& g);

} // namespace chroma
