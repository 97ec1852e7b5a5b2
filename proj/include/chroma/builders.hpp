#pragma once

#include "chroma/graph.hpp"

#include <utility>
#include <vector>

namespace chroma {

// named generators
Graph cycle(int n);    // n >= 3; a 1-sphere iff n >= 4
Graph complete(int n); // K_n
Graph points(int n);   // n isolated vertices; points(2) is the 0-sphere
Graph path(int n);     // n vertices, n-1 edges
Graph octahedron();    // join of three 0-spheres
Graph icosahedron();
Graph cell600(); // 120 vertices / 720 edges, from the checked-in asset

// Zykov join: disjoint union plus all cross edges. A keeps its labels,
// B's vertex i becomes A.n() + i.
Graph join(const Graph& a, const Graph& b);

// join with the 0-sphere
Graph suspension(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);

// Barycentric refinement: one vertex per nonempty clique (ordered by size
// then lexicographically), edges along strict containment. dim_label[v] is
// the dimension of the clique behind vertex v.
struct Refinement {
    Graph graph;
    std::vector<Simplex> cells;
    std::vector<int> dim_label;
};
Refinement barycentric(const Graph& g, long long max_simplices = 200000);

// Cartesian (Stanley-Reisner) product (A x B)_1: vertices are pairs of
// nonempty cliques in row-major order, edges when one pair contains the
// other coordinatewise. dim_label[v] = dim(x) + dim(y) for pair (x, y).
struct CartesianProduct {
    Graph graph;
    std::vector<Simplex> cells_a, cells_b;
    std::vector<std::pair<int, int>> pairs; // vertex -> (index in cells_a, index in cells_b)
    std::vector<int> dim_label;
};
CartesianProduct cartesian(const Graph& a, const Graph& b, long long max_simplices = 200000);

// Sabidussi (large) product: pairs adjacent when either coordinate pair is
// adjacent. Shannon (strong) product: pairs adjacent when each coordinate
// is equal or adjacent; a subgraph of the Sabidussi product. Row-major
// labeling (a, b) -> a * B.n() + b for both.
Graph sabidussi(const Graph& a, const Graph& b);
Graph shannon(const Graph& a, const Graph& b);

// Replace edge (a, b) by a vertex m adjacent to a, b and S(a) ∩ S(b);
// m gets the label G.n(). Throws DomainError when (a, b) is not an edge.
Graph edge_refine(const Graph& g, int a, int b);

} // namespace chroma
