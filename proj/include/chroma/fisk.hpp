#pragma once

#include "chroma/graph.hpp"
#include "chroma/manifolds.hpp"

#include <string>
#include <vector>

namespace chroma {

// Dual circle of a (d-2)-simplex x in a d-manifold: the graph induced on
// the intersection of the unit spheres of x's vertices. For a manifold this
// is a 1-sphere; the verdict is verified, not assumed.
struct DualSphere {
    Subgraph circle;       // labels back into the host graph
    bool is_circle = false;
    int length = 0;        // vertex count of the dual circle
    int incident_top = 0;  // number of d-simplices containing x (must equal length)
};
DualSphere dual_sphere(const Graph& g, const Simplex& x, long long budget = kRecursionBudget);

struct FiskComponent {
    enum class Shape { Cycle, Point, Other };
    Shape shape = Shape::Other;
    std::vector<int> vertices; // host labels
    int cycle_length = 0;      // when shape == Cycle
    FVector fvec;              // when shape == Other
};

// The odd (d-2)-simplices of a d-manifold together with the subgraph they
// generate (edges only inside a common odd simplex).
struct FiskVariety {
    int d = -1;
    std::vector<Simplex> odd;
    Graph carrier;                     // on 0..carrier_vertices.size()-1
    std::vector<int> carrier_vertices; // carrier label -> host label
    std::vector<FiskComponent> components;

    bool empty() const { return odd.empty(); }
};
FiskVariety fisk_variety(const Graph& g, long long budget = kRecursionBudget);

// Fisk variety of the unit sphere of v (a (d-1)-manifold); carrier labels
// are mapped back into g.
FiskVariety fisk_local(const Graph& g, int v, long long budget = kRecursionBudget);

struct FiskCriterionReport {
    enum class LocalVerdict { Empty, Sphere, Other };
    std::vector<LocalVerdict> per_vertex;
    bool criterion_holds = false;
    int expected_dim = -2;   // d - 2
    TriState carrier_check;  // is_manifold of the carrier, run when the criterion holds
};

// Checks O(S(x)) against "(d-3)-sphere or empty" for every vertex, and when
// that holds cross-checks that the carrier of O(G) is a (d-2)-manifold.
FiskCriterionReport fisk_criterion(const Graph& g, long long budget = kRecursionBudget);

// empty Fisk variety
bool is_d_eulerian(const Graph& g, long long budget = kRecursionBudget);

// Hierholzer circuit visiting every edge exactly once. Requires all degrees
// even and all edges in one connected component; throws DomainError naming
// the offending vertex otherwise.
std::vector<std::pair<int, int>> eulerian_circuit(const Graph& g);

} // namespace chroma
