#include "chroma/fisk.hpp"

#include <algorithm>

namespace chroma {

namespace {

int manifold_dim_or_throw(const Graph& g, long long budget, const char* who, int min_d) {
    TriState mf = is_manifold(g, budget);
    if (mf.unknown()) throw BudgetError(std::string(who) + ": manifold check exhausted its budget");
    if (mf.no()) throw DomainError(std::string(who) + ": input is not a manifold (" + mf.note + ")");
    if (mf.dim < min_d)
        throw DomainError(std::string(who) + ": needs dimension >= " + std::to_string(min_d) +
                          ", got " + std::to_string(mf.dim));
    return mf.dim;
}

Bitset intersect_spheres(const Graph& g, const Simplex& x) {
    Bitset acc = Bitset::full(g.n());
    for (int v : x.verts) acc &= g.nbr(v);
    return acc;
}

} // namespace

DualSphere dual_sphere(const Graph& g, const Simplex& x, long long budget) {
    const int d = manifold_dim_or_throw(g, budget, "dual_sphere", 2);
    if (x.dim() != d - 2)
        throw DomainError("dual_sphere: simplex has dimension " + std::to_string(x.dim()) +
                          ", expected " + std::to_string(d - 2));
    if (!is_clique(g, x)) throw DomainError("dual_sphere: vertices do not form a clique");

    DualSphere ds;
    ds.circle = induced(g, intersect_spheres(g, x));
    ds.length = ds.circle.graph.n();
    // d-simplices containing x correspond to the edges of the dual circle
    ds.incident_top = static_cast<int>(ds.circle.graph.m());
    ds.is_circle = is_cycle_graph(ds.circle.graph);
    return ds;
}

namespace {

void classify_components(FiskVariety& fv) {
    const Graph& carrier = fv.carrier;
    std::vector<int> comp;
    int nc = count_components(carrier, &comp);
    for (int c = 0; c < nc; ++c) {
        std::vector<int> local;
        for (int v = 0; v < carrier.n(); ++v)
            if (comp[v] == c) local.push_back(v);
        FiskComponent fc;
        for (int v : local) fc.vertices.push_back(fv.carrier_vertices[v]);
        Subgraph sub = induced(carrier, local);
        if (sub.graph.n() == 1) {
            fc.shape = FiskComponent::Shape::Point;
        } else if (is_cycle_graph(sub.graph)) {
            fc.shape = FiskComponent::Shape::Cycle;
            fc.cycle_length = sub.graph.n();
        } else {
            fc.shape = FiskComponent::Shape::Other;
            fc.fvec = f_vector(sub.graph);
        }
        fv.components.push_back(std::move(fc));
    }
}

} // namespace

FiskVariety fisk_variety(const Graph& g, long long budget) {
    FiskVariety fv;
    fv.d = manifold_dim_or_throw(g, budget, "fisk_variety", 2);

    for (const Simplex& x : cliques(g, fv.d - 1)) {
        Bitset circle_verts = intersect_spheres(g, x);
        Subgraph circle = induced(g, circle_verts);
        if (!is_cycle_graph(circle.graph))
            throw DomainError("fisk_variety: dual sphere of a (d-2)-simplex is not a circle");
        if (circle.graph.n() % 2 == 1) fv.odd.push_back(x);
    }

    // carrier: vertices of odd simplices, edges inside a common odd simplex
    Bitset used(g.n());
    for (const Simplex& s : fv.odd)
        for (int v : s.verts) used.set(v);
    fv.carrier_vertices = used.to_vector();
    std::vector<int> pos(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < fv.carrier_vertices.size(); ++i)
        pos[fv.carrier_vertices[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (const Simplex& s : fv.odd)
        for (std::size_t i = 0; i < s.verts.size(); ++i)
            for (std::size_t j = i + 1; j < s.verts.size(); ++j)
                edges.emplace_back(pos[s.verts[i]], pos[s.verts[j]]);
    fv.carrier = Graph(static_cast<int>(fv.carrier_vertices.size()), edges);
    classify_components(fv);
    return fv;
}

FiskVariety fisk_local(const Graph& g, int v, long long budget) {
    if (v < 0 || v >= g.n()) throw DomainError("fisk_local: vertex out of range");
    manifold_dim_or_throw(g, budget, "fisk_local", 3);
    Subgraph link = unit_sphere(g, v);
    FiskVariety fv = fisk_variety(link.graph, budget);
    // map back into g's labels
    for (Simplex& s : fv.odd) {
        for (int& u : s.verts) u = link.vmap[u];
        std::sort(s.verts.begin(), s.verts.end());
    }
    std::sort(fv.odd.begin(), fv.odd.end());
    for (int& u : fv.carrier_vertices) u = link.vmap[u];
    for (FiskComponent& c : fv.components)
        for (int& u : c.vertices) u = link.vmap[u];
    return fv;
}

FiskCriterionReport fisk_criterion(const Graph& g, long long budget) {
    const int d = manifold_dim_or_throw(g, budget, "fisk_criterion", 3);
    FiskCriterionReport rep;
    rep.expected_dim = d - 2;
    rep.criterion_holds = true;
    for (int v = 0; v < g.n(); ++v) {
        FiskVariety local = fisk_local(g, v, budget);
        FiskCriterionReport::LocalVerdict verdict;
        if (local.empty()) {
            verdict = FiskCriterionReport::LocalVerdict::Empty;
        } else {
            TriState sph = is_sphere(local.carrier, budget);
            verdict = (sph.yes() && sph.dim == d - 3)
                          ? FiskCriterionReport::LocalVerdict::Sphere
                          : FiskCriterionReport::LocalVerdict::Other;
        }
        if (verdict == FiskCriterionReport::LocalVerdict::Other) rep.criterion_holds = false;
        rep.per_vertex.push_back(verdict);
    }
    rep.carrier_check = is_manifold(fisk_variety(g, budget).carrier, budget);
    return rep;
}

bool is_d_eulerian(const Graph& g, long long budget) {
    return fisk_variety(g, budget).empty();
}

std::vector<std::pair<int, int>> eulerian_circuit(const Graph& g) {
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) % 2 != 0)
            throw DomainError("eulerian_circuit: vertex " + std::to_string(v) + " has odd degree");
    {
        std::vector<int> comp;
        if (count_components(g, &comp) > 1) {
            int other = 0;
            while (comp[other] == comp[0]) ++other;
            throw DomainError("eulerian_circuit: graph is disconnected (vertices 0 and " +
                              std::to_string(other) + ")");
        }
    }
    if (g.m() == 0) return {};
    const int start = 0;

    // Hierholzer with an explicit stack over a mutable adjacency copy
    std::vector<Bitset> rem;
    rem.reserve(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) rem.push_back(g.nbr(v));
    std::vector<int> stack{start}, tour;
    while (!stack.empty()) {
        int u = stack.back();
        int w = rem[u].next(0);
        if (w < 0) {
            tour.push_back(u);
            stack.pop_back();
        } else {
            rem[u].reset(w);
            rem[w].reset(u);
            stack.push_back(w);
        }
    }
    std::vector<std::pair<int, int>> circuit;
    for (std::size_t i = 0; i + 1 < tour.size(); ++i)
        circuit.emplace_back(tour[i], tour[i + 1]);
    return circuit;
}

} // namespace chroma
