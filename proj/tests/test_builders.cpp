#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chroma/builders.hpp"
#include "chroma/coloring.hpp"
#include "chroma/graph_io.hpp"
#include "chroma/isomorphism.hpp"
#include "chroma/manifolds.hpp"

#include "oracles.hpp"

#include <fstream>
#include <sstream>

using namespace chroma;

TEST_CASE("generators") {
    CHECK(cycle(5).m() == 5);
    CHECK_THROWS_AS(cycle(2), DomainError);
    CHECK(complete(6).m() == 15);
    CHECK(points(4).m() == 0);
    CHECK(path(6).m() == 5);

    Graph oct = octahedron();
    CHECK(oct.n() == 6);
    CHECK(oct.m() == 12);

    Graph ico = icosahedron();
    CHECK(ico.n() == 12);
    CHECK(ico.m() == 30);
    for (int v = 0; v < 12; ++v) CHECK(ico.degree(v) == 5);

    // 1-sphere from length 4 on; points(2) is the 0-sphere
    CHECK(is_sphere(cycle(3)).no());
    CHECK(is_sphere(cycle(4)).yes());
    CHECK(is_sphere(points(2)).dim == 0);
}

TEST_CASE("the 600-cell asset matches the checked-in data file") {
    Graph cell = cell600();
    CHECK(cell.n() == 120);
    CHECK(cell.m() == 720);
    for (int v = 0; v < 120; ++v) CHECK(cell.degree(v) == 12);

    Graph from_file = load_graph(std::string(CHROMA_DATA_DIR) + "/cell600.json");
    CHECK(from_file == cell);

    std::ifstream in(std::string(CHROMA_DATA_DIR) + "/cell600.json", std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == to_canonical_json(cell)); // byte-exact canonical form

    TriState mf = is_manifold(cell);
    CHECK(mf.yes());
    CHECK(mf.dim == 3);
}

TEST_CASE("join") {
    CHECK(join(points(1), points(1)) == complete(2));
    CHECK(are_isomorphic(join(points(2), join(points(2), points(2))), octahedron()).isomorphic);

    Graph s3 = join(cycle(5), cycle(5));
    CHECK(s3.n() == 10);
    CHECK(s3.m() == 35);
    CHECK(is_sphere(s3).dim == 3);

    // associativity up to isomorphism on random small graphs
    std::mt19937 rng(3);
    for (int rep = 0; rep < 6; ++rep) {
        Graph a = oracle::random_graph(rng, 3 + rep % 3, 0.5);
        Graph b = oracle::random_graph(rng, 4, 0.5);
        Graph c = oracle::random_graph(rng, 3, 0.5);
        CHECK(are_isomorphic(join(join(a, b), c), join(a, join(b, c))).isomorphic);
    }
}

TEST_CASE("suspension") {
    CHECK(suspension(Graph(0, {})) == points(2));
    CHECK(are_isomorphic(suspension(points(2)), cycle(4)).isomorphic);
    CHECK(are_isomorphic(suspension(cycle(4)), octahedron()).isomorphic);
}

TEST_CASE("sphere closure under join") {
    CHECK(is_sphere(join(points(2), cycle(4))).dim == 2);
    CHECK(is_sphere(join(cycle(5), cycle(5))).dim == 3);
    CHECK(is_sphere(join(points(2), join(cycle(5), cycle(4)))).dim == 4);
}

TEST_CASE("barycentric refinement") {
    CHECK(are_isomorphic(barycentric(cycle(4)).graph, cycle(8)).isomorphic);
    CHECK(are_isomorphic(barycentric(complete(3)).graph, join(cycle(6), points(1))).isomorphic);
    CHECK(barycentric(icosahedron()).graph.n() == 62); // 12 + 30 + 20

    // dimension labels are a proper (d+1)-coloring on manifold input
    for (const Graph& g : {icosahedron(), octahedron()}) {
        Refinement r = barycentric(g);
        Coloring c = make_coloring(r.dim_label);
        CHECK(c.k == 3);
        CHECK(proper(r.graph, c));
    }
    Refinement r3 = barycentric(join(cycle(5), cycle(5)));
    Coloring c3 = make_coloring(r3.dim_label);
    CHECK(c3.k == 4);
    CHECK(proper(r3.graph, c3));
}

TEST_CASE("cartesian product") {
    // A x 1 is the Barycentric refinement, label-for-label
    for (const Graph& g : {cycle(4), octahedron(), complete(3)}) {
        CHECK(cartesian(g, points(1)).graph == barycentric(g).graph);
        CHECK(cartesian(points(1), g).graph.n() == barycentric(g).graph.n());
    }

    CartesianProduct t = cartesian(cycle(4), cycle(4));
    TriState mf = is_manifold(t.graph);
    CHECK(mf.yes());
    CHECK(mf.dim == 2);
    CHECK(euler_characteristic(t.graph) == 0);
    CHECK(betti(t.graph).b == std::vector<long long>{1, 2, 1}); // torus

    // product lemma: p-manifold x q-manifold is a (p+q)-manifold of
    // minimal chromatic number, the dimension labels as witness
    Coloring labels = make_coloring(t.dim_label);
    CHECK(labels.k == 3);
    CHECK(proper(t.graph, labels));
    ChromaticResult x = chromatic_number(t.graph);
    CHECK(x.optimal);
    CHECK(x.upper == 3);
}

TEST_CASE("sabidussi product") {
    Graph c5 = cycle(5);
    CHECK(sabidussi(c5, points(1)) == c5); // K1 is the identity
    CHECK(are_isomorphic(sabidussi(complete(2), complete(3)), complete(6)).isomorphic);

    // equal-coordinate slices follow the factor adjacency
    Graph s = sabidussi(c5, c5);
    CHECK(s.adjacent(0 * 5 + 1, 0 * 5 + 2));  // (0,1)-(0,2): 1 ~ 2 in C5
    CHECK(!s.adjacent(0 * 5 + 1, 0 * 5 + 3)); // (0,1)-(0,3): 1 !~ 3
}

TEST_CASE("shannon product") {
    CHECK(are_isomorphic(shannon(complete(2), complete(2)), complete(4)).isomorphic);
    CHECK(f_vector(shannon(cycle(5), cycle(5))).counts ==
          std::vector<long long>{25, 100, 100, 25});

    // strong product is an edge-subgraph of the large product
    std::mt19937 rng(9);
    for (int rep = 0; rep < 6; ++rep) {
        Graph a = oracle::random_graph(rng, 4, 0.5);
        Graph b = oracle::random_graph(rng, 5, 0.5);
        Graph sh = shannon(a, b);
        Graph sa = sabidussi(a, b);
        REQUIRE(sh.n() == sa.n());
        for (auto [u, v] : sh.edge_list()) CHECK(sa.adjacent(u, v));
    }
}

TEST_CASE("disjoint union and complement duality") {
    Graph u = disjoint_union(cycle(5), cycle(5));
    CHECK(u.n() == 10);
    CHECK(u.m() == 10);

    std::mt19937 rng(13);
    for (int rep = 0; rep < 8; ++rep) {
        Graph a = oracle::random_graph(rng, 5, 0.5);
        Graph b = oracle::random_graph(rng, 4, 0.5);
        CHECK(complement(disjoint_union(a, b)) == join(complement(a), complement(b)));
        // chromatic number of a union is the max of the parts
        CHECK(chromatic_number(disjoint_union(a, b)).upper ==
              std::max(chromatic_number(a).upper, chromatic_number(b).upper));
    }
}

TEST_CASE("edge refinement") {
    CHECK(are_isomorphic(edge_refine(cycle(4), 0, 1), cycle(5)).isomorphic);
    CHECK_THROWS_AS(edge_refine(cycle(5), 0, 2), DomainError);

    Graph r = edge_refine(icosahedron(), 0, 1);
    CHECK(r.n() == 13);
    TriState mf = is_manifold(r);
    CHECK(mf.yes());
    CHECK(mf.dim == 2);

    // refinement preserves manifoldness and dimension on every edge
    Graph oct = octahedron();
    for (auto [a, b] : oct.edge_list()) {
        TriState m = is_manifold(edge_refine(oct, a, b));
        CHECK(m.yes());
        CHECK(m.dim == 2);
    }
    Graph s3 = join(cycle(5), cycle(5));
    for (auto [a, b] : s3.edge_list()) {
        TriState m = is_manifold(edge_refine(s3, a, b));
        CHECK(m.yes());
        CHECK(m.dim == 3);
    }
}
