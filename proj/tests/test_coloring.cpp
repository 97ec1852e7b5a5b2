#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chroma/builders.hpp"
#include "chroma/coloring.hpp"

#include "oracles.hpp"

using namespace chroma;

TEST_CASE("properness verifier") {
    Graph c4 = cycle(4);
    CHECK(proper(c4, Coloring{2, {0, 1, 0, 1}}));
    CHECK(!proper(c4, Coloring{2, {0, 1, 1, 0}}));
    CHECK(!proper(c4, Coloring{2, {0, 1, 0}}));    // not total
    CHECK(!proper(c4, Coloring{2, {0, 1, 0, 2}})); // color out of range
}

TEST_CASE("exact chromatic numbers of named graphs") {
    ChromaticResult r = chromatic_number(join(cycle(5), cycle(5)));
    CHECK(r.optimal);
    CHECK(r.upper == 6);
    CHECK(proper(join(cycle(5), cycle(5)), r.coloring));

    ChromaticResult ico = chromatic_number(icosahedron());
    CHECK(ico.optimal);
    CHECK(ico.upper == 4);

    ChromaticResult j = chromatic_number(join(cycle(5), icosahedron()));
    CHECK(j.optimal);
    CHECK(j.upper == 7);

    CHECK(chromatic_number(points(7)).upper == 1);
    CHECK(chromatic_number(Graph(0, {})).upper == 0);
    CHECK(chromatic_number(complete(9)).upper == 9);
}

TEST_CASE("exact solver agrees with brute force on random graphs") {
    std::mt19937 rng(77);
    for (int rep = 0; rep < 20; ++rep) {
        Graph g = oracle::random_graph(rng, 5 + rep % 5, 0.45);
        ChromaticResult r = chromatic_number(g);
        REQUIRE(r.optimal);
        CHECK(r.upper == oracle::brute_chromatic(g));
        CHECK(proper(g, r.coloring));
    }
}

TEST_CASE("k-colorability decisions") {
    CHECK(k_colorable(points(5), 1).status == KStatus::Colored);
    CHECK(k_colorable(icosahedron(), 3).status == KStatus::Refuted);
    CHECK(k_colorable(icosahedron(), 4).status == KStatus::Colored);

    Refinement bico = barycentric(icosahedron());
    KColorResult kr = k_colorable(bico.graph, 3);
    REQUIRE(kr.status == KStatus::Colored);
    CHECK(proper(bico.graph, kr.coloring));
    CHECK(kr.coloring.k <= 3);

    // budget exhaustion is reported as unknown
    CHECK(k_colorable(join(cycle(5), cycle(5)), 5, 3).status == KStatus::Unknown);
}

TEST_CASE("clique, independence and clique-cover numbers") {
    IntBound w = clique_number(join(cycle(5), cycle(5)));
    CHECK(w.exact);
    CHECK(w.lower == 4);

    IntBound a = independence_number(shannon(cycle(5), cycle(5)));
    CHECK(a.exact);
    CHECK(a.lower == 5);

    IntBound cc = clique_cover_number(cycle(5));
    CHECK(cc.exact);
    CHECK(cc.lower == 3);
    CHECK(cc.lower == chromatic_number(complement(cycle(5))).upper);

    std::mt19937 rng(19);
    for (int rep = 0; rep < 10; ++rep) {
        Graph g = oracle::random_graph(rng, 9, 0.5);
        IntBound got = clique_number(g);
        REQUIRE(got.exact);
        int best = 0;
        for (int k = 1; k <= 9; ++k)
            if (!oracle::naive_cliques(g, k).empty()) best = k;
        CHECK(got.lower == best);
    }
}

TEST_CASE("dual graphs of manifolds") {
    DualGraph oct = dual_graph(octahedron());
    CHECK(!oct.manifold_warning);
    CHECK(oct.graph.n() == 8);
    CHECK(oct.d == 2);
    CHECK(oct.triangle_free);
    CHECK(oct.regular);
    CHECK(oct.regularity == 3);
    CHECK(k_colorable(oct.graph, 2).status == KStatus::Colored); // bipartite cube
    CHECK(betti(oct.graph).b == std::vector<long long>{1, 12 - 8 + 1});

    DualGraph ico = dual_graph(icosahedron());
    CHECK(ico.graph.n() == 20);
    CHECK(ico.regularity == 3);
    CHECK(ico.triangle_free);
    CHECK(betti(ico.graph).b == std::vector<long long>{1, 30 - 20 + 1});

    DualGraph s3 = dual_graph(join(cycle(5), cycle(5)));
    CHECK(s3.graph.n() == 25); // 5 x 5 edge pairs
    CHECK(s3.regularity == 4);
    CHECK(s3.triangle_free);
    CHECK(s3.cycle_rank == std::vector<long long>{50 - 25 + 1});

    DualGraph warn = dual_graph(complete(4));
    CHECK(warn.manifold_warning);
}

TEST_CASE("two-forest partition") {
    DualGraph oct = dual_graph(octahedron());
    ForestPartitionReport rep = two_forest_partition(oct);
    CHECK(rep.success);
    CHECK(rep.a_forest);
    CHECK(rep.b_forest);
    CHECK(!rep.cut_edges.empty()); // the cube has cycle rank 5

    DualGraph ico = dual_graph(icosahedron());
    ForestPartitionReport rep2 = two_forest_partition(ico);
    CHECK(rep2.success); // dodecahedral graph admits a two-forest split

    DualGraph s3 = dual_graph(join(cycle(5), cycle(5)));
    ForestPartitionReport rep3 = two_forest_partition(s3);
    // outcome recorded either way; on success both classes must verify
    if (rep3.success) {
        CHECK(rep3.a_forest);
        CHECK(rep3.b_forest);
    }
    CHECK(!rep3.method.empty());
}

TEST_CASE("two-forest partition reports honest failure when none exists") {
    // K7 cannot split into two induced forests (each class of size >= 3
    // inside a complete graph contains a triangle, and 7 = 3 + 4)
    DualGraph fake;
    fake.graph = complete(7);
    ForestPartitionReport rep = two_forest_partition(fake);
    CHECK(!rep.success);
    CHECK(rep.method.find("no partition exists") != std::string::npos);
}

TEST_CASE("theorem-1 pipeline stays within 2d+2 and verifies") {
    for (const Graph& g : {icosahedron(), octahedron(), join(cycle(5), cycle(5))}) {
        Theorem1Result r = theorem1_color(g);
        REQUIRE(r.ok);
        CHECK(proper(g, r.coloring));
        CHECK(r.coloring.k <= 2 * r.d + 2);
        CHECK(!r.stage.empty());
    }
    CHECK_THROWS_AS(theorem1_color(complete(4)), DomainError);
}

TEST_CASE("bounds report") {
    BoundsReport b = bounds_report(join(cycle(5), cycle(5)));
    CHECK(b.d == 3);
    CHECK(b.lower == 4);
    CHECK(b.upper == 8);
    CHECK(b.conjecture == 6);
    REQUIRE(b.exact.has_value());
    CHECK(*b.exact == 6);

    BoundsReport i = bounds_report(icosahedron());
    CHECK(i.d == 2);
    CHECK(i.lower == 3);
    CHECK(i.upper == 6);
    CHECK(i.conjecture == 5);
    CHECK(*i.exact == 4);

    BoundsReport o = bounds_report(octahedron());
    CHECK(*o.exact == 3);
}

TEST_CASE("join additivity and the minimally chromatic monoid") {
    std::vector<Graph> grid = {complete(2), complete(3), cycle(4), cycle(5), points(2)};
    std::vector<int> x;
    for (const Graph& g : grid) x.push_back(chromatic_number(g).upper);
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = 0; j < grid.size(); ++j) {
            ChromaticResult r = chromatic_number(join(grid[i], grid[j]));
            REQUIRE(r.optimal);
            CHECK(r.upper == x[i] + x[j]);
        }

    // minimally chromatic closure: X = dim + 1 is preserved by join
    std::vector<Graph> minimal = {complete(2), cycle(4), points(2), octahedron()};
    for (const Graph& a : minimal)
        for (const Graph& b : minimal) {
            Graph j = join(a, b);
            CHECK(chromatic_number(j).upper == clique_top_size(j));
        }
}

TEST_CASE("suspension shifts chromatic and clique numbers by one") {
    for (const Graph& g : {complete(2), complete(3), cycle(4), cycle(5), points(2)}) {
        CHECK(chromatic_number(suspension(g)).upper == chromatic_number(g).upper + 1);
        CHECK(clique_top_size(suspension(g)) == clique_top_size(g) + 1);
    }
}

TEST_CASE("every recognized d-manifold lands in [d+1, 2d+2]") {
    std::vector<Graph> corpus = {octahedron(), icosahedron(), join(cycle(5), cycle(5)),
                                 join(cycle(5), cycle(4)), suspension(icosahedron()),
                                 cycle(6)};
    for (const Graph& g : corpus) {
        TriState mf = is_manifold(g);
        REQUIRE(mf.yes());
        ChromaticResult x = chromatic_number(g);
        REQUIRE(x.optimal);
        CHECK(x.upper >= mf.dim + 1);
        CHECK(x.upper <= 2 * mf.dim + 2);
    }
}

TEST_CASE("sphere corollaries: joins of C5 and one suspension") {
    CHECK(chromatic_number(cycle(5)).upper == 3);
    CHECK(chromatic_number(join(cycle(5), cycle(5))).upper == 6);
    CHECK(chromatic_number(join(points(2), join(cycle(5), cycle(5)))).upper == 7);
}

TEST_CASE("shannon product chromatic bounds") {
    std::vector<Graph> grid = {complete(2), complete(3), cycle(4), cycle(5)};
    for (const Graph& a : grid)
        for (const Graph& b : grid) {
            int xa = chromatic_number(a).upper;
            int xb = chromatic_number(b).upper;
            int xs = chromatic_number(shannon(a, b)).upper;
            CHECK(xs >= std::max(xa, xb));
            CHECK(xs <= xa * xb);
        }
}

TEST_CASE("sabidussi products: multiplicative cells and the C5*C5 exception") {
    // multiplicativity holds whenever one factor is complete, and for C4
    auto X = [](const Graph& g) { return chromatic_number(g).upper; };
    std::vector<Graph> grid = {complete(2), complete(3), cycle(4), cycle(5)};
    for (const Graph& a : {complete(2), complete(3)})
        for (const Graph& b : grid) CHECK(X(sabidussi(a, b)) == X(a) * X(b));
    CHECK(X(sabidussi(cycle(4), cycle(4))) == 4);
    CHECK(X(sabidussi(cycle(4), cycle(5))) == 6);

    // The multiplicative identity fails at C5*C5: an explicit proper
    // 8-coloring exists (verified here) while 3*3 = 9. Exhaustive search
    // refutes 7. Pinned against regressions; see the acceptance suite.
    ChromaticResult r = chromatic_number(sabidussi(cycle(5), cycle(5)));
    REQUIRE(r.optimal);
    CHECK(proper(sabidussi(cycle(5), cycle(5)), r.coloring));
    CHECK(r.upper == 8);
}
