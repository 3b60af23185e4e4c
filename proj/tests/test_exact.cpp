#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <vector>

#include "dichroma/exact.hpp"
#include "dichroma/harness.hpp"
#include "dichroma/products.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace dichroma;

TEST_CASE("monochromatic cycle detection on dicycles") {
    auto c3 = make_family(Family::dicycle, 3);
    auto cycle = find_monochromatic_cycle(c3, {1, {1, 1, 1}});
    REQUIRE(cycle);
    CHECK(std::set<int>(cycle->begin(), cycle->end()) == std::set<int>{0, 1, 2});

    CHECK_FALSE(find_monochromatic_cycle(c3, {2, {1, 1, 2}}));
    CHECK_THROWS_AS(find_monochromatic_cycle(c3, {1, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(find_monochromatic_cycle(c3, {1, {1, 1, 2}}), std::invalid_argument);
}

TEST_CASE("the forced 2-coloring of the 3x2 strong dicycle product has a witness") {
    // pinning (u1,x1),(u2,x1) to color 1 forces the column partner colors and
    // leaves the diagonal triangle (u1,x1),(u2,x1),(u3,x2) monochromatic
    auto prod = product(ProductKind::strong, make_family(Family::dicycle, 3),
                        make_family(Family::dicycle, 2));
    const auto& ix = prod.index;
    VertexColoring f{2, std::vector<int>(6)};
    f.colors[ix.encode(0, 0)] = 1;
    f.colors[ix.encode(1, 0)] = 1;
    f.colors[ix.encode(2, 0)] = 2;
    f.colors[ix.encode(0, 1)] = 2;
    f.colors[ix.encode(1, 1)] = 2;
    f.colors[ix.encode(2, 1)] = 1;
    auto cycle = find_monochromatic_cycle(prod.graph, f);
    REQUIRE(cycle);
    std::set<int> expected{ix.encode(0, 0), ix.encode(1, 0), ix.encode(2, 1)};
    CHECK(std::set<int>(cycle->begin(), cycle->end()) == expected);
}

TEST_CASE("exact dichromatic numbers of the standard families") {
    for (int n = 1; n <= 5; ++n)
        CHECK(dichromatic_exact(make_family(Family::complete_symmetric, n)).k == n);
    CHECK(dichromatic_exact(make_family(Family::dipath, 6)).k == 1);
    CHECK(dichromatic_exact(make_family(Family::transitive_tournament, 6)).k == 1);
    CHECK(dichromatic_exact(make_family(Family::dicycle, 4)).k == 2);

    auto strong33 = product(ProductKind::strong, make_family(Family::dicycle, 3),
                            make_family(Family::dicycle, 3));
    CHECK(dichromatic_exact(strong33.graph).k == 3);

    auto direct46 = product(ProductKind::direct, make_family(Family::dicycle, 4),
                            make_family(Family::dicycle, 6));
    CHECK(dichromatic_exact(direct46.graph).k == 2);
}

TEST_CASE("certificates verify and tampering is caught with a witness") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto d = make_family(Family::erdos_renyi_digraph, 8, 0.35, seed);
        auto result = dichromatic_exact(d);
        auto report = verify_certificate(d, result.certificate);
        CHECK(report.ok);

        if (result.k >= 2 && d.vertex_count() > 0) {
            auto tampered = result.certificate;
            // collapse every vertex into color 1 but keep the old orders
            auto cycle_exists = !acyclic_check(d).has_value();
            for (auto& c : tampered.coloring.colors) c = 1;
            auto bad = verify_certificate(d, tampered);
            CHECK_FALSE(bad.ok);
            if (cycle_exists) CHECK(bad.cycle.has_value());
        }
    }
}

TEST_CASE("minimality against the plain enumeration oracle") {
    std::vector<Digraph> corpus;
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        corpus.push_back(make_family(Family::erdos_renyi_digraph, 6 + seed % 4, 0.3, seed));
    corpus.push_back(make_family(Family::dicycle, 7));
    corpus.push_back(make_family(Family::complete_symmetric, 4));
    for (const auto& d : corpus) {
        const int k = dichromatic_exact(d).k;
        CHECK(testutil::enumeration_has_acyclic_coloring(d, k));
        if (k > 1) CHECK_FALSE(testutil::enumeration_has_acyclic_coloring(d, k - 1));
    }
}

TEST_CASE("dichromatic number is monotone under arc deletion") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto g = make_family(Family::erdos_renyi_digraph, 7, 0.5, seed);
        auto arcs = g.arcs();
        std::vector<std::pair<int, int>> kept;
        for (std::size_t i = 0; i < arcs.size(); ++i)
            if (i % 3 != 0) kept.push_back(arcs[i]);
        Digraph h(g.vertex_count(), kept);
        CHECK(dichromatic_exact(h).k <= dichromatic_exact(g).k);
    }
}

TEST_CASE("budget exhaustion is an error, not an answer") {
    auto hard = make_family(Family::complete_symmetric, 9);
    SolveBudget tiny;
    tiny.max_nodes_expanded = 5;
    CHECK_THROWS_AS(dichromatic_exact(hard, tiny), budget_exceeded);
    SolveBudget no_room;
    no_room.max_vertices = 4;
    CHECK_THROWS_AS(dichromatic_exact(hard, no_room), budget_exceeded);
}

TEST_CASE("chromatic numbers through the symmetric digraph") {
    UndirectedGraph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK(chromatic_exact(c5).k == 3);
}

TEST_CASE("chromatic numbers of strong products of cycles") {
    auto cycle = [](int len) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < len; ++i) edges.emplace_back(i, (i + 1) % len);
        return UndirectedGraph(len, edges);
    };
    // two odd cycles of length >= 5 need five colors, two even cycles four
    CHECK(chromatic_exact(undirected_product(ProductKind::strong, cycle(5), cycle(5))).k == 5);
    CHECK(chromatic_exact(undirected_product(ProductKind::strong, cycle(4), cycle(4))).k == 4);
    CHECK(chromatic_exact(undirected_product(ProductKind::strong, cycle(4), cycle(6))).k == 4);
}

TEST_CASE("acyclic homomorphism verification") {
    auto dag = make_family(Family::transitive_tournament, 4);
    std::vector<int> identity{0, 1, 2, 3};
    CHECK(verify_acyclic_homomorphism(dag, dag, identity));

    auto c3 = make_family(Family::dicycle, 3);
    auto k1 = make_family(Family::complete_symmetric, 1);
    CHECK_FALSE(verify_acyclic_homomorphism(c3, k1, {0, 0, 0}));

    auto c4 = make_family(Family::dicycle, 4);
    auto k2 = make_family(Family::complete_symmetric, 2);
    CHECK(verify_acyclic_homomorphism(c4, k2, {0, 1, 0, 1}));

    CHECK_THROWS_AS(verify_acyclic_homomorphism(c4, k2, {0, 1, 0, 7}), std::invalid_argument);
    CHECK_THROWS_AS(verify_acyclic_homomorphism(c4, k2, {0, 1}), std::invalid_argument);
}

TEST_CASE("homomorphism composition spot checks") {
    HarnessConfig cfg;
    auto result = check_acyclic_hom_composition(cfg);
    CHECK(result.instances >= 30);
    CHECK(result.failures == 0);
}

TEST_CASE("incremental accept test agrees with a full recheck") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        auto d = make_family(Family::erdos_renyi_digraph, 8, 0.4, seed);
        std::vector<int> scc_id(d.vertex_count(), -1);
        int id = 0;
        for (const auto& comp : strong_components(d)) {
            for (int v : comp) scc_id[v] = id;
            ++id;
        }
        std::vector<int> colors(d.vertex_count(), 0);
        std::uint64_t stream = seed * 7919 + 13;
        for (int v = 0; v < d.vertex_count(); ++v) {
            stream = stream * 6364136223846793005ull + 1442695040888963407ull;
            const int c = 1 + static_cast<int>((stream >> 33) % 3);
            colors[v] = c;
            const bool incremental = detail::closes_monochromatic_cycle(d, scc_id, colors, v);
            const bool full_ok = testutil::naive_coloring_acyclic(d, colors, 3);
            CHECK(incremental == !full_ok);
            if (incremental) colors[v] = 0;  // keep the partial coloring valid
        }
    }
}
