#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dichroma/exact.hpp"
#include "dichroma/io.hpp"
#include "dichroma/treewidth.hpp"
#include "doctest.h"

using namespace dichroma;

namespace {

std::string temp_path(const std::string& name) {
    return std::string("io_test_") + name;
}

}  // namespace

TEST_CASE("digraph text round trip") {
    auto d = make_family(Family::erdos_renyi_digraph, 9, 0.4, 3);
    std::stringstream buffer;
    write_digraph(buffer, d);
    CHECK(read_digraph(buffer) == d);
}

TEST_CASE("undirected text round trip") {
    auto g = underlying(make_family(Family::erdos_renyi_digraph, 9, 0.4, 5));
    std::stringstream buffer;
    write_undirected(buffer, g);
    CHECK(read_undirected(buffer) == g);
}

TEST_CASE("parse errors") {
    auto parse = [](const std::string& text) {
        std::stringstream in(text);
        return read_digraph(in);
    };
    CHECK_THROWS_AS(parse("2 1\n0 0\n"), parse_error);       // loop
    CHECK_THROWS_AS(parse("2 2\n0 1\n0 1\n"), parse_error);  // duplicate
    CHECK_THROWS_AS(parse("2 2\n0 1\n"), parse_error);       // truncated
    CHECK_THROWS_AS(parse("2 1\n0 5\n"), parse_error);       // out of range
    CHECK_THROWS_AS(parse("x\n"), parse_error);

    std::stringstream und("u 2 1\n0 1\n");
    CHECK_NOTHROW(read_undirected(und));
    std::stringstream missing("2 1\n0 1\n");
    CHECK_THROWS_AS(read_undirected(missing), parse_error);
}

TEST_CASE("file sniffing") {
    auto dg_path = temp_path("a.dg");
    auto ug_path = temp_path("a.ug");
    write_digraph_file(dg_path, make_family(Family::dicycle, 3));
    write_undirected_file(ug_path, underlying(make_family(Family::dicycle, 3)));
    CHECK_FALSE(file_is_undirected(dg_path));
    CHECK(file_is_undirected(ug_path));
    std::remove(dg_path.c_str());
    std::remove(ug_path.c_str());
}

TEST_CASE("decomposition round trip") {
    auto g = underlying(make_family(Family::erdos_renyi_digraph, 8, 0.35, 11));
    auto td = heuristic_decomposition(g, EliminationStrategy::min_fill);
    std::stringstream buffer;
    write_decomposition(buffer, td, g.vertex_count());
    auto back = read_decomposition(buffer);
    CHECK(back.bags == td.bags);
    CHECK(back.tree_edges.size() == td.tree_edges.size());
    CHECK(validate_decomposition(g, back).ok);
}

TEST_CASE("nice decomposition files round trip") {
    auto g = underlying(make_family(Family::erdos_renyi_digraph, 7, 0.4, 13));
    auto nd = make_nice(heuristic_decomposition(g, EliminationStrategy::min_fill), g);
    auto td_path = temp_path("nice.td");
    auto kinds_path = temp_path("nice.kinds.json");
    write_nice_files(td_path, kinds_path, nd, g.vertex_count());
    auto back = read_nice_files(td_path, kinds_path);
    CHECK(validate_nice(g, back).ok);
    CHECK(back.root == nd.root);
    REQUIRE(back.node_count() == nd.node_count());
    for (int t = 0; t < nd.node_count(); ++t) {
        CHECK(back.nodes[t].kind == nd.nodes[t].kind);
        CHECK(back.nodes[t].bag == nd.nodes[t].bag);
        CHECK(back.nodes[t].vertex == nd.nodes[t].vertex);
    }
    std::remove(td_path.c_str());
    std::remove(kinds_path.c_str());
}

TEST_CASE("certificate JSON round trip") {
    auto d = make_family(Family::dicycle, 5);
    auto cert = dichromatic_exact(d).certificate;
    auto text = certificate_to_json(cert);
    auto back = certificate_from_json(text);
    CHECK(back.coloring.k == cert.coloring.k);
    CHECK(back.coloring.colors == cert.coloring.colors);
    CHECK(back.class_orders == cert.class_orders);
    CHECK(verify_certificate(d, back).ok);

    CHECK_THROWS_AS(certificate_from_json("{"), parse_error);
    CHECK_THROWS_AS(certificate_from_json(R"({"k": 2})"), parse_error);
}

TEST_CASE("product index JSON round trip") {
    ProductIndex index{6, 9};
    auto back = product_index_from_json(product_index_to_json(index));
    CHECK(back.n_left == 6);
    CHECK(back.n_right == 9);
}
