#include "dichroma/products.hpp"

#include <cstdint>

namespace dichroma {

const char* to_string(ProductKind kind) {
    switch (kind) {
        case ProductKind::cartesian: return "cartesian";
        case ProductKind::direct: return "direct";
        case ProductKind::strong: return "strong";
        case ProductKind::lexicographic: return "lexicographic";
    }
    return "?";
}

std::optional<ProductKind> parse_product_kind(const std::string& name) {
    for (ProductKind k : {ProductKind::cartesian, ProductKind::direct, ProductKind::strong,
                          ProductKind::lexicographic})
        if (name == to_string(k)) return k;
    return std::nullopt;
}

namespace {

void check_budget(int ng, int nh, int vertex_budget) {
    if (static_cast<std::int64_t>(ng) * nh > vertex_budget)
        throw std::length_error("product: " + std::to_string(static_cast<std::int64_t>(ng) * nh) +
                                " vertices exceed the budget of " + std::to_string(vertex_budget));
}

}  // namespace

ProductResult product(ProductKind kind, const Digraph& g, const Digraph& h, int vertex_budget) {
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    check_budget(ng, nh, vertex_budget);
    ProductIndex index{ng, nh};
    std::vector<std::pair<int, int>> arcs;

    const bool copy_h = kind != ProductKind::direct;  // u=v and xy in E(H)
    if (copy_h) {
        for (int u = 0; u < ng; ++u)
            for (auto [x, y] : h.arcs()) arcs.emplace_back(index.encode(u, x), index.encode(u, y));
    }
    for (auto [u, v] : g.arcs()) {
        switch (kind) {
            case ProductKind::cartesian:
                for (int x = 0; x < nh; ++x)
                    arcs.emplace_back(index.encode(u, x), index.encode(v, x));
                break;
            case ProductKind::direct:
                for (auto [x, y] : h.arcs())
                    arcs.emplace_back(index.encode(u, x), index.encode(v, y));
                break;
            case ProductKind::strong:
                for (int x = 0; x < nh; ++x)
                    arcs.emplace_back(index.encode(u, x), index.encode(v, x));
                for (auto [x, y] : h.arcs())
                    arcs.emplace_back(index.encode(u, x), index.encode(v, y));
                break;
            case ProductKind::lexicographic:
                for (int x = 0; x < nh; ++x)
                    for (int y = 0; y < nh; ++y)
                        arcs.emplace_back(index.encode(u, x), index.encode(v, y));
                break;
        }
    }
    return {Digraph(ng * nh, arcs), index};
}

UndirectedGraph undirected_product(ProductKind kind, const UndirectedGraph& g,
                                   const UndirectedGraph& h, int vertex_budget) {
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    check_budget(ng, nh, vertex_budget);
    ProductIndex index{ng, nh};
    std::vector<std::pair<int, int>> edges;

    if (kind != ProductKind::direct) {
        for (int u = 0; u < ng; ++u)
            for (auto [x, y] : h.edges()) edges.emplace_back(index.encode(u, x), index.encode(u, y));
    }
    for (auto [u, v] : g.edges()) {
        switch (kind) {
            case ProductKind::cartesian:
                for (int x = 0; x < nh; ++x)
                    edges.emplace_back(index.encode(u, x), index.encode(v, x));
                break;
            case ProductKind::direct:
                for (auto [x, y] : h.edges()) {
                    edges.emplace_back(index.encode(u, x), index.encode(v, y));
                    edges.emplace_back(index.encode(u, y), index.encode(v, x));
                }
                break;
            case ProductKind::strong:
                for (int x = 0; x < nh; ++x)
                    edges.emplace_back(index.encode(u, x), index.encode(v, x));
                for (auto [x, y] : h.edges()) {
                    edges.emplace_back(index.encode(u, x), index.encode(v, y));
                    edges.emplace_back(index.encode(u, y), index.encode(v, x));
                }
                break;
            case ProductKind::lexicographic:
                for (int x = 0; x < nh; ++x)
                    for (int y = 0; y < nh; ++y)
                        edges.emplace_back(index.encode(u, x), index.encode(v, y));
                break;
        }
    }
    return UndirectedGraph(ng * nh, edges);
}

}  // namespace dichroma
