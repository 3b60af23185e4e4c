#pragma once

#include <optional>
#include <string>
#include <utility>

#include "dichroma/digraph.hpp"

namespace dichroma {

enum class ProductKind { cartesian, direct, strong, lexicographic };

const char* to_string(ProductKind kind);
std::optional<ProductKind> parse_product_kind(const std::string& name);

/// Row-major encoding of V(G) x V(H) into 0..nG*nH-1.
struct ProductIndex {
    int n_left = 0;
    int n_right = 0;

    int encode(int u, int x) const { return u * n_right + x; }
    std::pair<int, int> decode(int w) const { return {w / n_right, w % n_right}; }
};

struct ProductResult {
    Digraph graph;
    ProductIndex index;
};

inline constexpr int kDefaultProductVertexBudget = 100'000;

/// Arc table, with (u,x)(v,y) an arc of the product iff
///   cartesian:     u=v and xy in E(H), or uv in E(G) and x=y
///   direct:        uv in E(G) and xy in E(H)
///   strong:        the union of the cartesian and direct conditions
///   lexicographic: u=v and xy in E(H), or uv in E(G)
/// Throws std::length_error when the product exceeds `vertex_budget`.
ProductResult product(ProductKind kind, const Digraph& g, const Digraph& h,
                      int vertex_budget = kDefaultProductVertexBudget);

/// Same table over edges; coincides with underlying(product(kind, D(G), D(H))).
UndirectedGraph undirected_product(ProductKind kind, const UndirectedGraph& g,
                                   const UndirectedGraph& h,
                                   int vertex_budget = kDefaultProductVertexBudget);

}  // namespace dichroma
