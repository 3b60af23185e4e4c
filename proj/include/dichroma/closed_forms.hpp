#pragma once

#include <optional>
#include <vector>

#include "dichroma/budget.hpp"
#include "dichroma/digraph.hpp"
#include "dichroma/products.hpp"
#include "dichroma/treewidth.hpp"

namespace dichroma {

/// Coloring of G box H with max(k1,k2) colors: f(u,x) = (f1(u)+f2(x)) mod k,
/// shifted to 1..k. Inputs must be acyclic colorings of their factors.
VertexColoring cartesian_max_coloring(const Digraph& g, const Digraph& h,
                                      const VertexColoring& f1, const VertexColoring& f2);

/// Coloring of G x H by projection onto the first factor: g(u,x) = f(u).
VertexColoring direct_projection_coloring(const Digraph& g, const Digraph& h,
                                          const VertexColoring& f);

/// Coloring of G[H] by flattened color pairs; uses <= kG*kH colors.
VertexColoring lex_pair_coloring(const Digraph& g, const Digraph& h, const VertexColoring& fg,
                                 const VertexColoring& fh);

/// chi_a(C_n[H]) = k + ceil(k/(n-1)) where k = chi_a(H). Requires n >= 2.
int lex_dicycle_value(int n, int k);

/// The color-exclusion machinery behind lex_dicycle_coloring: k' = k + s
/// total colors and per-copy exclusion sets M_1..M_n covering [k'], chosen as
/// canonical consecutive blocks of size s modulo k'.
struct LexDicycleParams {
    int n = 0;
    int k = 0;
    int k_prime = 0;
    int s = 0;
    std::vector<std::vector<int>> exclusion_sets;  // exclusion_sets[i-1] = M_i, sorted
};

LexDicycleParams make_lex_dicycle_params(int n, int k);

/// Optimal coloring of C_n[H]: copy H_i is colored by renaming fh's colors
/// into [k'] minus M_i (ascending), so every color is missing from at least
/// one copy. fh must be acyclic and use all of its k colors.
VertexColoring lex_dicycle_coloring(int n, const Digraph& h, const VertexColoring& fh);

struct StrongDicycleValue {
    int value = 0;
    bool closed_form = true;  // false for (m >= 4, n = 2): solved numerically
};

/// chi_a of the strong product of two dicycles (commutative; m, n >= 2).
StrongDicycleValue strong_dicycle_value(int m, int n, const SolveBudget& budget = default_budget());

/// The explicit 2-coloring for m >= 4, n >= 3: color 1 on row 1 from column 3
/// on, column 1 from row 3 on, and cells (2,3),(3,2),(3,3); color 2 elsewhere
/// (1-based grid cells, vertex (i,j) encoded as (i-1)*n + (j-1)).
VertexColoring strong_dicycle_coloring(int m, int n);

/// Proper 5-coloring of H boxtimes C_{2n+1} for bipartite H (>= 1 edge, n >= 2):
/// side A colors the first three cycle vertices 1,2,3 then alternates 4,5;
/// side B colors them 3,4,5 then alternates 1,2.
VertexColoring bipartite_odd_strong_coloring(const UndirectedGraph& h, int n);

/// Collapse for a DAG second factor: chi_g for cartesian/strong/lexicographic,
/// 1 for direct; nullopt when H has a dicycle.
std::optional<int> dag_product_value(ProductKind kind, const Digraph& g, const Digraph& h,
                                     int chi_g);

/// Acyclic coloring of an oriented digraph with <= ceil((w+1)/2) colors, w the
/// width of the supplied decomposition: vertices are colored in reverse forget
/// order, each getting the smallest color used by at most one colored
/// neighbour, opening a new color only when forced.
VertexColoring orientation_tw_coloring(const Digraph& d, const NiceTreeDecomposition& nd);

}  // namespace dichroma
