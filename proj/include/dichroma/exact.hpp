#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dichroma/budget.hpp"
#include "dichroma/digraph.hpp"

namespace dichroma {

/// A coloring plus, per color class, a topological order of that class in the
/// induced subdigraph. The orders are the acyclicity witness: a certificate
/// verifies iff every induced arc goes forward in its class order.
struct ColoringCertificate {
    VertexColoring coloring;
    std::vector<std::vector<int>> class_orders;
};

struct VerifyReport {
    bool ok = false;
    std::string reason;
    std::optional<std::vector<int>> cycle;  // monochromatic dicycle, when one exists
};

/// A monochromatic dicycle of d under f, or nullopt iff f is an acyclic
/// coloring. Throws std::invalid_argument on length/color-range mismatch.
std::optional<std::vector<int>> find_monochromatic_cycle(const Digraph& d,
                                                         const VertexColoring& f);

bool is_acyclic_coloring(const Digraph& d, const VertexColoring& f);

/// Certificate for an acyclic coloring (class orders via acyclic_check).
/// Throws std::invalid_argument if f is not acyclic on d.
ColoringCertificate make_certificate(const Digraph& d, const VertexColoring& f);

VerifyReport verify_certificate(const Digraph& d, const ColoringCertificate& cert);

struct ExactResult {
    int k = 0;
    ColoringCertificate certificate;
};

/// Exact dichromatic number by pruned backtracking: ascending k, vertices in
/// descending underlying-degree order, vertex at position i restricted to
/// colors 1..min(i+1,k), and SCC-restricted incremental cycle pruning.
ExactResult dichromatic_exact(const Digraph& d, const SolveBudget& budget = default_budget());

/// chi(g) via the symmetric digraph (2-cycles make acyclic = proper).
ExactResult chromatic_exact(const UndirectedGraph& g, const SolveBudget& budget = default_budget());

/// True iff f maps arcs of G to arcs of H (unless collapsed) and every fiber
/// f^-1(x) induces an acyclic subdigraph of G. Throws on out-of-range images.
bool verify_acyclic_homomorphism(const Digraph& g, const Digraph& h, const std::vector<int>& f);

namespace detail {

/// Solver accept test, exposed for the full-recheck equivalence tests: does
/// vertex v (already entered in partial_colors, 0 = uncolored) close a
/// monochromatic dicycle among colored vertices of its strong component?
bool closes_monochromatic_cycle(const Digraph& d, const std::vector<int>& scc_id,
                                const std::vector<int>& partial_colors, int v);

}  // namespace detail

}  // namespace dichroma
