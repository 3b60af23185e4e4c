#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dichroma/budget.hpp"
#include "dichroma/digraph.hpp"
#include "dichroma/exact.hpp"
#include "dichroma/treewidth.hpp"

namespace dichroma {

/// Digraph over the positions of a (sorted) bag; rows[i] bit j set means arc
/// bag[i] -> bag[j]. Stored representations are acyclic, transitive, and
/// contain the minimal representation of their paired coloring: arc (u,v)
/// present iff a monochromatic u->v dipath exists in the processed subgraph.
struct Representation {
    std::vector<int> bag;             // ascending vertex ids
    std::vector<std::uint32_t> rows;  // rows.size() == bag.size()
};

inline constexpr int kMaxBagSize = 31;

/// Reachability over distinct positions (loops are never materialized); the
/// diagonal is used internally by rep_is_acyclic.
std::vector<std::uint32_t> closure_rows(std::vector<std::uint32_t> rows);
bool rows_acyclic(const std::vector<std::uint32_t>& rows);
bool rows_transitive(const std::vector<std::uint32_t>& rows);
bool rows_contain(const std::vector<std::uint32_t>& big, const std::vector<std::uint32_t>& small);

/// Minimal transitive supergraph (idempotent). Cyclic inputs keep their
/// cycles; acyclicity is checked separately.
Representation transitive_closure(Representation h);

/// H_f: transitive closure of the monochromatic arcs of G inside the bag.
/// `colors[i]` is the color of bag[i].
Representation minimal_representation(const Digraph& g, const std::vector<int>& bag,
                                      const std::vector<std::uint8_t>& colors);

/// (bag coloring, representation) pair with a provenance link to the child
/// state(s) it was first produced from, for certificate reconstruction.
struct DPState {
    std::vector<std::uint8_t> colors;  // colors[i] in 1..k colors bag[i]
    std::vector<std::uint32_t> rows;
    int pred = -1;       // index into the (left) child table; leaf: -1
    int pred_right = -1; // join only
};

struct DPTable {
    int node = -1;
    std::vector<int> bag;
    std::vector<DPState> states;  // sorted by (colors, rows), no duplicates
};

struct FptOptions {
    bool break_color_symmetry = true;  // pin the first processed leaf to color 1
    bool validate_states = true;       // run validate_table after every dp step
    std::int64_t max_states_per_node = 2'000'000;
};

/// Asserts that every stored state is acyclic, transitive and contains the
/// minimal representation of its coloring, and that introduce-node states are
/// feasible. Throws std::logic_error on the first violation.
void validate_table(const Digraph& g, const NiceTreeDecomposition& nd, const DPTable& table);

DPTable dp_leaf(const NiceTreeDecomposition& nd, int node, int k, const FptOptions& opts,
                bool pin_first_color = false);
DPTable dp_introduce(const NiceTreeDecomposition& nd, int node, const DPTable& child,
                     const Digraph& g, int k, const FptOptions& opts);
DPTable dp_forget(const NiceTreeDecomposition& nd, int node, const DPTable& child,
                  const FptOptions& opts);
DPTable dp_join(const NiceTreeDecomposition& nd, int node, const DPTable& left,
                const DPTable& right, const FptOptions& opts);

struct NodeStats {
    int node = -1;
    NodeKind kind = NodeKind::leaf;
    int bag_size = 0;
    std::int64_t states = 0;
};

struct FptRun {
    bool decided = false;
    std::optional<ColoringCertificate> certificate;
    std::vector<DPTable> tables;      // indexed by node id
    std::vector<int> chosen_state;    // reconstruction choice per node, -1 if none
    std::vector<NodeStats> node_stats;
};

/// Decides chi_a(G) <= k over a nice tree decomposition of underlying(G)
/// whose root bag is empty; reconstructs a verified certificate on success.
FptRun fpt_decide(const Digraph& g, const NiceTreeDecomposition& nd, int k,
                  const FptOptions& opts = {});

struct FptResult {
    int k = 0;
    ColoringCertificate certificate;
    std::vector<NodeStats> node_stats;  // stats of the successful k
};

/// Smallest k with fpt_decide true, searched ascending from 1 up to
/// min(width+1, 1 + min(max outdegree, max indegree)).
FptResult fpt_dichromatic(const Digraph& g, const NiceTreeDecomposition& nd,
                          const FptOptions& opts = {});

/// Feasibility of an introduce-node state (v at bag position p): every
/// non-arc in/out neighbour of v in the representation must route through a
/// real graph neighbour of v.
bool representation_feasible(const Digraph& g, const std::vector<int>& bag,
                             const std::vector<std::uint32_t>& rows, int p);

}  // namespace dichroma
