#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dichroma/budget.hpp"
#include "dichroma/digraph.hpp"

namespace dichroma {

/// Tree decomposition: a tree over bag nodes. Conditions: bags cover V, every
/// edge lands in some bag, and each vertex's occurrence set induces a subtree.
struct TreeDecomposition {
    std::vector<std::vector<int>> bags;          // sorted ascending per bag
    std::vector<std::pair<int, int>> tree_edges;

    int node_count() const { return static_cast<int>(bags.size()); }
    int width() const;
};

struct ValidationReport {
    bool ok = false;
    std::string message;  // first violated condition plus a witness
};

ValidationReport validate_decomposition(const UndirectedGraph& g, const TreeDecomposition& td);

enum class EliminationStrategy { min_degree, min_fill };

const char* to_string(EliminationStrategy s);

/// Decomposition from a greedy elimination order (bag of v = v plus its
/// not-yet-eliminated neighbours in the fill graph). Ties by vertex index.
TreeDecomposition heuristic_decomposition(const UndirectedGraph& g, EliminationStrategy strategy);

/// Decomposition for a caller-supplied elimination order (used by both the
/// heuristic and the exact search).
TreeDecomposition decomposition_from_elimination_order(const UndirectedGraph& g,
                                                       const std::vector<int>& order);

struct ExactTreewidthResult {
    int width = 0;
    TreeDecomposition decomposition;
};

/// Exact treewidth by dynamic programming over vertex subsets (the eliminated
/// set determines the fill graph). Exponential memory; intended for n <= 15.
ExactTreewidthResult exact_treewidth_small(const UndirectedGraph& g,
                                           const SolveBudget& budget = default_budget());

enum class NodeKind { leaf, introduce, forget, join };

const char* to_string(NodeKind kind);

/// Rooted tree of typed nodes. Leaf bags are singletons, introduce/forget
/// change one vertex, join duplicates a bag; make_nice roots the result at an
/// empty bag so a DP answer is read off one root entry.
struct NiceTreeDecomposition {
    struct Node {
        NodeKind kind = NodeKind::leaf;
        int vertex = -1;  // introduced/forgotten vertex, -1 otherwise
        std::vector<int> bag;
        std::vector<int> children;
    };

    std::vector<Node> nodes;
    int root = -1;

    int node_count() const { return static_cast<int>(nodes.size()); }
    int width() const;
    /// Nodes in bottom-up (children before parents) order, deterministic.
    std::vector<int> post_order() const;
};

/// Converts a valid decomposition to nice form. Width is preserved and the
/// root bag is emptied by a forget chain. Throws std::invalid_argument on an
/// invalid decomposition or an empty graph.
NiceTreeDecomposition make_nice(const TreeDecomposition& td, const UndirectedGraph& g);

ValidationReport validate_nice(const UndirectedGraph& g, const NiceTreeDecomposition& nd);

/// vertices of G_t (union of bags in the subtree of each node), sorted.
std::vector<std::vector<int>> subtree_vertex_sets(const NiceTreeDecomposition& nd);

}  // namespace dichroma
