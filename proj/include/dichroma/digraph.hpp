#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace dichroma {

/// Loopless simple digraph on vertices 0..n-1. Two-cycles {(u,v),(v,u)} are
/// allowed; duplicate arcs collapse (set semantics). Immutable after
/// construction, so values can be shared freely across threads.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n) : n_(n), out_(n), in_(n) {
        if (n < 0) throw std::invalid_argument("Digraph: negative vertex count");
    }
    Digraph(int n, const std::vector<std::pair<int, int>>& arc_list);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arc_set_.size()); }

    bool has_arc(int u, int v) const {
        return arc_set_.count(key(u, v)) > 0;
    }
    /// Out-neighbours of u, ascending.
    const std::vector<int>& out(int u) const { return out_[u]; }
    /// In-neighbours of u, ascending.
    const std::vector<int>& in(int u) const { return in_[u]; }

    /// All arcs, sorted by (u, v).
    std::vector<std::pair<int, int>> arcs() const;

    bool operator==(const Digraph& other) const {
        return n_ == other.n_ && arc_set_ == other.arc_set_;
    }

private:
    std::uint64_t key(int u, int v) const {
        return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n_) + v;
    }

    int n_ = 0;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    std::unordered_set<std::uint64_t> arc_set_;
};

/// Simple undirected graph; edges stored as unordered pairs.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(int n) : n_(n), adj_(n) {
        if (n < 0) throw std::invalid_argument("UndirectedGraph: negative vertex count");
    }
    UndirectedGraph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edge_set_.size()); }

    bool has_edge(int u, int v) const {
        return edge_set_.count(key(u, v)) > 0;
    }
    const std::vector<int>& neighbors(int u) const { return adj_[u]; }

    /// All edges as pairs (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const UndirectedGraph& other) const {
        return n_ == other.n_ && edge_set_ == other.edge_set_;
    }

private:
    std::uint64_t key(int u, int v) const {
        if (u > v) std::swap(u, v);
        return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n_) + v;
    }

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::unordered_set<std::uint64_t> edge_set_;
};

/// A k-coloring: colors[v] in {1..k}.
struct VertexColoring {
    int k = 0;
    std::vector<int> colors;

    /// Vertices of each color, ascending; classes()[c-1] is color c.
    std::vector<std::vector<int>> classes() const;
};

enum class Family {
    dipath,
    dicycle,
    complete_symmetric,
    transitive_tournament,
    erdos_renyi_digraph,
    random_orientation,
};

const char* to_string(Family kind);
std::optional<Family> parse_family(const std::string& name);

/// Generators for the standard families. `p` and `seed` are only read by the
/// random kinds, which are fully deterministic for a given (n, p, seed); the
/// stream is mt19937_64 with 53-bit uniform draws (see README).
Digraph make_family(Family kind, int n, double p = 0.0, std::uint64_t seed = 0);

Digraph symmetric_of(const UndirectedGraph& g);
UndirectedGraph underlying(const Digraph& d);

/// True iff no vertex pair carries both arcs.
bool is_oriented(const Digraph& d);

/// Strongly connected components in reverse-topological order of the
/// condensation (sinks first); vertices ascending within each block.
std::vector<std::vector<int>> strong_components(const Digraph& d);

/// Topological order of the subdigraph induced by `s` (all induced arcs
/// forward), or nullopt if that subdigraph has a dicycle. The full-vertex-set
/// overload orders all of V.
std::optional<std::vector<int>> acyclic_check(const Digraph& d, const std::vector<int>& s);
std::optional<std::vector<int>> acyclic_check(const Digraph& d);

struct InducedSubdigraph {
    Digraph graph;
    std::vector<int> vertices;  // vertices[new_id] = original id, ascending
};
InducedSubdigraph induced_subdigraph(const Digraph& d, const std::vector<int>& s);

/// Bipartition (A, B) if g is bipartite, else nullopt. Deterministic: BFS from
/// the smallest unvisited vertex, which lands in A.
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const UndirectedGraph& g);

}  // namespace dichroma
