#include "dichroma/digraph.hpp"

#include <algorithm>
#include <queue>
#include <random>

namespace dichroma {

Digraph::Digraph(int n, const std::vector<std::pair<int, int>>& arc_list) : Digraph(n) {
    for (auto [u, v] : arc_list) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("Digraph: arc endpoint out of range");
        if (u == v) throw std::invalid_argument("Digraph: loops are not allowed");
        if (arc_set_.insert(key(u, v)).second) {
            out_[u].push_back(v);
            in_[v].push_back(u);
        }
    }
    for (auto& a : out_) std::sort(a.begin(), a.end());
    for (auto& a : in_) std::sort(a.begin(), a.end());
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(arc_set_.size());
    for (int u = 0; u < n_; ++u)
        for (int v : out_[u]) result.emplace_back(u, v);
    std::sort(result.begin(), result.end());
    return result;
}

UndirectedGraph::UndirectedGraph(int n, const std::vector<std::pair<int, int>>& edge_list)
    : UndirectedGraph(n) {
    for (auto [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("UndirectedGraph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("UndirectedGraph: loops are not allowed");
        if (edge_set_.insert(key(u, v)).second) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

std::vector<std::pair<int, int>> UndirectedGraph::edges() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(edge_set_.size());
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) result.emplace_back(u, v);
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<std::vector<int>> VertexColoring::classes() const {
    std::vector<std::vector<int>> by_color(k);
    for (int v = 0; v < static_cast<int>(colors.size()); ++v) {
        int c = colors[v];
        if (c < 1 || c > k) throw std::invalid_argument("VertexColoring: color out of range");
        by_color[c - 1].push_back(v);
    }
    return by_color;
}

const char* to_string(Family kind) {
    switch (kind) {
        case Family::dipath: return "dipath";
        case Family::dicycle: return "dicycle";
        case Family::complete_symmetric: return "complete_symmetric";
        case Family::transitive_tournament: return "transitive_tournament";
        case Family::erdos_renyi_digraph: return "erdos_renyi_digraph";
        case Family::random_orientation: return "random_orientation";
    }
    return "?";
}

std::optional<Family> parse_family(const std::string& name) {
    for (Family f : {Family::dipath, Family::dicycle, Family::complete_symmetric,
                     Family::transitive_tournament, Family::erdos_renyi_digraph,
                     Family::random_orientation})
        if (name == to_string(f)) return f;
    return std::nullopt;
}

namespace {

// 53-bit uniform double in [0,1); keeps the random families reproducible
// independently of any library distribution internals.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Digraph make_family(Family kind, int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("make_family: n must be >= 1");
    std::vector<std::pair<int, int>> arcs;
    switch (kind) {
        case Family::dipath:
            for (int i = 0; i + 1 < n; ++i) arcs.emplace_back(i, i + 1);
            break;
        case Family::dicycle:
            if (n < 2) throw std::invalid_argument("make_family: dicycle requires n >= 2");
            for (int i = 0; i + 1 < n; ++i) arcs.emplace_back(i, i + 1);
            arcs.emplace_back(n - 1, 0);
            break;
        case Family::complete_symmetric:
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (u != v) arcs.emplace_back(u, v);
            break;
        case Family::transitive_tournament:
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) arcs.emplace_back(u, v);
            break;
        case Family::erdos_renyi_digraph: {
            if (p < 0.0 || p > 1.0) throw std::invalid_argument("make_family: p outside [0,1]");
            std::mt19937_64 rng(seed);
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    if (u == v) continue;
                    if (next_unit(rng) < p) arcs.emplace_back(u, v);
                }
            break;
        }
        case Family::random_orientation: {
            if (p < 0.0 || p > 1.0) throw std::invalid_argument("make_family: p outside [0,1]");
            std::mt19937_64 rng(seed);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (next_unit(rng) >= p) continue;
                    if (rng() & 1)
                        arcs.emplace_back(u, v);
                    else
                        arcs.emplace_back(v, u);
                }
            break;
        }
    }
    return Digraph(n, arcs);
}

Digraph symmetric_of(const UndirectedGraph& g) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(2 * g.edge_count());
    for (auto [u, v] : g.edges()) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    return Digraph(g.vertex_count(), arcs);
}

UndirectedGraph underlying(const Digraph& d) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : d.arcs())
        if (u < v || !d.has_arc(v, u)) edges.emplace_back(std::min(u, v), std::max(u, v));
    return UndirectedGraph(d.vertex_count(), edges);
}

bool is_oriented(const Digraph& d) {
    for (auto [u, v] : d.arcs())
        if (d.has_arc(v, u)) return false;
    return true;
}

namespace {

// Iterative Tarjan; roots tried ascending, neighbours ascending, so the
// output is deterministic. Components complete in reverse-topological order.
struct TarjanState {
    const Digraph& d;
    std::vector<int> index, lowlink;
    std::vector<bool> on_stack;
    std::vector<int> stack;
    std::vector<std::vector<int>> components;
    int counter = 0;

    explicit TarjanState(const Digraph& d)
        : d(d),
          index(d.vertex_count(), -1),
          lowlink(d.vertex_count(), 0),
          on_stack(d.vertex_count(), false) {}

    void run(int root) {
        struct Frame {
            int v;
            std::size_t next_arc;
        };
        std::vector<Frame> frames;
        frames.push_back({root, 0});
        index[root] = lowlink[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& nbrs = d.out(f.v);
            if (f.next_arc < nbrs.size()) {
                int w = nbrs[f.next_arc++];
                if (index[w] < 0) {
                    index[w] = lowlink[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[f.v] = std::min(lowlink[f.v], index[w]);
                }
            } else {
                int v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
                if (lowlink[v] == index[v]) {
                    std::vector<int> comp;
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp.push_back(w);
                    } while (w != v);
                    std::sort(comp.begin(), comp.end());
                    components.push_back(std::move(comp));
                }
            }
        }
    }
};

}  // namespace

std::vector<std::vector<int>> strong_components(const Digraph& d) {
    TarjanState state(d);
    for (int v = 0; v < d.vertex_count(); ++v)
        if (state.index[v] < 0) state.run(v);
    return state.components;
}

std::optional<std::vector<int>> acyclic_check(const Digraph& d, const std::vector<int>& s) {
    std::vector<bool> in_s(d.vertex_count(), false);
    for (int v : s) {
        if (v < 0 || v >= d.vertex_count())
            throw std::invalid_argument("acyclic_check: vertex out of range");
        in_s[v] = true;
    }
    std::vector<int> indeg(d.vertex_count(), 0);
    for (int v : s)
        for (int w : d.out(v))
            if (in_s[w]) ++indeg[w];
    // min-heap for a deterministic (lexicographically smallest) order
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v : s)
        if (indeg[v] == 0) ready.push(v);
    std::vector<int> order;
    order.reserve(s.size());
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int w : d.out(v))
            if (in_s[w] && --indeg[w] == 0) ready.push(w);
    }
    if (order.size() != s.size()) return std::nullopt;
    return order;
}

std::optional<std::vector<int>> acyclic_check(const Digraph& d) {
    std::vector<int> all(d.vertex_count());
    for (int v = 0; v < d.vertex_count(); ++v) all[v] = v;
    return acyclic_check(d, all);
}

InducedSubdigraph induced_subdigraph(const Digraph& d, const std::vector<int>& s) {
    std::vector<int> vertices = s;
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<int> new_id(d.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= d.vertex_count())
            throw std::invalid_argument("induced_subdigraph: vertex out of range");
        new_id[v] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> arcs;
    for (int v : vertices)
        for (int w : d.out(v))
            if (new_id[w] >= 0) arcs.emplace_back(new_id[v], new_id[w]);
    return {Digraph(static_cast<int>(vertices.size()), arcs), std::move(vertices)};
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> side(n, -1);
    for (int root = 0; root < n; ++root) {
        if (side[root] >= 0) continue;
        side[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    q.push(w);
                } else if (side[w] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> parts;
    for (int v = 0; v < n; ++v) (side[v] == 0 ? parts.first : parts.second).push_back(v);
    return parts;
}

}  // namespace dichroma
