#include "dichroma/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <queue>
#include <set>

namespace dichroma {

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
    return w;
}

namespace {

std::string vertex_list(const std::vector<int>& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(vs[i]);
    }
    return s + "}";
}

ValidationReport check_tree_shape(int node_count, const std::vector<std::pair<int, int>>& edges) {
    if (node_count == 0) return {false, "decomposition has no nodes"};
    if (static_cast<int>(edges.size()) != node_count - 1)
        return {false, "tree must have exactly #nodes-1 edges"};
    std::vector<std::vector<int>> adj(node_count);
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= node_count || b >= node_count)
            return {false, "tree edge references an unknown node"};
        if (a == b) return {false, "tree edge is a self-loop"};
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(node_count, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int t = q.front();
        q.pop();
        for (int s : adj[t])
            if (!seen[s]) {
                seen[s] = 1;
                ++reached;
                q.push(s);
            }
    }
    if (reached != node_count) return {false, "tree is not connected"};
    return {true, ""};
}

}  // namespace

ValidationReport validate_decomposition(const UndirectedGraph& g, const TreeDecomposition& td) {
    auto shape = check_tree_shape(td.node_count(), td.tree_edges);
    if (!shape.ok) return shape;

    const int n = g.vertex_count();
    std::vector<std::vector<int>> occurrences(n);
    for (int t = 0; t < td.node_count(); ++t) {
        std::set<int> distinct(td.bags[t].begin(), td.bags[t].end());
        if (distinct.size() != td.bags[t].size())
            return {false, "bag " + std::to_string(t) + " lists a vertex twice"};
        for (int v : td.bags[t]) {
            if (v < 0 || v >= n)
                return {false, "bag " + std::to_string(t) + " contains unknown vertex " +
                                   std::to_string(v)};
            occurrences[v].push_back(t);
        }
    }
    for (int v = 0; v < n; ++v)
        if (occurrences[v].empty())
            return {false, "condition 1 violated: vertex " + std::to_string(v) + " is in no bag"};

    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int t : occurrences[u]) {
            if (std::find(td.bags[t].begin(), td.bags[t].end(), v) != td.bags[t].end()) {
                covered = true;
                break;
            }
        }
        if (!covered)
            return {false, "condition 2 violated: edge {" + std::to_string(u) + "," +
                               std::to_string(v) + "} is in no bag"};
    }

    std::vector<std::vector<int>> adj(td.node_count());
    for (auto [a, b] : td.tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (int v = 0; v < n; ++v) {
        std::vector<char> in_occ(td.node_count(), 0);
        for (int t : occurrences[v]) in_occ[t] = 1;
        std::queue<int> q;
        q.push(occurrences[v][0]);
        std::vector<char> seen(td.node_count(), 0);
        seen[occurrences[v][0]] = 1;
        std::size_t reached = 1;
        while (!q.empty()) {
            int t = q.front();
            q.pop();
            for (int s : adj[t])
                if (in_occ[s] && !seen[s]) {
                    seen[s] = 1;
                    ++reached;
                    q.push(s);
                }
        }
        if (reached != occurrences[v].size())
            return {false, "condition 3 violated: occurrence set of vertex " + std::to_string(v) +
                               " " + vertex_list(occurrences[v]) + " is disconnected"};
    }
    return {true, ""};
}

const char* to_string(EliminationStrategy s) {
    return s == EliminationStrategy::min_degree ? "min_degree" : "min_fill";
}

TreeDecomposition decomposition_from_elimination_order(const UndirectedGraph& g,
                                                       const std::vector<int>& order) {
    const int n = g.vertex_count();
    if (n == 0) return TreeDecomposition{{{}}, {}};
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("elimination order must list every vertex once");

    std::vector<std::set<int>> fill(n);
    for (auto [u, v] : g.edges()) {
        fill[u].insert(v);
        fill[v].insert(u);
    }
    std::vector<int> position(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        if (v < 0 || v >= n || position[v] >= 0)
            throw std::invalid_argument("elimination order must list every vertex once");
        position[v] = i;
    }

    TreeDecomposition td;
    td.bags.resize(n);
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        std::vector<int> nbrs(fill[v].begin(), fill[v].end());
        td.bags[i] = nbrs;
        td.bags[i].push_back(v);
        std::sort(td.bags[i].begin(), td.bags[i].end());
        // eliminate v: clique-fy its remaining neighbourhood
        for (int a : nbrs) {
            fill[a].erase(v);
            for (int b : nbrs)
                if (a != b) fill[a].insert(b);
        }
        if (!nbrs.empty()) {
            int parent = n;
            for (int u : nbrs) parent = std::min(parent, position[u]);
            td.tree_edges.emplace_back(i, parent);
        } else if (i + 1 < n) {
            td.tree_edges.emplace_back(i, i + 1);
        }
    }
    return td;
}

TreeDecomposition heuristic_decomposition(const UndirectedGraph& g, EliminationStrategy strategy) {
    const int n = g.vertex_count();
    if (n == 0) return TreeDecomposition{{{}}, {}};

    std::vector<std::set<int>> fill(n);
    for (auto [u, v] : g.edges()) {
        fill[u].insert(v);
        fill[v].insert(u);
    }
    std::vector<char> eliminated(n, 0);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        long best_score = 0;
        for (int v = 0; v < n; ++v) {
            if (eliminated[v]) continue;
            long score;
            if (strategy == EliminationStrategy::min_degree) {
                score = static_cast<long>(fill[v].size());
            } else {
                score = 0;
                for (auto it = fill[v].begin(); it != fill[v].end(); ++it)
                    for (auto jt = std::next(it); jt != fill[v].end(); ++jt)
                        if (!fill[*it].count(*jt)) ++score;
            }
            if (best < 0 || score < best_score) {
                best = v;
                best_score = score;
            }
        }
        order.push_back(best);
        eliminated[best] = 1;
        std::vector<int> nbrs(fill[best].begin(), fill[best].end());
        for (int a : nbrs) {
            fill[a].erase(best);
            for (int b : nbrs)
                if (a != b) fill[a].insert(b);
        }
        fill[best].clear();
    }
    return decomposition_from_elimination_order(g, order);
}

namespace {

// Neighbours of v outside eliminated-set S, counting paths through S.
std::uint32_t eliminated_neighborhood(const std::vector<std::uint32_t>& adj, std::uint32_t s,
                                      int v) {
    std::uint32_t reach = 1u << v;
    std::uint32_t frontier = reach;
    std::uint32_t touched = 0;
    while (frontier) {
        std::uint32_t next = 0;
        std::uint32_t f = frontier;
        while (f) {
            int u = std::countr_zero(f);
            f &= f - 1;
            touched |= adj[u];
            next |= adj[u] & s & ~reach;
        }
        reach |= next;
        frontier = next;
    }
    return touched & ~s & ~(1u << v);
}

}  // namespace

ExactTreewidthResult exact_treewidth_small(const UndirectedGraph& g, const SolveBudget& budget) {
    const int n = g.vertex_count();
    if (n == 0) return {-1, TreeDecomposition{{{}}, {}}};
    if (n > 24 || n > budget.max_vertices)
        throw budget_exceeded("exact_treewidth_small: too many vertices");

    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }

    const auto deadline = std::chrono::steady_clock::now() + budget.time_limit;
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    std::vector<std::uint8_t> best(full + 1, 255);   // minimax bag degree over orders
    std::vector<std::int8_t> choice(full + 1, -1);   // last vertex eliminated
    best[0] = 0;
    std::int64_t nodes = 0;
    for (std::uint32_t s = 1; s <= full; ++s) {
        if ((s & 4095) == 0 && std::chrono::steady_clock::now() > deadline)
            throw budget_exceeded("exact_treewidth_small: time limit exceeded");
        std::uint32_t bits = s;
        while (bits) {
            int v = std::countr_zero(bits);
            bits &= bits - 1;
            if (++nodes > budget.max_nodes_expanded)
                throw budget_exceeded("exact_treewidth_small: node budget exceeded");
            std::uint32_t prev = s & ~(1u << v);
            int cost = std::popcount(eliminated_neighborhood(adj, prev, v));
            int value = std::max<int>(best[prev], cost);
            if (value < best[s]) {
                best[s] = static_cast<std::uint8_t>(value);
                choice[s] = static_cast<std::int8_t>(v);
            }
        }
    }

    std::vector<int> order(n);
    std::uint32_t s = full;
    for (int i = n - 1; i >= 0; --i) {
        int v = choice[s];
        order[i] = v;
        s &= ~(1u << v);
    }
    auto td = decomposition_from_elimination_order(g, order);
    return {best[full], td};
}

const char* to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::leaf: return "leaf";
        case NodeKind::introduce: return "introduce";
        case NodeKind::forget: return "forget";
        case NodeKind::join: return "join";
    }
    return "?";
}

int NiceTreeDecomposition::width() const {
    int w = -1;
    for (const auto& node : nodes) w = std::max(w, static_cast<int>(node.bag.size()) - 1);
    return w;
}

std::vector<int> NiceTreeDecomposition::post_order() const {
    std::vector<int> result;
    result.reserve(nodes.size());
    std::vector<std::pair<int, bool>> stack{{root, false}};
    while (!stack.empty()) {
        auto [t, expanded] = stack.back();
        stack.pop_back();
        if (expanded) {
            result.push_back(t);
            continue;
        }
        stack.emplace_back(t, true);
        const auto& ch = nodes[t].children;
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.emplace_back(*it, false);
    }
    return result;
}

namespace {

class NiceBuilder {
public:
    explicit NiceBuilder(const TreeDecomposition& td) : td_(td) {}

    NiceTreeDecomposition build() {
        const int nodes = td_.node_count();
        adj_.assign(nodes, {});
        for (auto [a, b] : td_.tree_edges) {
            adj_[a].push_back(b);
            adj_[b].push_back(a);
        }
        // drop empty-bag leaves; they carry no information and would break the
        // unitary-leaf invariant
        std::vector<char> alive(nodes, 1);
        std::vector<int> degree(nodes);
        for (int t = 0; t < nodes; ++t) degree[t] = static_cast<int>(adj_[t].size());
        bool changed = true;
        int alive_count = nodes;
        while (changed && alive_count > 1) {
            changed = false;
            for (int t = 0; t < nodes && alive_count > 1; ++t) {
                if (!alive[t] || degree[t] > 1 || !td_.bags[t].empty()) continue;
                alive[t] = 0;
                --alive_count;
                changed = true;
                for (int s : adj_[t])
                    if (alive[s]) --degree[s];
            }
        }
        alive_ = std::move(alive);

        int root = -1;
        for (int t = 0; t < nodes && root < 0; ++t)
            if (alive_[t] && !td_.bags[t].empty()) root = t;
        if (root < 0) throw std::invalid_argument("make_nice: all bags are empty");

        int top = build_subtree(root, -1);
        // forget chain down to an empty root bag
        std::vector<int> bag = result_.nodes[top].bag;
        while (!bag.empty()) {
            int v = bag.back();
            bag.pop_back();
            top = add_node(NodeKind::forget, v, bag, {top});
        }
        result_.root = top;
        return std::move(result_);
    }

private:
    int add_node(NodeKind kind, int vertex, std::vector<int> bag, std::vector<int> children) {
        result_.nodes.push_back({kind, vertex, std::move(bag), std::move(children)});
        return static_cast<int>(result_.nodes.size()) - 1;
    }

    // Returns a nice node whose bag equals td_.bags[t].
    int build_subtree(int t, int parent) {
        const auto& bag = td_.bags[t];
        std::vector<int> tops;
        for (int child : adj_[t]) {
            if (child == parent || !alive_[child]) continue;
            int top = build_subtree(child, t);
            tops.push_back(morph(top, td_.bags[child], bag));
        }
        if (tops.empty()) {
            // bag is nonempty here: empty leaves were pruned, and a root with
            // every bag empty can only happen for n = 0, rejected earlier
            int id = add_node(NodeKind::leaf, -1, {bag[0]}, {});
            std::vector<int> cur{bag[0]};
            for (std::size_t i = 1; i < bag.size(); ++i) {
                cur.insert(std::lower_bound(cur.begin(), cur.end(), bag[i]), bag[i]);
                id = add_node(NodeKind::introduce, bag[i], cur, {id});
            }
            return id;
        }
        int id = tops[0];
        for (std::size_t i = 1; i < tops.size(); ++i)
            id = add_node(NodeKind::join, -1, bag, {id, tops[i]});
        return id;
    }

    // Chain of forgets then introduces turning bag `from` into bag `to`.
    int morph(int id, const std::vector<int>& from, const std::vector<int>& to) {
        std::vector<int> cur = from;
        for (int v : from) {
            if (std::binary_search(to.begin(), to.end(), v)) continue;
            cur.erase(std::find(cur.begin(), cur.end(), v));
            id = add_node(NodeKind::forget, v, cur, {id});
        }
        for (int v : to) {
            if (std::binary_search(from.begin(), from.end(), v)) continue;
            cur.insert(std::lower_bound(cur.begin(), cur.end(), v), v);
            id = add_node(NodeKind::introduce, v, cur, {id});
        }
        return id;
    }

    const TreeDecomposition& td_;
    std::vector<std::vector<int>> adj_;
    std::vector<char> alive_;
    NiceTreeDecomposition result_;
};

}  // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& td, const UndirectedGraph& g) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("make_nice: empty graph has no nice decomposition");
    auto report = validate_decomposition(g, td);
    if (!report.ok) throw std::invalid_argument("make_nice: invalid decomposition: " + report.message);
    return NiceBuilder(td).build();
}

ValidationReport validate_nice(const UndirectedGraph& g, const NiceTreeDecomposition& nd) {
    if (nd.nodes.empty() || nd.root < 0 || nd.root >= nd.node_count())
        return {false, "missing or invalid root"};
    for (int t = 0; t < nd.node_count(); ++t) {
        const auto& node = nd.nodes[t];
        if (!std::is_sorted(node.bag.begin(), node.bag.end()))
            return {false, "bag of node " + std::to_string(t) + " is not sorted"};
        switch (node.kind) {
            case NodeKind::leaf:
                if (!node.children.empty()) return {false, "leaf node with children"};
                if (node.bag.size() != 1)
                    return {false, "leaf bag of node " + std::to_string(t) + " is not unitary"};
                break;
            case NodeKind::introduce:
            case NodeKind::forget: {
                if (node.children.size() != 1)
                    return {false, std::string(to_string(node.kind)) + " node must have one child"};
                auto child_bag = nd.nodes[node.children[0]].bag;
                std::vector<int> expected = child_bag;
                if (node.kind == NodeKind::introduce) {
                    expected.insert(std::lower_bound(expected.begin(), expected.end(), node.vertex),
                                    node.vertex);
                    if (std::binary_search(child_bag.begin(), child_bag.end(), node.vertex))
                        return {false, "introduced vertex already in child bag"};
                } else {
                    auto it = std::find(expected.begin(), expected.end(), node.vertex);
                    if (it == expected.end())
                        return {false, "forgotten vertex missing from child bag"};
                    expected.erase(it);
                }
                if (expected != node.bag)
                    return {false, std::string(to_string(node.kind)) + " node " + std::to_string(t) +
                                       " bag does not match its child"};
                break;
            }
            case NodeKind::join: {
                if (node.children.size() != 2) return {false, "join node must have two children"};
                for (int c : node.children)
                    if (nd.nodes[c].bag != node.bag)
                        return {false, "join node " + std::to_string(t) +
                                           " has a child with a different bag"};
                break;
            }
        }
    }
    // underlying tree decomposition conditions
    TreeDecomposition td;
    td.bags.reserve(nd.node_count());
    for (const auto& node : nd.nodes) td.bags.push_back(node.bag);
    for (int t = 0; t < nd.node_count(); ++t)
        for (int c : nd.nodes[t].children) td.tree_edges.emplace_back(t, c);
    return validate_decomposition(g, td);
}

std::vector<std::vector<int>> subtree_vertex_sets(const NiceTreeDecomposition& nd) {
    std::vector<std::vector<int>> sets(nd.node_count());
    for (int t : nd.post_order()) {
        std::set<int> acc(nd.nodes[t].bag.begin(), nd.nodes[t].bag.end());
        for (int c : nd.nodes[t].children) acc.insert(sets[c].begin(), sets[c].end());
        sets[t].assign(acc.begin(), acc.end());
    }
    return sets;
}

}  // namespace dichroma
