#include "dichroma/exact.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace dichroma {

namespace {

void check_coloring_shape(const Digraph& d, const VertexColoring& f) {
    if (static_cast<int>(f.colors.size()) != d.vertex_count())
        throw std::invalid_argument("coloring length does not match vertex count");
    for (int c : f.colors)
        if (c < 1 || c > f.k) throw std::invalid_argument("coloring entry outside {1..k}");
}

// Cycle in the subdigraph induced by one color class, found by iterative DFS;
// gray vertices are exactly the current frame chain.
std::optional<std::vector<int>> cycle_in_class(const Digraph& d, const std::vector<char>& in_class) {
    const int n = d.vertex_count();
    std::vector<char> state(n, 0);  // 0 white, 1 gray, 2 black
    struct Frame {
        int v;
        std::size_t next;
    };
    std::vector<Frame> frames;
    for (int root = 0; root < n; ++root) {
        if (!in_class[root] || state[root] != 0) continue;
        frames.push_back({root, 0});
        state[root] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& nbrs = d.out(f.v);
            if (f.next < nbrs.size()) {
                int w = nbrs[f.next++];
                if (!in_class[w]) continue;
                if (state[w] == 0) {
                    state[w] = 1;
                    frames.push_back({w, 0});
                } else if (state[w] == 1) {
                    std::vector<int> cycle;
                    std::size_t pos = 0;
                    while (frames[pos].v != w) ++pos;
                    for (; pos < frames.size(); ++pos) cycle.push_back(frames[pos].v);
                    return cycle;
                }
            } else {
                state[f.v] = 2;
                frames.pop_back();
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> find_monochromatic_cycle(const Digraph& d,
                                                         const VertexColoring& f) {
    check_coloring_shape(d, f);
    for (int c = 1; c <= f.k; ++c) {
        std::vector<char> in_class(d.vertex_count(), 0);
        bool any = false;
        for (int v = 0; v < d.vertex_count(); ++v)
            if (f.colors[v] == c) in_class[v] = 1, any = true;
        if (!any) continue;
        if (auto cycle = cycle_in_class(d, in_class)) return cycle;
    }
    return std::nullopt;
}

bool is_acyclic_coloring(const Digraph& d, const VertexColoring& f) {
    return !find_monochromatic_cycle(d, f).has_value();
}

ColoringCertificate make_certificate(const Digraph& d, const VertexColoring& f) {
    check_coloring_shape(d, f);
    ColoringCertificate cert;
    cert.coloring = f;
    cert.class_orders.reserve(f.k);
    for (const auto& members : f.classes()) {
        auto order = acyclic_check(d, members);
        if (!order) throw std::invalid_argument("make_certificate: coloring is not acyclic");
        cert.class_orders.push_back(std::move(*order));
    }
    return cert;
}

VerifyReport verify_certificate(const Digraph& d, const ColoringCertificate& cert) {
    const int n = d.vertex_count();
    const auto& f = cert.coloring;
    if (static_cast<int>(f.colors.size()) != n)
        return {false, "coloring length does not match vertex count", std::nullopt};
    for (int v = 0; v < n; ++v)
        if (f.colors[v] < 1 || f.colors[v] > f.k)
            return {false, "color of vertex " + std::to_string(v) + " outside {1..k}", std::nullopt};
    if (static_cast<int>(cert.class_orders.size()) != f.k)
        return {false, "expected one class order per color", std::nullopt};

    auto fail_with_cycle = [&](std::string reason) -> VerifyReport {
        return {false, std::move(reason), find_monochromatic_cycle(d, f)};
    };

    std::vector<int> position(n, -1);
    int placed = 0;
    for (int c = 1; c <= f.k; ++c) {
        for (int v : cert.class_orders[c - 1]) {
            if (v < 0 || v >= n) return {false, "class order contains an unknown vertex", std::nullopt};
            if (f.colors[v] != c)
                return fail_with_cycle("vertex " + std::to_string(v) + " listed under color " +
                                       std::to_string(c) + " but colored " +
                                       std::to_string(f.colors[v]));
            if (position[v] >= 0) return fail_with_cycle("vertex listed twice in class orders");
            position[v] = placed++;
        }
    }
    if (placed != n) return fail_with_cycle("class orders do not cover every vertex");
    for (auto [u, v] : d.arcs())
        if (f.colors[u] == f.colors[v] && position[u] >= position[v])
            return fail_with_cycle("arc " + std::to_string(u) + "->" + std::to_string(v) +
                                   " goes backwards in its class order");
    return {true, "", std::nullopt};
}

namespace detail {

bool closes_monochromatic_cycle(const Digraph& d, const std::vector<int>& scc_id,
                                const std::vector<int>& partial_colors, int v) {
    // Any new monochromatic dicycle runs through v and stays in v's SCC, so a
    // DFS from v over colored same-color vertices of that SCC decides it.
    const int c = partial_colors[v];
    std::vector<char> visited(d.vertex_count(), 0);
    std::vector<int> stack;
    stack.push_back(v);
    visited[v] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : d.out(u)) {
            if (w == v) return true;  // no loops, so this closes a real dicycle
            if (visited[w] || partial_colors[w] != c || scc_id[w] != scc_id[v]) continue;
            visited[w] = 1;
            stack.push_back(w);
        }
    }
    return false;
}

}  // namespace detail

namespace {

class BacktrackSolver {
public:
    BacktrackSolver(const Digraph& d, const SolveBudget& budget)
        : d_(d), budget_(budget), deadline_(std::chrono::steady_clock::now() + budget.time_limit) {
        const int n = d.vertex_count();
        auto und = underlying(d);
        order_.resize(n);
        std::iota(order_.begin(), order_.end(), 0);
        std::vector<int> degree(n);
        for (int v = 0; v < n; ++v) degree[v] = static_cast<int>(und.neighbors(v).size());
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            if (degree[a] != degree[b]) return degree[a] > degree[b];
            return a < b;
        });
        scc_id_.assign(n, -1);
        int id = 0;
        for (const auto& comp : strong_components(d)) {
            for (int v : comp) scc_id_[v] = id;
            ++id;
        }
    }

    std::optional<VertexColoring> solve(int k) {
        k_ = k;
        colors_.assign(d_.vertex_count(), 0);
        if (extend(0)) return VertexColoring{k_, colors_};
        return std::nullopt;
    }

private:
    void spend_node() {
        if (++nodes_ > budget_.max_nodes_expanded)
            throw budget_exceeded("dichromatic_exact: node budget exceeded");
        if ((nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_)
            throw budget_exceeded("dichromatic_exact: time limit exceeded");
    }

    bool extend(std::size_t pos) {
        if (pos == order_.size()) return true;
        const int v = order_[pos];
        // symmetry breaking: position i may only open color i+1
        const int limit = std::min(static_cast<int>(pos) + 1, k_);
        for (int c = 1; c <= limit; ++c) {
            spend_node();
            colors_[v] = c;
            if (!detail::closes_monochromatic_cycle(d_, scc_id_, colors_, v) && extend(pos + 1))
                return true;
            colors_[v] = 0;
        }
        return false;
    }

    const Digraph& d_;
    const SolveBudget& budget_;
    std::chrono::steady_clock::time_point deadline_;
    std::vector<int> order_;
    std::vector<int> scc_id_;
    std::vector<int> colors_;
    int k_ = 0;
    std::int64_t nodes_ = 0;
};

}  // namespace

ExactResult dichromatic_exact(const Digraph& d, const SolveBudget& budget) {
    const int n = d.vertex_count();
    if (n > budget.max_vertices)
        throw budget_exceeded("dichromatic_exact: instance exceeds max_vertices");
    if (n == 0) {
        ColoringCertificate cert;
        cert.coloring = VertexColoring{1, {}};
        cert.class_orders = {{}};
        return {1, cert};
    }

    const int lower = acyclic_check(d) ? 1 : 2;
    int max_out = 0, max_in = 0;
    for (int v = 0; v < n; ++v) {
        max_out = std::max(max_out, static_cast<int>(d.out(v).size()));
        max_in = std::max(max_in, static_cast<int>(d.in(v).size()));
    }
    const int upper = std::min(n, 1 + std::min(max_out, max_in));

    BacktrackSolver solver(d, budget);
    for (int k = lower; k <= upper; ++k) {
        if (auto coloring = solver.solve(k)) return {k, make_certificate(d, *coloring)};
    }
    throw std::logic_error("dichromatic_exact: degree upper bound failed");
}

ExactResult chromatic_exact(const UndirectedGraph& g, const SolveBudget& budget) {
    return dichromatic_exact(symmetric_of(g), budget);
}

bool verify_acyclic_homomorphism(const Digraph& g, const Digraph& h, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != g.vertex_count())
        throw std::invalid_argument("verify_acyclic_homomorphism: map not total on V(G)");
    for (int x : f)
        if (x < 0 || x >= h.vertex_count())
            throw std::invalid_argument("verify_acyclic_homomorphism: image out of range");
    for (auto [u, v] : g.arcs())
        if (f[u] != f[v] && !h.has_arc(f[u], f[v])) return false;
    std::vector<std::vector<int>> fibers(h.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) fibers[f[v]].push_back(v);
    for (const auto& fiber : fibers)
        if (!acyclic_check(g, fiber)) return false;
    return true;
}

}  // namespace dichroma
