#include "dichroma/fpt.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace dichroma {

std::vector<std::uint32_t> closure_rows(std::vector<std::uint32_t> rows) {
    const int b = static_cast<int>(rows.size());
    for (int k = 0; k < b; ++k)
        for (int i = 0; i < b; ++i)
            if (rows[i] >> k & 1u) rows[i] |= rows[k];
    return rows;
}

bool rows_acyclic(const std::vector<std::uint32_t>& rows) {
    auto closed = closure_rows(rows);
    for (std::size_t i = 0; i < closed.size(); ++i)
        if (closed[i] >> i & 1u) return false;
    return true;
}

bool rows_transitive(const std::vector<std::uint32_t>& rows) {
    const int b = static_cast<int>(rows.size());
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j) {
            if (i == j || !(rows[i] >> j & 1u)) continue;
            // i -> j -> l forces i -> l (loops are not materialized)
            std::uint32_t needed = rows[j] & ~(1u << i) & ~(1u << j);
            if ((needed & ~rows[i]) != 0) return false;
        }
    return true;
}

bool rows_contain(const std::vector<std::uint32_t>& big, const std::vector<std::uint32_t>& small) {
    for (std::size_t i = 0; i < big.size(); ++i)
        if ((small[i] & ~big[i]) != 0) return false;
    return true;
}

Representation transitive_closure(Representation h) {
    auto closed = closure_rows(h.rows);
    for (std::size_t i = 0; i < closed.size(); ++i) closed[i] &= ~(1u << i);
    h.rows = std::move(closed);
    return h;
}

Representation minimal_representation(const Digraph& g, const std::vector<int>& bag,
                                      const std::vector<std::uint8_t>& colors) {
    const int b = static_cast<int>(bag.size());
    Representation rep{bag, std::vector<std::uint32_t>(b, 0)};
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j)
            if (i != j && colors[i] == colors[j] && g.has_arc(bag[i], bag[j]))
                rep.rows[i] |= 1u << j;
    return transitive_closure(std::move(rep));
}

bool representation_feasible(const Digraph& g, const std::vector<int>& bag,
                             const std::vector<std::uint32_t>& rows, int p) {
    const int b = static_cast<int>(bag.size());
    const int v = bag[p];
    for (int u = 0; u < b; ++u) {
        if (u == p) continue;
        if ((rows[u] >> p & 1u) && !g.has_arc(bag[u], v)) {
            bool witnessed = false;
            for (int w = 0; w < b && !witnessed; ++w)
                if (w != p && g.has_arc(bag[w], v) && (rows[u] >> w & 1u)) witnessed = true;
            if (!witnessed) return false;
        }
        if ((rows[p] >> u & 1u) && !g.has_arc(v, bag[u])) {
            bool witnessed = false;
            for (int w = 0; w < b && !witnessed; ++w)
                if (w != p && g.has_arc(v, bag[w]) && (rows[w] >> u & 1u)) witnessed = true;
            if (!witnessed) return false;
        }
    }
    return true;
}

namespace {

bool state_less(const DPState& a, const DPState& b) {
    if (a.colors != b.colors) return a.colors < b.colors;
    return a.rows < b.rows;
}

void finalize_table(DPTable& table, const FptOptions& opts) {
    if (static_cast<std::int64_t>(table.states.size()) > opts.max_states_per_node)
        throw budget_exceeded("fpt: state budget exceeded at node " + std::to_string(table.node));
    std::sort(table.states.begin(), table.states.end(), state_less);
}

// Deduplicating accumulator; keeps the first-produced provenance per state.
class StateSink {
public:
    explicit StateSink(DPTable& table) : table_(table) {}

    void add(DPState state) {
        auto key = std::make_pair(state.colors, state.rows);
        auto [it, inserted] = seen_.emplace(std::move(key), true);
        if (inserted) table_.states.push_back(std::move(state));
    }

private:
    DPTable& table_;
    std::map<std::pair<std::vector<std::uint8_t>, std::vector<std::uint32_t>>, bool> seen_;
};

std::uint32_t insert_bit_gap(std::uint32_t mask, int p) {
    std::uint32_t low = mask & ((1u << p) - 1);
    std::uint32_t high = mask & ~((1u << p) - 1);
    return low | (high << 1);
}

std::uint32_t remove_bit(std::uint32_t mask, int p) {
    std::uint32_t low = mask & ((1u << p) - 1);
    std::uint32_t high = mask >> (p + 1);
    return low | (high << p);
}

}  // namespace

DPTable dp_leaf(const NiceTreeDecomposition& nd, int node, int k, const FptOptions& opts,
                bool pin_first_color) {
    const auto& bag = nd.nodes[node].bag;
    if (nd.nodes[node].kind != NodeKind::leaf || bag.size() != 1)
        throw std::invalid_argument("dp_leaf: node is not a unitary leaf");
    DPTable table;
    table.node = node;
    table.bag = bag;
    const int limit = pin_first_color ? 1 : k;
    for (int c = 1; c <= limit; ++c) {
        DPState state;
        state.colors = {static_cast<std::uint8_t>(c)};
        state.rows = {0};
        table.states.push_back(std::move(state));
    }
    finalize_table(table, opts);
    return table;
}

DPTable dp_introduce(const NiceTreeDecomposition& nd, int node, const DPTable& child,
                     const Digraph& g, int k, const FptOptions& opts) {
    const auto& nodeinfo = nd.nodes[node];
    if (nodeinfo.kind != NodeKind::introduce)
        throw std::invalid_argument("dp_introduce: wrong node kind");
    const auto& bag = nodeinfo.bag;
    const int b = static_cast<int>(bag.size());
    if (b > kMaxBagSize) throw budget_exceeded("fpt: bag too large");
    const int v = nodeinfo.vertex;
    const int p = static_cast<int>(
        std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());

    DPTable table;
    table.node = node;
    table.bag = bag;
    StateSink sink(table);

    for (int child_idx = 0; child_idx < static_cast<int>(child.states.size()); ++child_idx) {
        const DPState& cs = child.states[child_idx];
        // child rows with an empty row/column opened at position p
        std::vector<std::uint32_t> base(b, 0);
        for (int i = 0, src = 0; i < b; ++i) {
            if (i == p) continue;
            base[i] = insert_bit_gap(cs.rows[src++], p);
        }
        for (int c = 1; c <= k; ++c) {
            std::vector<std::uint32_t> rows = base;
            for (int q = 0; q < b; ++q) {
                if (q == p) continue;
                if (cs.colors[q < p ? q : q - 1] != c) continue;
                if (g.has_arc(bag[q], v)) rows[q] |= 1u << p;
                if (g.has_arc(v, bag[q])) rows[p] |= 1u << q;
            }
            rows = closure_rows(std::move(rows));
            bool cyclic = false;
            for (int i = 0; i < b && !cyclic; ++i)
                if (rows[i] >> i & 1u) cyclic = true;
            if (cyclic) continue;

            DPState state;
            state.colors.resize(b);
            for (int i = 0, src = 0; i < b; ++i)
                state.colors[i] = i == p ? static_cast<std::uint8_t>(c) : cs.colors[src++];
            state.rows = std::move(rows);
            state.pred = child_idx;
            sink.add(std::move(state));
        }
    }
    finalize_table(table, opts);
    return table;
}

DPTable dp_forget(const NiceTreeDecomposition& nd, int node, const DPTable& child,
                  const FptOptions& opts) {
    const auto& nodeinfo = nd.nodes[node];
    if (nodeinfo.kind != NodeKind::forget)
        throw std::invalid_argument("dp_forget: wrong node kind");
    const auto& child_bag = child.bag;
    const int v = nodeinfo.vertex;
    const int p = static_cast<int>(
        std::lower_bound(child_bag.begin(), child_bag.end(), v) - child_bag.begin());

    DPTable table;
    table.node = node;
    table.bag = nodeinfo.bag;
    StateSink sink(table);

    for (int child_idx = 0; child_idx < static_cast<int>(child.states.size()); ++child_idx) {
        const DPState& cs = child.states[child_idx];
        DPState state;
        state.colors = cs.colors;
        state.colors.erase(state.colors.begin() + p);
        state.rows.reserve(cs.rows.size() - 1);
        for (int i = 0; i < static_cast<int>(cs.rows.size()); ++i)
            if (i != p) state.rows.push_back(remove_bit(cs.rows[i], p));
        state.pred = child_idx;
        sink.add(std::move(state));
    }
    finalize_table(table, opts);
    return table;
}

DPTable dp_join(const NiceTreeDecomposition& nd, int node, const DPTable& left,
                const DPTable& right, const FptOptions& opts) {
    const auto& nodeinfo = nd.nodes[node];
    if (nodeinfo.kind != NodeKind::join) throw std::invalid_argument("dp_join: wrong node kind");
    const int b = static_cast<int>(nodeinfo.bag.size());

    DPTable table;
    table.node = node;
    table.bag = nodeinfo.bag;
    StateSink sink(table);

    // both tables are sorted by (colors, rows): sweep equal-coloring blocks
    std::size_t li = 0, ri = 0;
    while (li < left.states.size() && ri < right.states.size()) {
        const auto& lc = left.states[li].colors;
        const auto& rc = right.states[ri].colors;
        if (lc < rc) {
            ++li;
            continue;
        }
        if (rc < lc) {
            ++ri;
            continue;
        }
        std::size_t lend = li, rend = ri;
        while (lend < left.states.size() && left.states[lend].colors == lc) ++lend;
        while (rend < right.states.size() && right.states[rend].colors == lc) ++rend;
        for (std::size_t i = li; i < lend; ++i) {
            for (std::size_t j = ri; j < rend; ++j) {
                std::vector<std::uint32_t> rows(b);
                for (int q = 0; q < b; ++q)
                    rows[q] = left.states[i].rows[q] | right.states[j].rows[q];
                rows = closure_rows(std::move(rows));
                bool cyclic = false;
                for (int q = 0; q < b && !cyclic; ++q)
                    if (rows[q] >> q & 1u) cyclic = true;
                if (cyclic) continue;
                DPState state;
                state.colors = lc;
                state.rows = std::move(rows);
                state.pred = static_cast<int>(i);
                state.pred_right = static_cast<int>(j);
                sink.add(std::move(state));
            }
        }
        li = lend;
        ri = rend;
    }
    finalize_table(table, opts);
    return table;
}

void validate_table(const Digraph& g, const NiceTreeDecomposition& nd, const DPTable& table) {
    const auto& node = nd.nodes[table.node];
    int introduce_pos = -1;
    if (node.kind == NodeKind::introduce)
        introduce_pos = static_cast<int>(
            std::lower_bound(table.bag.begin(), table.bag.end(), node.vertex) - table.bag.begin());
    for (const auto& state : table.states) {
        if (!rows_acyclic(state.rows))
            throw std::logic_error("fpt: stored representation is cyclic");
        if (!rows_transitive(state.rows))
            throw std::logic_error("fpt: stored representation is not transitive");
        auto hf = minimal_representation(g, table.bag, state.colors);
        if (!rows_contain(state.rows, hf.rows))
            throw std::logic_error("fpt: stored representation misses minimal arcs");
        if (introduce_pos >= 0 && !representation_feasible(g, table.bag, state.rows, introduce_pos))
            throw std::logic_error("fpt: introduce produced an infeasible representation");
    }
}

namespace {

int degree_upper_bound(const Digraph& g) {
    int max_out = 0, max_in = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        max_out = std::max(max_out, static_cast<int>(g.out(v).size()));
        max_in = std::max(max_in, static_cast<int>(g.in(v).size()));
    }
    return 1 + std::min(max_out, max_in);
}

}  // namespace

FptRun fpt_decide(const Digraph& g, const NiceTreeDecomposition& nd, int k,
                  const FptOptions& opts) {
    if (k < 1) throw std::invalid_argument("fpt_decide: k must be positive");
    if (k > 255) throw std::invalid_argument("fpt_decide: k exceeds the color storage width");
    auto report = validate_nice(underlying(g), nd);
    if (!report.ok)
        throw std::invalid_argument("fpt_decide: invalid decomposition: " + report.message);
    if (!nd.nodes[nd.root].bag.empty())
        throw std::invalid_argument("fpt_decide: root bag must be empty (see make_nice)");

    FptRun run;
    run.tables.resize(nd.node_count());
    run.chosen_state.assign(nd.node_count(), -1);

    const auto order = nd.post_order();
    bool first_leaf = true;
    for (int t : order) {
        const auto& node = nd.nodes[t];
        switch (node.kind) {
            case NodeKind::leaf:
                run.tables[t] =
                    dp_leaf(nd, t, k, opts, opts.break_color_symmetry && first_leaf);
                first_leaf = false;
                break;
            case NodeKind::introduce:
                run.tables[t] = dp_introduce(nd, t, run.tables[node.children[0]], g, k, opts);
                break;
            case NodeKind::forget:
                run.tables[t] = dp_forget(nd, t, run.tables[node.children[0]], opts);
                break;
            case NodeKind::join:
                run.tables[t] = dp_join(nd, t, run.tables[node.children[0]],
                                        run.tables[node.children[1]], opts);
                break;
        }
        if (opts.validate_states) validate_table(g, nd, run.tables[t]);
        run.node_stats.push_back({t, node.kind, static_cast<int>(node.bag.size()),
                                  static_cast<std::int64_t>(run.tables[t].states.size())});
    }

    run.decided = !run.tables[nd.root].states.empty();
    if (!run.decided) return run;

    // walk the provenance links top-down; every vertex appears in some bag on
    // the chosen-state tree, so writing bag colors everywhere covers V
    std::vector<int> colors(g.vertex_count(), 0);
    std::vector<std::pair<int, int>> stack{{nd.root, 0}};
    while (!stack.empty()) {
        auto [t, si] = stack.back();
        stack.pop_back();
        run.chosen_state[t] = si;
        const auto& node = nd.nodes[t];
        const auto& state = run.tables[t].states[si];
        for (std::size_t i = 0; i < node.bag.size(); ++i) {
            if (colors[node.bag[i]] != 0 && colors[node.bag[i]] != state.colors[i])
                throw std::logic_error("fpt: provenance colors disagree across bags");
            colors[node.bag[i]] = state.colors[i];
        }
        switch (node.kind) {
            case NodeKind::leaf:
                break;
            case NodeKind::introduce:
            case NodeKind::forget:
                stack.emplace_back(node.children[0], state.pred);
                break;
            case NodeKind::join:
                stack.emplace_back(node.children[0], state.pred);
                stack.emplace_back(node.children[1], state.pred_right);
                break;
        }
    }
    run.certificate = make_certificate(g, VertexColoring{k, colors});
    return run;
}

FptResult fpt_dichromatic(const Digraph& g, const NiceTreeDecomposition& nd,
                          const FptOptions& opts) {
    if (g.vertex_count() == 0) {
        ColoringCertificate cert;
        cert.coloring = VertexColoring{1, {}};
        cert.class_orders = {{}};
        return {1, cert, {}};
    }
    const int upper = std::min(nd.width() + 1, degree_upper_bound(g));
    for (int k = 1; k <= upper; ++k) {
        auto run = fpt_decide(g, nd, k, opts);
        if (run.decided) return {k, std::move(*run.certificate), std::move(run.node_stats)};
    }
    throw std::logic_error("fpt_dichromatic: upper bound failed");
}

}  // namespace dichroma
