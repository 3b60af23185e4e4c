#include "dichroma/closed_forms.hpp"

#include <algorithm>

#include "dichroma/exact.hpp"

namespace dichroma {

namespace {

void require_acyclic(const Digraph& d, const VertexColoring& f, const char* who) {
    if (!is_acyclic_coloring(d, f))
        throw std::invalid_argument(std::string(who) + ": input coloring is not acyclic");
}

}  // namespace

VertexColoring cartesian_max_coloring(const Digraph& g, const Digraph& h,
                                      const VertexColoring& f1, const VertexColoring& f2) {
    require_acyclic(g, f1, "cartesian_max_coloring");
    require_acyclic(h, f2, "cartesian_max_coloring");
    const int k = std::max(f1.k, f2.k);
    ProductIndex index{g.vertex_count(), h.vertex_count()};
    VertexColoring result{k, std::vector<int>(g.vertex_count() * h.vertex_count())};
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int x = 0; x < h.vertex_count(); ++x)
            result.colors[index.encode(u, x)] = (f1.colors[u] - 1 + f2.colors[x] - 1) % k + 1;
    return result;
}

VertexColoring direct_projection_coloring(const Digraph& g, const Digraph& h,
                                          const VertexColoring& f) {
    require_acyclic(g, f, "direct_projection_coloring");
    ProductIndex index{g.vertex_count(), h.vertex_count()};
    VertexColoring result{f.k, std::vector<int>(g.vertex_count() * h.vertex_count())};
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int x = 0; x < h.vertex_count(); ++x)
            result.colors[index.encode(u, x)] = f.colors[u];
    return result;
}

VertexColoring lex_pair_coloring(const Digraph& g, const Digraph& h, const VertexColoring& fg,
                                 const VertexColoring& fh) {
    require_acyclic(g, fg, "lex_pair_coloring");
    require_acyclic(h, fh, "lex_pair_coloring");
    ProductIndex index{g.vertex_count(), h.vertex_count()};
    VertexColoring result{fg.k * fh.k, std::vector<int>(g.vertex_count() * h.vertex_count())};
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int x = 0; x < h.vertex_count(); ++x)
            result.colors[index.encode(u, x)] = (fg.colors[u] - 1) * fh.k + fh.colors[x];
    return result;
}

int lex_dicycle_value(int n, int k) {
    if (n < 2) throw std::invalid_argument("lex_dicycle_value: n must be >= 2");
    if (k < 1) throw std::invalid_argument("lex_dicycle_value: k must be >= 1");
    return k + (k + n - 2) / (n - 1);
}

LexDicycleParams make_lex_dicycle_params(int n, int k) {
    LexDicycleParams params;
    params.n = n;
    params.k = k;
    params.k_prime = lex_dicycle_value(n, k);
    params.s = params.k_prime - k;
    params.exclusion_sets.resize(n);
    for (int i = 1; i <= n; ++i) {
        auto& m = params.exclusion_sets[i - 1];
        for (int j = 1; j <= params.s; ++j)
            m.push_back(((i - 1) * params.s + j - 1) % params.k_prime + 1);
        std::sort(m.begin(), m.end());
    }
    return params;
}

VertexColoring lex_dicycle_coloring(int n, const Digraph& h, const VertexColoring& fh) {
    if (n < 2) throw std::invalid_argument("lex_dicycle_coloring: n must be >= 2");
    require_acyclic(h, fh, "lex_dicycle_coloring");
    std::vector<char> used(fh.k + 1, 0);
    for (int c : fh.colors) used[c] = 1;
    for (int c = 1; c <= fh.k; ++c)
        if (!used[c])
            throw std::invalid_argument("lex_dicycle_coloring: fh must use all of its k colors");

    const auto params = make_lex_dicycle_params(n, fh.k);
    ProductIndex index{n, h.vertex_count()};
    VertexColoring result{params.k_prime, std::vector<int>(n * h.vertex_count())};
    for (int i = 1; i <= n; ++i) {
        const auto& excluded = params.exclusion_sets[i - 1];
        std::vector<int> allowed;  // [k'] minus M_i, ascending; exactly k colors
        for (int c = 1; c <= params.k_prime; ++c)
            if (!std::binary_search(excluded.begin(), excluded.end(), c)) allowed.push_back(c);
        for (int x = 0; x < h.vertex_count(); ++x)
            result.colors[index.encode(i - 1, x)] = allowed[fh.colors[x] - 1];
    }
    return result;
}

StrongDicycleValue strong_dicycle_value(int m, int n, const SolveBudget& budget) {
    if (m < 2 || n < 2) throw std::invalid_argument("strong_dicycle_value: m, n must be >= 2");
    if (m < n) std::swap(m, n);  // the product is commutative up to coordinate swap
    if (m == 2 && n == 2) return {4, true};
    if (m == 3 && n <= 3) return {3, true};
    if (n >= 3) return {2, true};
    // m >= 4, n = 2 is not covered by the closed form; solve it exactly
    auto prod = product(ProductKind::strong, make_family(Family::dicycle, m),
                        make_family(Family::dicycle, 2));
    return {dichromatic_exact(prod.graph, budget).k, false};
}

VertexColoring strong_dicycle_coloring(int m, int n) {
    if (m < 4 || n < 3)
        throw std::invalid_argument("strong_dicycle_coloring: requires m >= 4 and n >= 3");
    if (n == 3) {
        // at n = 3 the grid pattern below colors the whole third row alike,
        // which closes a monochromatic row dicycle, so this case is produced
        // by search instead (the value is still 2; see README)
        auto prod = product(ProductKind::strong, make_family(Family::dicycle, m),
                            make_family(Family::dicycle, 3));
        auto result = dichromatic_exact(prod.graph);
        if (result.k != 2)
            throw std::logic_error("strong_dicycle_coloring: expected a 2-coloring at n = 3, got " +
                                   std::to_string(result.k));
        return result.certificate.coloring;
    }
    ProductIndex index{m, n};
    VertexColoring result{2, std::vector<int>(m * n)};
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            const bool one = (i == 2 && j == 3) || (i == 3 && j == 2) || (i == 3 && j == 3) ||
                             (i == 1 && j >= 3) || (j == 1 && i >= 3);
            result.colors[index.encode(i - 1, j - 1)] = one ? 1 : 2;
        }
    return result;
}

VertexColoring bipartite_odd_strong_coloring(const UndirectedGraph& h, int n) {
    if (n < 2) throw std::invalid_argument("bipartite_odd_strong_coloring: n must be >= 2");
    if (h.edge_count() == 0)
        throw std::invalid_argument("bipartite_odd_strong_coloring: H must have an edge");
    auto parts = bipartition(h);
    if (!parts) throw std::invalid_argument("bipartite_odd_strong_coloring: H is not bipartite");
    std::vector<char> in_a(h.vertex_count(), 0);
    for (int v : parts->first) in_a[v] = 1;

    const int cycle = 2 * n + 1;
    ProductIndex index{h.vertex_count(), cycle};
    VertexColoring result{5, std::vector<int>(h.vertex_count() * cycle)};
    for (int u = 0; u < h.vertex_count(); ++u) {
        for (int j = 1; j <= cycle; ++j) {
            int c;
            if (j <= 3) {
                c = in_a[u] ? j : j + 2;
            } else if (j % 2 == 0) {
                c = in_a[u] ? 4 : 1;
            } else {
                c = in_a[u] ? 5 : 2;
            }
            result.colors[index.encode(u, j - 1)] = c;
        }
    }
    return result;
}

std::optional<int> dag_product_value(ProductKind kind, const Digraph& g, const Digraph& h,
                                     int chi_g) {
    (void)g;
    if (!acyclic_check(h)) return std::nullopt;
    return kind == ProductKind::direct ? 1 : chi_g;
}

VertexColoring orientation_tw_coloring(const Digraph& d, const NiceTreeDecomposition& nd) {
    if (!is_oriented(d))
        throw std::invalid_argument("orientation_tw_coloring: digraph has a 2-cycle");
    auto und = underlying(d);
    auto report = validate_nice(und, nd);
    if (!report.ok)
        throw std::invalid_argument("orientation_tw_coloring: invalid decomposition: " +
                                    report.message);

    // forget order, bottom-up; root-bag vertices are never forgotten and go last
    std::vector<int> forget_order;
    std::vector<char> listed(d.vertex_count(), 0);
    for (int t : nd.post_order()) {
        if (nd.nodes[t].kind != NodeKind::forget) continue;
        const int v = nd.nodes[t].vertex;
        if (listed[v])
            throw std::invalid_argument("orientation_tw_coloring: vertex forgotten twice");
        listed[v] = 1;
        forget_order.push_back(v);
    }
    for (int v : nd.nodes[nd.root].bag) {
        listed[v] = 1;
        forget_order.push_back(v);
    }

    VertexColoring result{0, std::vector<int>(d.vertex_count(), 0)};
    for (auto it = forget_order.rbegin(); it != forget_order.rend(); ++it) {
        const int v = *it;
        // occurrences of each color among already-colored neighbours
        std::vector<int> count(result.k + 1, 0);
        for (int u : und.neighbors(v))
            if (result.colors[u] != 0) ++count[result.colors[u]];
        int chosen = 0;
        for (int c = 1; c <= result.k && chosen == 0; ++c)
            if (count[c] <= 1) chosen = c;
        if (chosen == 0) chosen = ++result.k;
        result.colors[v] = chosen;
    }
    return result;
}

}  // namespace dichroma
