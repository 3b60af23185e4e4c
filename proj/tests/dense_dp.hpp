#pragma once

// Literal dense realization of the leaf/forget/introduce/join recurrences:
// tables over every (bag coloring, acyclic digraph) pair, evaluated as
// predicates against the full child tables. Exponential in the bag size and
// fully independent of the sparse solver (own matrix code throughout).

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "dichroma/digraph.hpp"
#include "dichroma/treewidth.hpp"

namespace testutil {

using Matrix = std::vector<std::vector<char>>;  // adjacency over bag positions
using DenseKey = std::pair<std::vector<int>, Matrix>;
using DenseTable = std::set<DenseKey>;

inline Matrix make_matrix(int b) { return Matrix(b, std::vector<char>(b, 0)); }

// An arc of a representation stands for a monochromatic path, so its
// endpoints must share a color; enumeration skips digraphs violating that.
inline bool matrix_monochromatic(const Matrix& m, const std::vector<int>& f) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m[i][j] && f[i] != f[j]) return false;
    return true;
}

inline Matrix matrix_closure(Matrix m) {
    const int b = static_cast<int>(m.size());
    for (int k = 0; k < b; ++k)
        for (int i = 0; i < b; ++i)
            if (m[i][k])
                for (int j = 0; j < b; ++j)
                    if (m[k][j]) m[i][j] = 1;
    return m;
}

inline bool matrix_acyclic(const Matrix& m) {
    auto closed = matrix_closure(m);
    for (std::size_t i = 0; i < m.size(); ++i)
        if (closed[i][i]) return false;
    return true;
}

inline bool matrix_transitive(const Matrix& m) {
    const int b = static_cast<int>(m.size());
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j)
            if (i != j && m[i][j])
                for (int l = 0; l < b; ++l)
                    if (l != j && l != i && m[j][l] && !m[i][l]) return false;
    return true;
}

inline bool matrix_subset(const Matrix& small, const Matrix& big) {
    for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = 0; j < small.size(); ++j)
            if (small[i][j] && !big[i][j]) return false;
    return true;
}

inline Matrix matrix_drop(const Matrix& m, int p) {
    const int b = static_cast<int>(m.size());
    Matrix out = make_matrix(b - 1);
    for (int i = 0, oi = 0; i < b; ++i) {
        if (i == p) continue;
        for (int j = 0, oj = 0; j < b; ++j) {
            if (j == p) continue;
            out[oi][oj] = m[i][j];
            ++oj;
        }
        ++oi;
    }
    return out;
}

inline Matrix matrix_insert(const Matrix& m, int p) {
    const int b = static_cast<int>(m.size()) + 1;
    Matrix out = make_matrix(b);
    for (int i = 0, si = 0; i < b; ++i) {
        if (i == p) continue;
        for (int j = 0, sj = 0; j < b; ++j) {
            if (j == p) continue;
            out[i][j] = m[si][sj];
            ++sj;
        }
        ++si;
    }
    return out;
}

// All acyclic digraph matrices on b positions (b <= 4 keeps this tame).
inline const std::vector<Matrix>& acyclic_matrices(int b) {
    static std::map<int, std::vector<Matrix>> cache;
    auto it = cache.find(b);
    if (it != cache.end()) return it->second;
    std::vector<Matrix> list;
    const int pairs = b * (b - 1);
    if (pairs > 20) throw std::invalid_argument("dense tables: bag too large");
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j)
            if (i != j) slots.emplace_back(i, j);
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        Matrix m = make_matrix(b);
        for (int s = 0; s < pairs; ++s)
            if (mask >> s & 1u) m[slots[s].first][slots[s].second] = 1;
        if (matrix_acyclic(m)) list.push_back(std::move(m));
    }
    return cache.emplace(b, std::move(list)).first->second;
}

class DenseDp {
public:
    DenseDp(const dichroma::Digraph& g, const dichroma::NiceTreeDecomposition& nd, int k)
        : g_(g), nd_(nd), k_(k), tables_(nd.node_count()) {
        for (int t : nd_.post_order()) compute(t);
    }

    const DenseTable& table(int node) const { return tables_[node]; }

    bool decide() const {
        return !tables_[nd_.root].empty();
    }

private:
    std::vector<std::vector<int>> all_colorings(int b) const {
        std::vector<std::vector<int>> result;
        std::vector<int> cur(b, 1);
        if (b == 0) return {cur};
        while (true) {
            result.push_back(cur);
            int pos = b - 1;
            while (pos >= 0 && cur[pos] == k_) cur[pos--] = 1;
            if (pos < 0) break;
            ++cur[pos];
        }
        return result;
    }

    Matrix monochromatic_arcs(const std::vector<int>& bag, const std::vector<int>& f) const {
        const int b = static_cast<int>(bag.size());
        Matrix m = make_matrix(b);
        for (int i = 0; i < b; ++i)
            for (int j = 0; j < b; ++j)
                if (i != j && f[i] == f[j] && g_.has_arc(bag[i], bag[j])) m[i][j] = 1;
        return m;
    }

    void compute(int t) {
        const auto& node = nd_.nodes[t];
        const auto& bag = node.bag;
        const int b = static_cast<int>(bag.size());
        DenseTable& table = tables_[t];
        switch (node.kind) {
            case dichroma::NodeKind::leaf: {
                for (int c = 1; c <= k_; ++c) table.insert({{c}, make_matrix(1)});
                break;
            }
            case dichroma::NodeKind::forget: {
                const auto& child = tables_[node.children[0]];
                const auto& child_bag = nd_.nodes[node.children[0]].bag;
                const int p = static_cast<int>(
                    std::find(child_bag.begin(), child_bag.end(), node.vertex) -
                    child_bag.begin());
                for (const auto& f : all_colorings(b)) {
                    for (const auto& h : acyclic_matrices(b)) {
                        if (!matrix_monochromatic(h, f)) continue;
                        bool positive = false;
                        for (int c = 1; c <= k_ && !positive; ++c) {
                            std::vector<int> fc = f;
                            fc.insert(fc.begin() + p, c);
                            // H_c: add v back, its monochromatic arcs, close
                            Matrix hc = matrix_insert(h, p);
                            auto mono = monochromatic_arcs(child_bag, fc);
                            for (int i = 0; i < b + 1; ++i) {
                                if (mono[i][p]) hc[i][p] = 1;
                                if (mono[p][i]) hc[p][i] = 1;
                            }
                            hc = matrix_closure(hc);
                            for (const auto& [cf, ch] : child) {
                                if (cf != fc) continue;
                                if (matrix_subset(hc, ch) && matrix_drop(ch, p) == h) {
                                    positive = true;
                                    break;
                                }
                            }
                        }
                        if (positive) table.insert({f, h});
                    }
                }
                break;
            }
            case dichroma::NodeKind::introduce: {
                const auto& child = tables_[node.children[0]];
                const int p = static_cast<int>(
                    std::find(bag.begin(), bag.end(), node.vertex) - bag.begin());
                for (const auto& f : all_colorings(b)) {
                    auto hf = matrix_closure(monochromatic_arcs(bag, f));
                    for (const auto& h : acyclic_matrices(b)) {
                        if (!matrix_monochromatic(h, f)) continue;
                        if (!matrix_transitive(h) || !matrix_subset(hf, h)) continue;
                        if (!feasible(h, bag, p)) continue;
                        // H_min: drop v, remove in->out shortcut arcs absent
                        // from the graph, close again
                        Matrix pruned = h;
                        for (int u = 0; u < b; ++u)
                            for (int w = 0; w < b; ++w)
                                if (u != p && w != p && h[u][p] && h[p][w] && pruned[u][w] &&
                                    !g_.has_arc(bag[u], bag[w]))
                                    pruned[u][w] = 0;
                        Matrix hmin = matrix_closure(matrix_drop(pruned, p));
                        Matrix hsub = matrix_drop(h, p);
                        std::vector<int> fsub = f;
                        fsub.erase(fsub.begin() + p);
                        bool positive = false;
                        for (const auto& [cf, ch] : child) {
                            if (cf != fsub) continue;
                            if (matrix_subset(hmin, ch) && matrix_subset(ch, hsub)) {
                                positive = true;
                                break;
                            }
                        }
                        if (positive) table.insert({f, h});
                    }
                }
                break;
            }
            case dichroma::NodeKind::join: {
                const auto& left = tables_[node.children[0]];
                const auto& right = tables_[node.children[1]];
                for (const auto& f : all_colorings(b)) {
                    for (const auto& h : acyclic_matrices(b)) {
                        if (!matrix_monochromatic(h, f)) continue;
                        if (!matrix_transitive(h)) continue;
                        bool positive = false;
                        for (const auto& [lf, lh] : left) {
                            if (lf != f) continue;
                            for (const auto& [rf, rh] : right) {
                                if (rf != f) continue;
                                Matrix combined = make_matrix(b);
                                for (int i = 0; i < b; ++i)
                                    for (int j = 0; j < b; ++j)
                                        combined[i][j] = lh[i][j] | rh[i][j];
                                if (matrix_closure(combined) == h) {
                                    positive = true;
                                    break;
                                }
                            }
                            if (positive) break;
                        }
                        if (positive) table.insert({f, h});
                    }
                }
                break;
            }
        }
    }

    bool feasible(const Matrix& h, const std::vector<int>& bag, int p) const {
        const int b = static_cast<int>(bag.size());
        for (int u = 0; u < b; ++u) {
            if (u == p) continue;
            if (h[u][p] && !g_.has_arc(bag[u], bag[p])) {
                bool witness = false;
                for (int w = 0; w < b && !witness; ++w)
                    if (w != p && g_.has_arc(bag[w], bag[p]) && h[u][w]) witness = true;
                if (!witness) return false;
            }
            if (h[p][u] && !g_.has_arc(bag[p], bag[u])) {
                bool witness = false;
                for (int w = 0; w < b && !witness; ++w)
                    if (w != p && g_.has_arc(bag[p], bag[w]) && h[w][u]) witness = true;
                if (!witness) return false;
            }
        }
        return true;
    }

    const dichroma::Digraph& g_;
    const dichroma::NiceTreeDecomposition& nd_;
    int k_;
    std::vector<DenseTable> tables_;
};

// Sparse-state rows converted to the dense matrix form for set comparison.
inline DenseKey dense_key_of(const std::vector<std::uint8_t>& colors,
                             const std::vector<std::uint32_t>& rows) {
    const int b = static_cast<int>(colors.size());
    Matrix m = make_matrix(b);
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j)
            if (rows[i] >> j & 1u) m[i][j] = 1;
    return {std::vector<int>(colors.begin(), colors.end()), m};
}

}  // namespace testutil
