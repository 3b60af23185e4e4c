#include "dichroma/harness.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "dichroma/closed_forms.hpp"
#include "dichroma/exact.hpp"
#include "dichroma/fpt.hpp"
#include "dichroma/products.hpp"
#include "dichroma/treewidth.hpp"
#include "json.hpp"

namespace dichroma {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
    return splitmix64(splitmix64(seed ^ (tag * 0x100000001b3ull)) + index);
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void record_failure(CheckResult& result, std::string note) {
    ++result.failures;
    if (result.notes.size() < 5) result.notes.push_back(std::move(note));
}

VertexColoring padded(VertexColoring f, int k) {
    f.k = std::max(f.k, k);
    return f;
}

double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

UndirectedGraph random_undirected(std::uint64_t seed, int n, double p) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit_draw(rng) < p) edges.emplace_back(u, v);
    return UndirectedGraph(n, edges);
}

Digraph random_dag(std::uint64_t seed, int n, double p) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit_draw(rng) < p) arcs.emplace_back(u, v);
    return Digraph(n, arcs);
}

NiceTreeDecomposition nice_for(const Digraph& d) {
    auto und = underlying(d);
    return make_nice(heuristic_decomposition(und, EliminationStrategy::min_fill), und);
}

// All simple dicycles (length >= 2) as vertex sequences starting at the
// smallest vertex of the cycle. Use only on small digraphs.
std::vector<std::vector<int>> all_dicycles(const Digraph& d, std::size_t cap = 500000) {
    std::vector<std::vector<int>> cycles;
    const int n = d.vertex_count();
    std::vector<int> path;
    std::vector<char> on_path(n, 0);

    struct Dfs {
        const Digraph& d;
        std::vector<std::vector<int>>& cycles;
        std::vector<int>& path;
        std::vector<char>& on_path;
        std::size_t cap;
        int start;

        void run(int v) {
            if (cycles.size() >= cap) return;
            for (int w : d.out(v)) {
                if (w == start && path.size() >= 2) {
                    cycles.push_back(path);
                } else if (w > start && !on_path[w]) {
                    path.push_back(w);
                    on_path[w] = 1;
                    run(w);
                    on_path[w] = 0;
                    path.pop_back();
                }
            }
        }
    };

    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        on_path.assign(n, 0);
        on_path[s] = 1;
        Dfs dfs{d, cycles, path, on_path, cap, s};
        dfs.run(s);
    }
    return cycles;
}

}  // namespace

Digraph corpus_digraph(std::uint64_t seed, int index, int min_n, int max_n) {
    const std::uint64_t s = sub_seed(seed, 0xC0, static_cast<std::uint64_t>(index));
    const int n = min_n + static_cast<int>(splitmix64(s) % (max_n - min_n + 1));
    static constexpr double kP[] = {0.2, 0.35, 0.5, 0.65};
    const double p = kP[splitmix64(s + 1) % 4];
    if (index % 3 == 2) return make_family(Family::random_orientation, n, p, s);
    return make_family(Family::erdos_renyi_digraph, n, p, s);
}

std::vector<Digraph> corpus_digraphs(std::uint64_t seed, int count, int min_n, int max_n) {
    std::vector<Digraph> result;
    result.reserve(count);
    for (int i = 0; i < count; ++i) result.push_back(corpus_digraph(seed, i, min_n, max_n));
    return result;
}

UndirectedGraph corpus_bipartite(std::uint64_t seed, int index, int max_n) {
    const std::uint64_t s = sub_seed(seed, 0xB1, static_cast<std::uint64_t>(index));
    const int n = 2 + static_cast<int>(splitmix64(s) % (max_n - 1));
    const int a = 1 + static_cast<int>(splitmix64(s + 1) % (n - 1));
    static constexpr double kP[] = {0.3, 0.5, 0.8};
    const double p = kP[splitmix64(s + 2) % 3];
    std::mt19937_64 rng(s);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < n; ++v)
            if (unit_draw(rng) < p) edges.emplace_back(u, v);
    if (edges.empty()) edges.emplace_back(0, a);
    return UndirectedGraph(n, edges);
}

std::vector<Digraph> corpus_bounded_width(std::uint64_t seed, int count, int max_n, int max_width) {
    std::vector<Digraph> result;
    result.reserve(count);
    for (std::uint64_t candidate = 0; static_cast<int>(result.size()) < count; ++candidate) {
        const std::uint64_t s = sub_seed(seed, 0xF1, candidate);
        const int n = 2 + static_cast<int>(splitmix64(s) % (max_n - 1));
        static constexpr double kP[] = {0.15, 0.25, 0.4};
        const double p = kP[splitmix64(s + 1) % 3];
        Digraph d;
        switch (candidate % 3) {
            case 0: d = make_family(Family::erdos_renyi_digraph, n, p, s); break;
            case 1: d = make_family(Family::random_orientation, n, std::min(1.0, 2 * p), s); break;
            default: d = symmetric_of(random_undirected(s, n, p)); break;
        }
        auto td = heuristic_decomposition(underlying(d), EliminationStrategy::min_fill);
        if (td.width() <= max_width) result.push_back(std::move(d));
    }
    return result;
}

CheckResult check_cartesian_max(const HarnessConfig& cfg) {
    CheckResult result{"cartesian_max", 0, 0, 0, {}};
    Stopwatch watch;
    for (int i = 0; i < cfg.pair_count; ++i) {
        auto g = corpus_digraph(cfg.seed, 2 * i, 1, 5);
        auto h = corpus_digraph(cfg.seed, 2 * i + 1, 1, 5);
        auto rg = dichromatic_exact(g, cfg.budget);
        auto rh = dichromatic_exact(h, cfg.budget);
        auto prod = product(ProductKind::cartesian, g, h);
        const int expected = std::max(rg.k, rh.k);
        ++result.instances;
        const int got = dichromatic_exact(prod.graph, cfg.budget).k;
        if (got != expected)
            record_failure(result, "pair " + std::to_string(i) + ": got " + std::to_string(got) +
                                       ", expected " + std::to_string(expected));
        auto constructed = cartesian_max_coloring(g, h, padded(rg.certificate.coloring, expected),
                                                  padded(rh.certificate.coloring, expected));
        if (!is_acyclic_coloring(prod.graph, constructed))
            record_failure(result, "pair " + std::to_string(i) + ": constructed coloring not acyclic");
    }
    result.elapsed_ms = watch.ms();
    return result;
}

CheckResult check_direct_min_upper(const HarnessConfig& cfg) {
    CheckResult result{"direct_min_upper", 0, 0, 0, {}};
    Stopwatch watch;
    for (int i = 0; i < cfg.pair_count; ++i) {
        auto g = corpus_digraph(cfg.seed, 2 * i, 1, 5);
        auto h = corpus_digraph(cfg.seed, 2 * i + 1, 1, 5);
        auto rg = dichromatic_exact(g, cfg.budget);
        auto rh = dichromatic_exact(h, cfg.budget);
        auto prod = product(ProductKind::direct, g, h);
        ++result.instances;
        const int got = dichromatic_exact(prod.graph, cfg.budget).k;
        if (got > std::min(rg.k, rh.k))
            record_failure(result, "pair " + std::to_string(i) + ": product needs " +
                                       std::to_string(got) + " > min");
        auto constructed = direct_projection_coloring(g, h, rg.certificate.coloring);
        if (!is_acyclic_coloring(prod.graph, constructed))
            record_failure(result, "pair " + std::to_string(i) + ": projection coloring not acyclic");
    }
    result.elapsed_ms = watch.ms();
    return result;
}

CheckResult check_direct_equality_min_le_2(const HarnessConfig& cfg) {
    CheckResult result{"direct_equality_min_le_2", 0, 0, 0, {}};
    Stopwatch watch;
    int found = 0;
    for (int candidate = 0; found < cfg.direct_pair_count; ++candidate) {
        if (candidate > 100 * cfg.direct_pair_count + 1000) {
            record_failure(result, "corpus exhausted before reaching the requested pair count");
            break;
        }
        auto g = corpus_digraph(cfg.seed + 7, 2 * candidate, 1, 5);
        auto h = corpus_digraph(cfg.seed + 7, 2 * candidate + 1, 1, 5);
        auto rg = dichromatic_exact(g, cfg.budget);
        auto rh = dichromatic_exact(h, cfg.budget);
        const int expected = std::min(rg.k, rh.k);
        if (expected > 2) continue;
        ++found;
        ++result.instances;
        auto prod = product(ProductKind::direct, g, h);
        const int got = dichromatic_exact(prod.graph, cfg.budget).k;
        if (got != expected)
            record_failure(result, "pair " + std::to_string(candidate) + ": got " +
                                       std::to_string(got) + ", expected " +
                                       std::to_string(expected));
    }
    // every dicycle pair with m*n <= 24 lands on exactly 2
    for (int m = 2; m * 2 <= 24; ++m)
        for (int n = m; m * n <= 24; ++n) {
            ++result.instances;
            auto prod = product(ProductKind::direct, make_family(Family::dicycle, m),
                                make_family(Family::dicycle, n));
            const int got = dichromatic_exact(prod.graph, cfg.budget).k;
            if (got != 2)
                record_failure(result, "dicycle pair (" + std::to_string(m) + "," +
                                           std::to_string(n) + "): got " + std::to_string(got));
        }
    result.elapsed_ms = watch.ms();
    return result;
}

CheckResult check_lex_product_upper(const HarnessConfig& cfg) {
    CheckResult result{"lex_product_upper", 0, 0, 0, {}};
    Stopwatch watch;
    for (int i = 0; i < cfg.pair_count; ++i) {
        auto g = corpus_digraph(cfg.seed, 2 * i, 1, 5);
        auto h = corpus_digraph(cfg.seed, 2 * i + 1, 1, 5);
        auto rg = dichromatic_exact(g, cfg.budget);
        auto rh = dichromatic_exact(h, cfg.budget);
        auto prod = product(ProductKind::lexicographic, g, h);
        ++result.instances;
        const int got = dichromatic_exact(prod.graph, cfg.budget).k;
        if (got > rg.k * rh.k)
            record_failure(result, "pair " + std::to_string(i) + ": product needs " +
                                       std::to_string(got) + " > kG*kH");
        auto constructed =
            lex_pair_coloring(g, h, rg.certificate.coloring, rh.certificate.coloring);
        if (!is_acyclic_coloring(prod.graph, constructed))
            record_failure(result, "pair " + std::to_string(i) + ": pair coloring not acyclic");
    }
    result.elapsed_ms = watch.ms();
    return result;
}

CheckResult check_lex_complete_collapse(const HarnessConfig& cfg) {
    CheckResult result{"lex_complete_collapse", 0, 0, 0, {}};
    Stopwatch watch;
    for (int i = 0; i < cfg.pair_count; ++i) {
        auto g = corpus_digraph(cfg.seed, 2 * i, 1, 5);
        auto h = corpus_digraph(cfg.seed, 2 * i + 1, 1, 5);
        const int k = dichromatic_exact(h, cfg.budget).k;
        auto lhs = product(ProductKind::lexicographic, g, h);
        auto rhs = product(ProductKind::lexicographic, g, make_family(Family::complete_symmetric, k));
        ++result.instances;
        const int left = dichromatic_exact(lhs.graph, cfg.budget).k;
        const int right = dichromatic_exact(rhs.graph, cfg.budget).k;
        if (left != right)
            record_failure(result, "pair " + std::to_string(i) + ": G[H]=" + std::to_string(left) +
                                       " but G[K_k]=" + std::to_string(right));
    }
    result.elapsed_ms = watch.ms();
    return result;
}

CheckResult check_dag_factor_collapse(const HarnessConfig& cfg) {
    CheckResult result{"dag_factor_collapse", 0, 0, 0, {}};
    Stopwatch watch;
    for (int i = 0; i < 13; ++i) {
        auto g = corpus_digraph(cfg.seed + 3, i, 1, 5);
        const std::uint64_t s = sub_seed(cfg.seed, 0xDA, static_cast<std::uint64_t>(i));
        Digraph h;
        switch (i % 3) {
            case 0: h = make_family(Family::dipath, 2 + i % 4); break;
            case 1: h = make_family(Family::transitive_tournament, 2 + i % 4); break;
            default: h = random_dag(s, 3 + i % 3, 0.5); break;
        }
        const int chi_g = dichromatic_exact(g, cfg.budget).k;
        for (ProductKind kind : {ProductKind::cartesian, ProductKind::direct, ProductKind::strong,
                                 ProductKind::lexicographic}) {
            ++result.instances;
            auto predicted = dag_product_value(kind, g, h, chi_g);
            if (!predicted) {
                record_failure(result, "instance " + std::to_string(i) + ": H misdetected as cyclic");
                continue;
            }
            const int got = dichromatic_exact(product(kind, g, h).graph, cfg.budget).k;
            if (got != *predicted)
                record_failure(result, std::string(to_string(kind)) + " instance " +
                                           std::to_string(i) + ": got " + std::to_string(got) +
                                           ", predicted " + std::to_string(*predicted));
        }
        ++result.instances;
        if (dag_product_value(ProductKind::cartesian, g, make_family(Family::dicycle, 3), chi_g))
            record_failure(result, "dicycle factor wrongly reported as a DAG");
    }
    result.elapsed_ms = watch.ms();
    return result;
}

CheckResult check_strong_dicycle_table(const HarnessConfig& cfg) {
    CheckResult result{"strong_dicycle_table", 0, 0, 0, {}};
    Stopwatch watch;
    std::vector<std::pair<std::pair<int, int>, int>> cases = {
        {{2, 2}, 4}, {{3, 2}, 3}, {{2, 3}, 3}, {{3, 3}, 3}};
    for (int m = 4; m * 3 <= 24; ++m)
        for (int n = 3; m * n <= 24; ++n) cases.push_back({{m, n}, 2});
    for (auto [mn, expected] : cases) {
        auto [m, n] = mn;
        ++result.instances;
        auto prod = product(ProductKind::strong, make_family(Family::dicycle, m),
                            make_family(Family::dicycle, n));
        const int exact = dichromatic_exact(prod.graph, cfg.budget).k;
        if (exact != expected)
            record_failure(result, "(" + std::to_string(m) + "," + std::to_string(n) +
                                       "): exact=" + std::to_string(exact));
        const int via_fpt = fpt_dichromatic(prod.graph, nice_for(prod.graph)).k;
        if (via_fpt != expected)
            record_failure(result, "(" + std::to_string(m) + "," + std::to_string(n) +
                                       "): fpt=" + std::to_string(via_fpt));
        auto closed = strong_dicycle_value(m, n, cfg.budget);
        if (closed.value != expected)
            record_failure(result, "(" + std::to_string(m) + "," + std::to_string(n) +
                                       "): closed form says " + std::to_string(closed.value));
        if (m >= 4 && n >= 3) {
            auto coloring = strong_dicycle_coloring(m, n);
            if (coloring.k != 2 || !is_acyclic_coloring(prod.graph, coloring))
                record_failure(result, "(" + std::to_string(m) + "," + std::to_string(n) +
                                           "): explicit 2-coloring failed verification");
        }
    }
    result.elapsed_ms = watch.ms();
    return result;
}

CheckResult check_strong_bipartite_odd_cycle(const HarnessConfig& cfg) {
    CheckResult result{"strong_bipartite_odd_cycle", 0, 0, 0, {}};
    Stopwatch watch;
    const UndirectedGraph k2(2, {{0, 1}});
    const UndirectedGraph p3(3, {{0, 1}, {1, 2}});
    const UndirectedGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    auto cycle = [](int len) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < len; ++i) edges.emplace_back(i, (i + 1) % len);
        return UndirectedGraph(len, edges);
    };
    for (const auto* h : {&k2, &p3, &c4}) {
        ++result.instances;
        auto prod = undirected_product(ProductKind::strong, *h, cycle(5));
        const int chi = chromatic_exact(prod, cfg.budget).k;
        if (chi != 5)
            record_failure(result, "chi(H x C5) = " + std::to_string(chi) + " for H with " +
                                       std::to_string(h->vertex_count()) + " vertices");
    }
    {
        ++result.instances;
        auto prod = undirected_product(ProductKind::strong, k2, cycle(3));
        const int chi = chromatic_exact(prod, cfg.budget).k;
        if (chi != 6) record_failure(result, "chi(K2 x C3) = " + std::to_string(chi));
    }
    for (int i = 0; i < cfg.bipartite_count; ++i) {
        auto h = corpus_bipartite(cfg.seed, i, 8);
        const int n = 2 + i % 2;
        ++result.instances;
        auto coloring = bipartite_odd_strong_coloring(h, n);
        auto prod = undirected_product(ProductKind::strong, h, cycle(2 * n + 1));
        bool proper = true;
        for (auto [u, v] : prod.edges())
            if (coloring.colors[u] == coloring.colors[v]) proper = false;
        std::set<int> used(coloring.colors.begin(), coloring.colors.end());
        if (!proper || coloring.k != 5 || used.size() != 5)
            record_failure(result, "bipartite instance " + std::to_string(i) +
                                       ": coloring not a proper 5-coloring");
    }
    result.elapsed_ms = watch.ms();
    return result;
}

CheckResult check_lex_dicycle_formula(const HarnessConfig& cfg) {
    CheckResult result{"lex_dicycle_formula", 0, 0, 0, {}};
    Stopwatch watch;
    for (int n = 2; n <= 5; ++n) {
        for (int i = 0; i < cfg.lex_corpus_size; ++i) {
            auto h = corpus_digraph(cfg.seed + 11, i, 1, 4);
            auto rh = dichromatic_exact(h, cfg.budget);
            const int expected = lex_dicycle_value(n, rh.k);
            ++result.instances;
            auto prod = product(ProductKind::lexicographic, make_family(Family::dicycle, n), h);
            const int got = dichromatic_exact(prod.graph, cfg.budget).k;
            if (got != expected) {
                record_failure(result, "n=" + std::to_string(n) + " H#" + std::to_string(i) +
                                           ": exact=" + std::to_string(got) + ", formula=" +
                                           std::to_string(expected));
                continue;
            }
            auto coloring = lex_dicycle_coloring(n, h, rh.certificate.coloring);
            std::set<int> used(coloring.colors.begin(), coloring.colors.end());
            bool missing_somewhere = true;  // every color absent from some copy
            for (int c = 1; c <= coloring.k && missing_somewhere; ++c) {
                bool found_gap = false;
                for (int copy = 0; copy < n && !found_gap; ++copy) {
                    bool present = false;
                    for (int x = 0; x < h.vertex_count(); ++x)
                        if (coloring.colors[copy * h.vertex_count() + x] == c) present = true;
                    if (!present) found_gap = true;
                }
                missing_somewhere = found_gap;
            }
            if (coloring.k != expected || static_cast<int>(used.size()) != expected ||
                !missing_somewhere || !is_acyclic_coloring(prod.graph, coloring))
                record_failure(result, "n=" + std::to_string(n) + " H#" + std::to_string(i) +
                                           ": constructed coloring failed verification");
        }
    }
    result.elapsed_ms = watch.ms();
    return result;
}

CheckResult check_orientation_width_bound(const HarnessConfig& cfg) {
    CheckResult result{"orientation_width_bound", 0, 0, 0, {}};
    Stopwatch watch;
    for (int i = 0; i < cfg.orientation_count; ++i) {
        const std::uint64_t s = sub_seed(cfg.seed, 0x09, static_cast<std::uint64_t>(i));
        const int n = 4 + static_cast<int>(splitmix64(s) % 11);  // 4..14
        const double p = i % 2 == 0 ? 0.3 : 0.6;
        auto d = make_family(Family::random_orientation, n, p, s);
        auto nd = nice_for(d);
        const int w = nd.width();
        ++result.instances;
        auto coloring = orientation_tw_coloring(d, nd);
        if (!is_acyclic_coloring(d, coloring) || coloring.k > (w + 2) / 2)
            record_failure(result, "orientation " + std::to_string(i) + ": used " +
                                       std::to_string(coloring.k) + " colors at width " +
                                       std::to_string(w));
    }
    result.elapsed_ms = watch.ms();
    return result;
}

CheckResult check_fpt_oracle_equivalence(const HarnessConfig& cfg) {
    CheckResult result{"fpt_oracle_equivalence", 0, 0, 0, {}};
    Stopwatch watch;
    auto corpus = corpus_bounded_width(cfg.seed, cfg.fpt_corpus_size, 12, 4);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& d = corpus[i];
        ++result.instances;
        const int exact = dichromatic_exact(d, cfg.budget).k;
        auto fpt = fpt_dichromatic(d, nice_for(d));
        if (fpt.k != exact) {
            record_failure(result, "instance " + std::to_string(i) + ": fpt=" +
                                       std::to_string(fpt.k) + ", exact=" + std::to_string(exact));
            continue;
        }
        auto report = verify_certificate(d, fpt.certificate);
        if (!report.ok)
            record_failure(result,
                           "instance " + std::to_string(i) + ": certificate: " + report.reason);
    }
    result.elapsed_ms = watch.ms();
    return result;
}

CheckResult check_product_cycle_projection(const HarnessConfig& cfg) {
    CheckResult result{"product_cycle_projection", 0, 0, 0, {}};
    Stopwatch watch;
    std::vector<std::pair<Digraph, Digraph>> pairs;
    pairs.emplace_back(make_family(Family::dicycle, 2), make_family(Family::dicycle, 2));
    pairs.emplace_back(make_family(Family::dicycle, 3), make_family(Family::dicycle, 2));
    pairs.emplace_back(make_family(Family::dicycle, 3), make_family(Family::dicycle, 3));
    pairs.emplace_back(make_family(Family::dicycle, 3), make_family(Family::dipath, 3));
    for (int i = 0; i < 6; ++i) {
        auto g = corpus_digraph(cfg.seed + 23, 2 * i, 2, 3);
        auto h = corpus_digraph(cfg.seed + 23, 2 * i + 1, 2, 4);
        if (g.vertex_count() * h.vertex_count() <= 12) pairs.emplace_back(g, h);
    }
    for (const auto& [g, h] : pairs) {
        for (ProductKind kind :
             {ProductKind::strong, ProductKind::cartesian, ProductKind::lexicographic}) {
            ++result.instances;
            auto prod = product(kind, g, h);
            const ProductIndex& index = prod.index;
            for (const auto& cycle : all_dicycles(prod.graph)) {
                std::vector<int> firsts, seconds;
                for (int w : cycle) {
                    auto [u, x] = index.decode(w);
                    firsts.push_back(u);
                    seconds.push_back(x);
                }
                std::vector<int> u_set = firsts;
                std::sort(u_set.begin(), u_set.end());
                u_set.erase(std::unique(u_set.begin(), u_set.end()), u_set.end());
                if (u_set.size() > 1) {
                    if (acyclic_check(g, u_set))
                        record_failure(result, std::string(to_string(kind)) +
                                                   ": first coordinates of a dicycle are acyclic");
                } else if (kind == ProductKind::lexicographic) {
                    // single-column cycles must traverse a dicycle of H
                    std::set<int> distinct(seconds.begin(), seconds.end());
                    bool ok = distinct.size() == seconds.size();
                    for (std::size_t j = 0; ok && j < seconds.size(); ++j)
                        if (!h.has_arc(seconds[j], seconds[(j + 1) % seconds.size()])) ok = false;
                    if (!ok)
                        record_failure(result,
                                       "lexicographic: column cycle does not trace a dicycle of H");
                }
            }
        }
    }
    result.elapsed_ms = watch.ms();
    return result;
}

CheckResult check_acyclic_hom_composition(const HarnessConfig& cfg) {
    CheckResult result{"acyclic_hom_composition", 0, 0, 0, {}};
    Stopwatch watch;
    int found = 0;
    for (int candidate = 0; candidate < 4000 && found < 30; ++candidate) {
        const std::uint64_t s = sub_seed(cfg.seed, 0xAC, static_cast<std::uint64_t>(candidate));
        auto g = corpus_digraph(cfg.seed + 31, 3 * candidate, 2, 4);
        auto h = corpus_digraph(cfg.seed + 31, 3 * candidate + 1, 2, 4);
        auto f0 = corpus_digraph(cfg.seed + 31, 3 * candidate + 2, 2, 4);
        std::mt19937_64 rng(s);
        std::vector<int> f(g.vertex_count()), k(h.vertex_count());
        for (int& x : f) x = static_cast<int>(rng() % h.vertex_count());
        for (int& x : k) x = static_cast<int>(rng() % f0.vertex_count());
        if (!verify_acyclic_homomorphism(g, h, f) || !verify_acyclic_homomorphism(h, f0, k))
            continue;
        ++found;
        ++result.instances;
        std::vector<int> composed(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) composed[v] = k[f[v]];
        if (!verify_acyclic_homomorphism(g, f0, composed))
            record_failure(result, "candidate " + std::to_string(candidate) +
                                       ": composition is not an acyclic homomorphism");
    }
    // colorings viewed as homomorphisms into complete digraphs compose with
    // the inclusion K_k into K_{k+1}
    for (int i = 0; i < 10; ++i) {
        auto g = corpus_digraph(cfg.seed + 37, i, 2, 5);
        auto cert = dichromatic_exact(g, cfg.budget).certificate;
        const int k = cert.coloring.k;
        auto kk = make_family(Family::complete_symmetric, k);
        auto kk1 = make_family(Family::complete_symmetric, k + 1);
        std::vector<int> f(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) f[v] = cert.coloring.colors[v] - 1;
        std::vector<int> inclusion(k);
        for (int c = 0; c < k; ++c) inclusion[c] = c;
        ++result.instances;
        if (!verify_acyclic_homomorphism(g, kk, f) ||
            !verify_acyclic_homomorphism(kk, kk1, inclusion))
            record_failure(result, "coloring instance " + std::to_string(i) +
                                       ": expected homomorphisms missing");
        std::vector<int> composed(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) composed[v] = inclusion[f[v]];
        if (!verify_acyclic_homomorphism(g, kk1, composed))
            record_failure(result, "coloring instance " + std::to_string(i) +
                                       ": composition rejected");
    }
    result.elapsed_ms = watch.ms();
    return result;
}

std::vector<CheckResult> run_all_checks(const HarnessConfig& cfg) {
    return {
        check_cartesian_max(cfg),
        check_direct_min_upper(cfg),
        check_direct_equality_min_le_2(cfg),
        check_lex_product_upper(cfg),
        check_lex_complete_collapse(cfg),
        check_dag_factor_collapse(cfg),
        check_strong_dicycle_table(cfg),
        check_strong_bipartite_odd_cycle(cfg),
        check_lex_dicycle_formula(cfg),
        check_orientation_width_bound(cfg),
        check_fpt_oracle_equivalence(cfg),
        check_product_cycle_projection(cfg),
        check_acyclic_hom_composition(cfg),
    };
}

std::string checks_to_json(const std::vector<CheckResult>& results, const HarnessConfig& cfg) {
    nlohmann::json j;
    j["seed"] = cfg.seed;
    auto& list = j["checks"] = nlohmann::json::array();
    for (const auto& r : results)
        list.push_back({{"name", r.name},
                        {"instances", r.instances},
                        {"failures", r.failures},
                        {"elapsed_ms", r.elapsed_ms},
                        {"notes", r.notes}});
    return j.dump(2) + "\n";
}

}  // namespace dichroma
