#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dichroma/closed_forms.hpp"
#include "dichroma/exact.hpp"
#include "dichroma/fpt.hpp"
#include "dichroma/harness.hpp"
#include "dichroma/io.hpp"
#include "dichroma/products.hpp"
#include "dichroma/treewidth.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerification = 3;

dichroma::Digraph load_digraph_any(const std::string& path) {
    // undirected inputs are solved through their symmetric digraph
    if (dichroma::file_is_undirected(path))
        return dichroma::symmetric_of(dichroma::read_undirected_file(path));
    return dichroma::read_digraph_file(path);
}

dichroma::NiceTreeDecomposition decomposition_for(
    const dichroma::Digraph& d, const std::string& decomp_path, const std::string& kinds_path,
    dichroma::EliminationStrategy strategy) {
    auto und = dichroma::underlying(d);
    if (!decomp_path.empty() && !kinds_path.empty())
        return dichroma::read_nice_files(decomp_path, kinds_path);
    if (!decomp_path.empty())
        return dichroma::make_nice(dichroma::read_decomposition_file(decomp_path), und);
    return dichroma::make_nice(dichroma::heuristic_decomposition(und, strategy), und);
}

void dump_tables_csv(const std::string& path, const std::vector<dichroma::NodeStats>& stats,
                     int k) {
    std::ofstream out(path);
    if (!out) throw dichroma::parse_error("cannot open " + path + " for writing");
    out << "node,kind,bag_size,states,state_bound\n";
    for (const auto& s : stats) {
        const long double bound = std::pow(static_cast<long double>(k), s.bag_size) *
                                  std::pow(3.0L, s.bag_size * (s.bag_size - 1) / 2.0L);
        out << s.node << "," << to_string(s.kind) << "," << s.bag_size << "," << s.states << ","
            << static_cast<double>(bound) << "\n";
    }
}

int run_gen(const std::string& family, int n, double p, std::uint64_t seed,
            const std::string& out_path) {
    auto kind = dichroma::parse_family(family);
    if (!kind) {
        std::cerr << "unknown family: " << family << "\n";
        return kExitUsage;
    }
    auto d = dichroma::make_family(*kind, n, p, seed);
    dichroma::write_digraph_file(out_path, d);
    std::cout << family << " n=" << n << ": " << d.arc_count() << " arcs -> " << out_path << "\n";
    return kExitOk;
}

int run_product(const std::string& kind_name, const std::string& a_path, const std::string& b_path,
                const std::string& out_path) {
    auto kind = dichroma::parse_product_kind(kind_name);
    if (!kind) {
        std::cerr << "unknown product kind: " << kind_name << "\n";
        return kExitUsage;
    }
    auto a = dichroma::read_digraph_file(a_path);
    auto b = dichroma::read_digraph_file(b_path);
    auto result = dichroma::product(*kind, a, b);
    dichroma::write_digraph_file(out_path, result.graph);
    std::ofstream sidecar(out_path + ".index.json");
    sidecar << dichroma::product_index_to_json(result.index);
    std::cout << kind_name << " product: " << result.graph.vertex_count() << " vertices, "
              << result.graph.arc_count() << " arcs -> " << out_path << "\n";
    return kExitOk;
}

int run_solve(const std::string& graph_path, const std::string& algo, int k_query,
              const std::string& decomp_path, const std::string& kinds_path,
              const std::string& strategy_name, const std::string& cert_path,
              const std::string& tables_path) {
    auto d = load_digraph_any(graph_path);
    const auto strategy = strategy_name == "min_degree" ? dichroma::EliminationStrategy::min_degree
                                                        : dichroma::EliminationStrategy::min_fill;

    std::string algo_used = algo;
    if (d.vertex_count() == 0) algo_used = "exact";  // nothing to decompose
    if (algo == "auto") {
        auto und = dichroma::underlying(d);
        const int width = dichroma::heuristic_decomposition(und, strategy).width();
        algo_used = width <= 6 ? "fpt" : "exact";
    }

    dichroma::FptOptions fpt_opts;
    if (auto nodes = dichroma::budget_nodes_override()) fpt_opts.max_states_per_node = *nodes;

    dichroma::ColoringCertificate cert;
    int k = 0;
    if (k_query > 0) {
        bool yes;
        if (algo_used == "fpt") {
            auto nd = decomposition_for(d, decomp_path, kinds_path, strategy);
            auto run = dichroma::fpt_decide(d, nd, k_query, fpt_opts);
            yes = run.decided;
            if (yes) cert = *run.certificate;
            if (!tables_path.empty()) dump_tables_csv(tables_path, run.node_stats, k_query);
        } else {
            auto result = dichroma::dichromatic_exact(d);
            yes = result.k <= k_query;
            if (yes) cert = result.certificate;
            if (!tables_path.empty())
                std::cerr << "note: --dump-tables only applies to the fpt algorithm\n";
        }
        std::cout << (yes ? "yes" : "no") << "\n";
        if (yes && !cert_path.empty()) dichroma::write_certificate_file(cert_path, cert);
        return kExitOk;
    }

    if (algo_used == "fpt") {
        auto nd = decomposition_for(d, decomp_path, kinds_path, strategy);
        auto result = dichroma::fpt_dichromatic(d, nd, fpt_opts);
        k = result.k;
        cert = result.certificate;
        if (!tables_path.empty()) dump_tables_csv(tables_path, result.node_stats, k);
    } else {
        auto result = dichroma::dichromatic_exact(d);
        k = result.k;
        cert = result.certificate;
        if (!tables_path.empty())
            std::cerr << "note: --dump-tables only applies to the fpt algorithm\n";
    }
    std::cout << k << "\n";
    if (!cert_path.empty()) dichroma::write_certificate_file(cert_path, cert);
    return kExitOk;
}

int run_verify(const std::string& cert_path, const std::string& graph_path) {
    auto d = load_digraph_any(graph_path);
    auto cert = dichroma::read_certificate_file(cert_path);
    auto report = dichroma::verify_certificate(d, cert);
    if (report.ok) {
        std::cout << "certificate ok: " << cert.coloring.k << " colors\n";
        return kExitOk;
    }
    std::cout << "certificate rejected: " << report.reason << "\n";
    if (report.cycle) {
        std::cout << "monochromatic dicycle:";
        for (int v : *report.cycle) std::cout << " " << v;
        std::cout << "\n";
    }
    return kExitVerification;
}

int run_decompose(const std::string& graph_path, const std::string& strategy_name, bool nice,
                  const std::string& out_path, std::string kinds_path) {
    dichroma::UndirectedGraph g = dichroma::file_is_undirected(graph_path)
                                      ? dichroma::read_undirected_file(graph_path)
                                      : dichroma::underlying(dichroma::read_digraph_file(graph_path));
    dichroma::TreeDecomposition td;
    if (strategy_name == "exact") {
        td = dichroma::exact_treewidth_small(g).decomposition;
    } else {
        const auto strategy = strategy_name == "min_degree"
                                  ? dichroma::EliminationStrategy::min_degree
                                  : dichroma::EliminationStrategy::min_fill;
        td = dichroma::heuristic_decomposition(g, strategy);
    }
    if (nice) {
        auto nd = dichroma::make_nice(td, g);
        if (kinds_path.empty()) kinds_path = out_path + ".kinds.json";
        dichroma::write_nice_files(out_path, kinds_path, nd, g.vertex_count());
        std::cout << "width " << nd.width() << ", " << nd.node_count() << " nice nodes -> "
                  << out_path << " + " << kinds_path << "\n";
    } else {
        dichroma::write_decomposition_file(out_path, td, g.vertex_count());
        std::cout << "width " << td.width() << ", " << td.node_count() << " bags -> " << out_path
                  << "\n";
    }
    return kExitOk;
}

int run_check_theorems(const dichroma::HarnessConfig& cfg, const std::string& report_path) {
    auto results = dichroma::run_all_checks(cfg);
    std::printf("%-28s %10s %9s %12s\n", "check", "instances", "failures", "elapsed_ms");
    bool all_ok = true;
    for (const auto& r : results) {
        std::printf("%-28s %10d %9d %12.1f  %s\n", r.name.c_str(), r.instances, r.failures,
                    r.elapsed_ms, r.failures == 0 ? "pass" : "FAIL");
        for (const auto& note : r.notes) std::printf("    %s\n", note.c_str());
        all_ok = all_ok && r.failures == 0;
    }
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        out << dichroma::checks_to_json(results, cfg);
    }
    return all_ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dichromatic numbers of digraphs: exact search, treewidth DP, product colorings"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a digraph family file");
    std::string gen_family, gen_out = "out.dg";
    int gen_n = 0;
    double gen_p = 0.0;
    std::uint64_t gen_seed = 0;
    gen->add_option("--family", gen_family,
                    "dipath|dicycle|complete_symmetric|transitive_tournament|"
                    "erdos_renyi_digraph|random_orientation")
        ->required();
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--p", gen_p, "arc probability (random families)");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("-o,--out", gen_out, "output file");

    // product
    auto* prod = app.add_subcommand("product", "build a digraph product");
    std::string prod_kind, prod_a, prod_b, prod_out = "out.dg";
    prod->add_option("--kind", prod_kind, "cartesian|direct|strong|lexicographic")->required();
    prod->add_option("a", prod_a, "first factor file")->required();
    prod->add_option("b", prod_b, "second factor file")->required();
    prod->add_option("-o,--out", prod_out, "output file (plus .index.json sidecar)");

    // solve
    auto* solve = app.add_subcommand("solve", "compute the dichromatic number");
    std::string solve_graph, solve_algo = "auto", solve_decomp, solve_kinds, solve_cert,
                solve_tables, solve_strategy = "min_fill";
    int solve_k = 0;
    solve->add_option("graph", solve_graph, "digraph (or undirected) file")->required();
    solve->add_option("--algo", solve_algo, "exact|fpt|auto (auto: fpt when width <= 6)");
    solve->add_option("--k", solve_k, "decide chi_a <= k instead of computing it");
    solve->add_option("--decomp", solve_decomp, "decomposition file (PACE-style)");
    solve->add_option("--kinds", solve_kinds, "nice-decomposition kinds sidecar JSON");
    solve->add_option("--strategy", solve_strategy, "min_fill|min_degree heuristic");
    solve->add_option("-o,--cert", solve_cert, "write certificate JSON here");
    solve->add_option("--dump-tables", solve_tables, "write per-node state counts CSV");

    // verify
    auto* verify = app.add_subcommand("verify", "check a certificate against a graph");
    std::string verify_cert, verify_graph;
    verify->add_option("cert", verify_cert, "certificate JSON")->required();
    verify->add_option("graph", verify_graph, "graph file")->required();

    // decompose
    auto* decomp = app.add_subcommand("decompose", "write a (nice) tree decomposition");
    std::string dec_graph, dec_strategy = "min_fill", dec_out = "out.td", dec_kinds;
    bool dec_nice = false;
    decomp->add_option("graph", dec_graph, "graph file (digraph or undirected)")->required();
    decomp->add_option("--strategy", dec_strategy, "min_fill|min_degree|exact");
    decomp->add_flag("--nice", dec_nice, "emit nice form with kinds sidecar");
    decomp->add_option("-o,--out", dec_out, "output decomposition file");
    decomp->add_option("--kinds", dec_kinds, "kinds sidecar path (nice form)");

    // check-theorems
    auto* checks = app.add_subcommand("check-theorems", "run the full property harness");
    dichroma::HarnessConfig cfg;
    std::string checks_report;
    checks->add_option("--seed", cfg.seed, "corpus seed");
    checks->add_option("--pairs", cfg.pair_count, "random factor pairs per product check");
    checks->add_option("--direct-pairs", cfg.direct_pair_count, "pairs for the direct equality check");
    checks->add_option("--lex-corpus", cfg.lex_corpus_size, "digraphs per cycle length");
    checks->add_option("--bipartite", cfg.bipartite_count, "random bipartite instances");
    checks->add_option("--orientations", cfg.orientation_count, "random orientations");
    checks->add_option("--fpt-corpus", cfg.fpt_corpus_size, "instances for the oracle comparison");
    checks->add_option("--out", checks_report, "machine-readable JSON report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return run_gen(gen_family, gen_n, gen_p, gen_seed, gen_out);
        if (prod->parsed()) return run_product(prod_kind, prod_a, prod_b, prod_out);
        if (solve->parsed())
            return run_solve(solve_graph, solve_algo, solve_k, solve_decomp, solve_kinds,
                             solve_strategy, solve_cert, solve_tables);
        if (verify->parsed()) return run_verify(verify_cert, verify_graph);
        if (decomp->parsed())
            return run_decompose(dec_graph, dec_strategy, dec_nice, dec_out, dec_kinds);
        if (checks->parsed()) return run_check_theorems(cfg, checks_report);
    } catch (const dichroma::budget_exceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const dichroma::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
