#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dichroma/budget.hpp"
#include "dichroma/digraph.hpp"

namespace dichroma {

struct CheckResult {
    std::string name;
    int instances = 0;
    int failures = 0;
    double elapsed_ms = 0.0;
    std::vector<std::string> notes;  // first few failure witnesses
};

struct HarnessConfig {
    std::uint64_t seed = 12345;
    int pair_count = 50;         // random factor pairs, <= 5 vertices each
    int direct_pair_count = 30;  // pairs with a factor of dichromatic number <= 2
    int lex_corpus_size = 30;    // digraphs with <= 4 vertices
    int bipartite_count = 20;    // bipartite graphs up to 8 vertices
    int orientation_count = 50;  // random orientations, n <= 14
    int fpt_corpus_size = 200;   // digraphs with n <= 12, heuristic width <= 4
    SolveBudget budget = default_budget();
};

// One named check per proved statement the library implements.
CheckResult check_cartesian_max(const HarnessConfig& cfg);
CheckResult check_direct_min_upper(const HarnessConfig& cfg);
CheckResult check_direct_equality_min_le_2(const HarnessConfig& cfg);
CheckResult check_lex_product_upper(const HarnessConfig& cfg);
CheckResult check_lex_complete_collapse(const HarnessConfig& cfg);
CheckResult check_dag_factor_collapse(const HarnessConfig& cfg);
CheckResult check_strong_dicycle_table(const HarnessConfig& cfg);
CheckResult check_strong_bipartite_odd_cycle(const HarnessConfig& cfg);
CheckResult check_lex_dicycle_formula(const HarnessConfig& cfg);
CheckResult check_orientation_width_bound(const HarnessConfig& cfg);
CheckResult check_fpt_oracle_equivalence(const HarnessConfig& cfg);
CheckResult check_product_cycle_projection(const HarnessConfig& cfg);
CheckResult check_acyclic_hom_composition(const HarnessConfig& cfg);

std::vector<CheckResult> run_all_checks(const HarnessConfig& cfg);

std::string checks_to_json(const std::vector<CheckResult>& results, const HarnessConfig& cfg);

// Seeded corpora; fully determined by (seed, parameters).
Digraph corpus_digraph(std::uint64_t seed, int index, int min_n, int max_n);
std::vector<Digraph> corpus_digraphs(std::uint64_t seed, int count, int min_n, int max_n);
UndirectedGraph corpus_bipartite(std::uint64_t seed, int index, int max_n);
/// Mixed-kind corpus (directed ER, random orientations, symmetric digraphs of
/// random graphs), filtered to heuristic width <= max_width.
std::vector<Digraph> corpus_bounded_width(std::uint64_t seed, int count, int max_n, int max_width);

}  // namespace dichroma
