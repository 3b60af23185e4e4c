#include "dichroma/budget.hpp"

#include <cstdlib>

namespace dichroma {

std::optional<std::int64_t> budget_nodes_override() {
    if (const char* env = std::getenv("DICHROMA_BUDGET_NODES")) {
        char* end = nullptr;
        long long value = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && value > 0) return value;
    }
    return std::nullopt;
}

SolveBudget default_budget() {
    SolveBudget budget;
    if (auto nodes = budget_nodes_override()) budget.max_nodes_expanded = *nodes;
    return budget;
}

}  // namespace dichroma
