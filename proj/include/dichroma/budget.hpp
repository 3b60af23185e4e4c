#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace dichroma {

/// Resource limits for the exponential solvers. Exhaustion raises
/// budget_exceeded; it is never folded into a numeric answer.
struct SolveBudget {
    int max_vertices = 4096;
    std::int64_t max_nodes_expanded = 200'000'000;
    std::chrono::milliseconds time_limit{120'000};
};

class budget_exceeded : public std::runtime_error {
public:
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Reads DICHROMA_BUDGET_NODES if set; otherwise returns the default budget.
SolveBudget default_budget();

/// The raw DICHROMA_BUDGET_NODES value, when set and positive.
std::optional<std::int64_t> budget_nodes_override();

}  // namespace dichroma
