#pragma once

#include "r3d/graph.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace r3d {

inline constexpr std::size_t kBruteForceMaxOrder = 14;
inline constexpr std::size_t kDominatingSetMaxOrder = 20;

class InstanceTooLargeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class SearchOutcome { kExact, kBudgetExhausted };

struct SearchBudget {
    std::uint64_t node_limit = UINT64_MAX;
    std::chrono::milliseconds time_limit = std::chrono::milliseconds::max();
};

struct OracleResult {
    long long weight = 0;
    Labeling witness;
    SearchOutcome outcome = SearchOutcome::kExact;
    std::uint64_t nodes = 0;
};

/// Exhaustive search over all labelings with incumbent and neighbourhood pruning.
/// Rejects graphs with more than kBruteForceMaxOrder vertices.
OracleResult brute_force(const Graph& g);

/// Depth-first branch and bound over vertices in degeneracy order (densest core first).
///
/// With `warm_start` (a valid labeling) the search starts from that incumbent.
/// An outcome of kExact certifies optimality; kBudgetExhausted carries the best
/// labeling found so far.
OracleResult branch_and_bound(const Graph& g, const SearchBudget& budget = {},
                              const std::optional<Labeling>& warm_start = std::nullopt);

/// Minimum dominating set by increasing-size subset enumeration (n <= 20).
std::vector<Vertex> min_dominating_set(const Graph& g);

}  // namespace r3d
