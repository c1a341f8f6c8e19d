#pragma once

#include "splitsteiner/graph.hpp"
#include "splitsteiner/instance.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>

namespace splitsteiner {

enum class Universe { AllVertices, CliqueOnly };

struct OracleResult {
    std::size_t min_size = 0;
    /// Lexicographically smallest feasible set of size min_size.
    VertexSet witness;
    /// Candidate subsets examined, including the successful one.
    std::uint64_t explored = 0;
};

/// Exhaustive minimum Steiner set: enumerates subsets of the universe minus R
/// by increasing size (lexicographic within a size) and returns the first
/// whose union with R induces a connected subgraph. CliqueOnly restricts the
/// universe to the clique of split_partition (PreconditionError if the graph
/// is not split). Throws PreconditionError when more than 25 candidates
/// remain, BudgetError past `budget` subsets.
OracleResult brute_force_steiner(const SteinerInstance& inst, Universe universe,
                                 std::uint64_t budget = std::numeric_limits<std::uint64_t>::max());

/// True iff the subgraph induced on s and R is connected. Throws
/// PreconditionError if s meets R or names a vertex outside the graph.
bool verify_solution(const SteinerInstance& inst, std::span<const VertexId> s);

} // namespace splitsteiner
