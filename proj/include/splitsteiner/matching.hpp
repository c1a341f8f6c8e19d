#pragma once

#include "splitsteiner/graph.hpp"

#include <cstddef>
#include <vector>

namespace splitsteiner {

struct Matching {
    /// Pairwise vertex-disjoint edges of the host graph, sorted.
    std::vector<Edge> edges;

    std::size_t size() const noexcept { return edges.size(); }
};

/// Maximum-cardinality matching of a general graph (Edmonds' blossom
/// algorithm). Deterministic: a greedy pass over ascending ids seeds the
/// matching, then augmenting paths are grown from exposed vertices in
/// ascending order with neighbors scanned in ascending order.
Matching maximum_matching(const Graph& g);

/// min(alpha(g), k + 1) for k <= 3, stopping as soon as k + 1 disjoint edges
/// are known. Throws PreconditionError for k > 3.
std::size_t matching_size_at_most(const Graph& g, std::size_t k);

} // namespace splitsteiner
