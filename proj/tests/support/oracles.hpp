#pragma once

// Independent reference implementations used only by the tests. They share
// nothing with the library beyond the Graph container.

#include "splitsteiner/graph.hpp"
#include "splitsteiner/instance.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace testsupport {

using splitsteiner::Edge;
using splitsteiner::Graph;
using splitsteiner::SteinerInstance;
using splitsteiner::VertexId;
using splitsteiner::VertexSet;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
    bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

private:
    std::mt19937_64 engine_;
};

/// Every clique C (as a bit mask, n <= 20) whose complement is independent.
std::vector<std::uint32_t> split_cliques_bruteforce(const Graph& g);

/// Largest such clique, ties to the lexicographically smallest sorted set.
std::optional<VertexSet> preferred_clique_bruteforce(const Graph& g);

/// Any induced K_{1,r}: a center and r pairwise non-adjacent neighbors.
bool has_induced_star_bruteforce(const Graph& g, std::size_t r);

/// Maximum matching size by branching on the lowest vertex.
std::size_t max_matching_bruteforce(const Graph& g);

/// Split graph with clique 0..a-1 and one independent vertex per mask
/// (bit c set = adjacent to clique vertex c).
Graph split_graph_from_masks(std::size_t a, const std::vector<std::uint32_t>& masks);

/// Calls f(graph, a, masks) for every split graph with a labeled clique of
/// size a in [1, max_n] and a nondecreasing list of non-empty neighborhood
/// masks, n = a + |masks| <= max_n. Together these contain every connected
/// split graph on at most max_n vertices up to isomorphism.
void for_each_split_graph(std::size_t max_n,
                          const std::function<void(const Graph&, std::size_t, const std::vector<std::uint32_t>&)>& f);

/// Every labeled graph on n <= 6 vertices, indexed by its edge mask.
Graph graph_from_edge_mask(std::size_t n, std::uint64_t mask);

Graph random_graph(std::size_t n, double p, Rng& rng);

/// Random connected split graph: clique 0..a-1 (shuffled positions are not
/// needed by the callers), b independent vertices with random non-empty
/// neighborhoods.
Graph random_split_graph(std::size_t a, std::size_t b, double p, Rng& rng);

/// Minimum Steiner set size by plain subset enumeration over all
/// non-terminals (no bit tricks, no pruning).
std::size_t steiner_minimum_reference(const SteinerInstance& inst);

/// Tree checks: |edges| = |subset| - 1, every edge inside the graph and the
/// subset, every subset vertex touched, and no cycle.
bool is_spanning_tree(const Graph& g, const VertexSet& subset, const std::vector<Edge>& edges);

} // namespace testsupport
