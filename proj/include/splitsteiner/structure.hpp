#pragma once

#include "splitsteiner/graph.hpp"
#include "splitsteiner/split_partition.hpp"

#include <compare>
#include <optional>
#include <span>
#include <vector>

namespace splitsteiner {

/// An induced K_{1,r}: center adjacent to every leaf, leaves pairwise
/// non-adjacent.
struct StarWitness {
    VertexId center = 0;
    std::vector<VertexId> leaves;
};

/// Searches for an induced K_{1,r}, r >= 3. In a split graph the center lies
/// in C, and a star exists at v iff d^I(v) >= r, or d^I(v) = r-1 and some
/// other clique vertex w misses all of N^I(v). Clique vertices are scanned in
/// ascending order and the first witness is returned: either r independent
/// neighbors, or the r-1 independent neighbors followed by w.
/// Throws PreconditionError for r < 3.
std::optional<StarWitness> find_induced_star(const SplitPartition& sp, std::size_t r);

/// Claw-freeness through the independent-degree characterization:
/// Delta^I <= 1, or Delta^I = 2 and every clique vertex with two
/// independent neighbors shares one with every other clique vertex.
bool check_claw_free_characterization(const SplitPartition& sp);

/// K_{1,4}-freeness of a 3-split graph: every vertex of V_3 shares an
/// independent neighbor with every other clique vertex. Throws
/// PreconditionError unless delta_i() == 3.
bool check_k14_free_3split(const SplitPartition& sp);

struct LabeledEdge {
    VertexId a = 0; ///< a < b, both independent
    VertexId b = 0;
    VertexId label = 0; ///< a clique vertex adjacent to both

    friend auto operator<=>(const LabeledEdge&, const LabeledEdge&) = default;
};

/// Graph on the independent vertices with an edge per pair that has a common
/// clique neighbor, labeled by the smallest such neighbor.
struct LabeledGraph {
    VertexSet vertices;
    /// Sorted by (a, b); at most one edge per pair.
    std::vector<LabeledEdge> edges;

    /// Same graph on local indices: vertex i of the result is vertices[i].
    Graph to_graph() const;
    /// Maps a local index of to_graph() back to a host vertex.
    VertexId host(VertexId local) const { return vertices[local]; }
    /// The labeled edge joining two host vertices, if any.
    std::optional<LabeledEdge> find(VertexId a, VertexId b) const;
};

/// Builds the labeled graph of a partition with Delta^I <= 2. Throws
/// PreconditionError if some clique vertex has three or more independent
/// neighbors.
LabeledGraph build_labeled_graph(const SplitPartition& sp);

/// One clique vertex per labeled edge (its label). Throws PreconditionError
/// if an edge is not in m or if two edges share a label.
VertexSet corresponding_vertex_set(const LabeledGraph& m, std::span<const LabeledEdge> es);

/// One clique neighbor (the smallest) per independent vertex of vs; the
/// result is deduplicated. Throws PreconditionError if a vertex of vs is not
/// an independent vertex with a clique neighbor.
VertexSet corresponding_clique_set(const SplitPartition& sp, std::span<const VertexId> vs);

/// N^I(S) for a set of clique vertices.
VertexSet independent_neighborhood(const SplitPartition& sp, std::span<const VertexId> clique_vertices);

} // namespace splitsteiner
