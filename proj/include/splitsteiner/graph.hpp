#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace splitsteiner {

using VertexId = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

/// Undirected edge stored with `u < v`.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Builds the normalized edge {a, b}; a and b must differ.
Edge make_edge(VertexId a, VertexId b);

/// Sorts and deduplicates in place.
void normalize(VertexSet& s);
VertexSet set_union(std::span<const VertexId> a, std::span<const VertexId> b);
VertexSet set_difference(std::span<const VertexId> a, std::span<const VertexId> b);
bool contains(std::span<const VertexId> sorted, VertexId v);

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    /// Throws GraphError on self-loops, ids >= n, or repeated edges.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    /// Takes ownership of per-vertex neighbor lists. Lists are sorted if they
    /// are not already; throws GraphError unless the result is simple and
    /// symmetric.
    static Graph from_adjacency(std::vector<std::vector<VertexId>> adjacency);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
    std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
    bool has_edge(VertexId a, VertexId b) const;

    /// All edges, lexicographically sorted.
    std::vector<Edge> edges() const;

private:
    std::vector<std::vector<VertexId>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// True iff the subgraph induced on `subset` is connected. The empty set and
/// singletons are connected. Ids must be < g.vertex_count().
bool is_connected(const Graph& g, std::span<const VertexId> subset);

/// Whole-graph connectivity.
bool is_connected(const Graph& g);

/// Breadth-first spanning tree of the subgraph induced on `subset`, rooted at
/// its smallest id and exploring neighbors in ascending order. Edges are
/// returned in discovery order. Throws GraphError if the induced subgraph is
/// disconnected.
std::vector<Edge> bfs_tree(const Graph& g, std::span<const VertexId> subset);

} // namespace splitsteiner
