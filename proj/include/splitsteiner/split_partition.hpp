#pragma once

#include "splitsteiner/graph.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace splitsteiner {

/// Induced subgraph certifying that a graph is not split.
struct Obstruction {
    enum class Kind { TwoK2, C4, C5 };

    Kind kind = Kind::TwoK2;
    /// For 2K2: u1 v1 u2 v2 (two edges). For C4/C5: the cycle in order.
    std::vector<VertexId> vertices;
};

std::string_view to_string(Obstruction::Kind kind);

struct NotSplit {
    Obstruction obstruction;
};

/// (C, I) partition of a split graph plus the clique-to-independent incidence
/// the rest of the library works on. Because C is complete and I is
/// edgeless, the incidence determines the induced subgraph entirely.
///
/// A partition may describe a vertex subset of its host graph (see
/// restricted()); vertex ids always refer to the host graph.
class SplitPartition {
public:
    SplitPartition() = default;

    /// Assigns the given clique vertices to C and every other vertex of g to
    /// I. No validation; see validate().
    SplitPartition(const Graph& g, std::span<const VertexId> clique);

    /// Partition of the subgraph induced on `keep`, with roles inherited from
    /// this partition (not recomputed). Ids in `keep` that are not present are
    /// ignored.
    SplitPartition restricted(std::span<const VertexId> keep) const;

    std::size_t universe_size() const noexcept { return role_.size(); }
    bool contains(VertexId v) const { return role_[v] != Role::Absent; }
    bool in_clique(VertexId v) const { return role_[v] == Role::Clique; }
    bool in_independent(VertexId v) const { return role_[v] == Role::Independent; }

    const VertexSet& clique() const noexcept { return clique_; }
    const VertexSet& independent() const noexcept { return independent_; }

    /// N^I(c) for a clique vertex; the clique neighbors N(i) for an
    /// independent vertex. Sorted.
    std::span<const VertexId> cross_neighbors(VertexId v) const
    {
        return {cross_.data() + offsets_[v], cross_.data() + offsets_[v + 1]};
    }
    std::size_t independent_degree(VertexId c) const { return offsets_[c + 1] - offsets_[c]; }

    /// Max over C of d^I; 0 when C is empty.
    std::size_t delta_i() const noexcept { return delta_i_; }
    /// Clique vertices with exactly three independent neighbors.
    const VertexSet& v3() const noexcept { return v3_; }

    /// Returns an empty string if this partition is a valid split partition
    /// of the subgraph of g induced on its vertices, otherwise a description
    /// of the first violated invariant. `require_maximal` additionally checks
    /// that no independent vertex is adjacent to all of C.
    std::string validate(const Graph& g, bool require_maximal = true) const;

private:
    enum class Role : unsigned char { Absent, Clique, Independent };

    void finish();

    std::vector<Role> role_;
    VertexSet clique_;
    VertexSet independent_;
    std::vector<std::size_t> offsets_;
    std::vector<VertexId> cross_;
    std::size_t delta_i_ = 0;
    VertexSet v3_;
};

/// Recognizes split graphs (degree-sequence test) and returns the partition
/// with the largest clique, ties broken towards the lexicographically
/// smallest clique. The clique is therefore maximal. Non-split graphs yield
/// a 2K2, C4 or C5 witness.
std::variant<SplitPartition, NotSplit> split_partition(const Graph& g);

} // namespace splitsteiner
