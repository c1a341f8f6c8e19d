#pragma once

#include "splitsteiner/errors.hpp"
#include "splitsteiner/graph.hpp"
#include "splitsteiner/instance.hpp"
#include "splitsteiner/split_partition.hpp"
#include "splitsteiner/structure.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace splitsteiner {

/// Raised by solve() when the input graph is not split.
class NotSplitError : public Error {
public:
    explicit NotSplitError(Obstruction obstruction);
    const Obstruction& obstruction() const noexcept { return obstruction_; }

private:
    Obstruction obstruction_;
};

/// Raised by solve() for split graphs containing an induced K_{1,4} when the
/// exact fallback is disabled or over budget.
class HardInstanceError : public Error {
public:
    explicit HardInstanceError(StarWitness witness);
    const StarWitness& witness() const noexcept { return witness_; }

private:
    StarWitness witness_;
};

/// Instance after removing vertices that never help (S1, S2) and terminal
/// clique vertices together with the terminals they already serve (S3).
/// What remains is a covering problem: choose clique vertices of `reduced`
/// so that every independent vertex (all of them terminals) gets a neighbor.
struct PrunedInstance {
    SplitPartition reduced;
    /// The independent vertices of `reduced`; every one is a terminal.
    VertexSet terminals;
    /// Non-terminal independent vertices.
    VertexSet removed_s1;
    /// Non-terminal clique vertices left without a terminal independent
    /// neighbor (accumulated over the fixpoint rounds).
    VertexSet removed_s2;
    /// Terminal clique vertices and their independent neighbors, plus every
    /// promoted terminal.
    VertexSet removed_s3;
    /// Independent terminals that became adjacent to the whole remaining
    /// clique, were moved into it, and then left with S3.
    VertexSet promoted;
    /// Smallest terminal clique vertex of the input, if any.
    std::optional<VertexId> clique_terminal_anchor;
    /// Set when nothing is left to cover but promoted terminals still need a
    /// clique neighbor: a vertex adjacent to all of them.
    std::optional<VertexId> promotion_anchor;
};

/// Computes S1, S2, S3 in order, removes them, and restores maximality of
/// the remaining clique (promote, re-prune) until nothing changes.
PrunedInstance prune(const SteinerInstance& inst, const SplitPartition& sp);

enum class Regime { Empty, OneSplit, TwoSplit, ThreeSplit, ClawFree, ExactFallback };

std::string_view to_string(Regime regime);

struct SolveTrace {
    Regime regime = Regime::Empty;
    std::optional<std::size_t> alpha_m;
    std::optional<std::size_t> alpha_m2;
    std::optional<VertexId> chosen_v3_vertex;
};

struct SteinerResult {
    /// Sorted; disjoint from the terminals.
    VertexSet steiner_set;
    /// Breadth-first spanning tree of the subgraph induced on S and R.
    std::vector<Edge> tree_edges;
    bool optimal = false;
};

struct SolveOutcome {
    SteinerResult result;
    SolveTrace trace;
};

/// Cover for a claw-free reduced instance: one neighbor per terminal when
/// Delta^I = 1; when Delta^I = 2 the clique vertex seeing two terminals, plus
/// a neighbor of the third terminal if there is one. Throws
/// PreconditionError if the reduced graph is not claw-free.
VertexSet solve_claw_free(const PrunedInstance& pi);

/// The corresponding clique set of all terminals. Requires Delta^I = 1.
VertexSet solve_1split(const PrunedInstance& pi);

struct TwoSplitSolution {
    VertexSet steiner_set;
    std::size_t alpha_m = 0;
};

/// Labeled graph M, maximum matching P, labels of P, then one neighbor for
/// every terminal P leaves uncovered. |S| = |I| - |P|. Requires Delta^I = 2.
TwoSplitSolution solve_2split(const PrunedInstance& pi);

struct ThreeSplitSolution {
    VertexSet steiner_set;
    /// The V_3 vertex whose removal gave the best matching (or the smallest
    /// V_3 vertex when every matching is empty).
    VertexId chosen_v3 = 0;
    /// Best alpha(M) over V_3.
    std::size_t alpha_m = 0;
    /// alpha(M2) on the graph without V_3; only computed when alpha_m == 0.
    std::optional<std::size_t> alpha_m2;
};

/// Solver for K_{1,4}-free 3-split reduced instances. For every v in V_3 the
/// independent neighbors of v are removed and the labeled graph of what
/// remains is matched; the best v (ties: smallest id) seeds the cover. If no
/// such matching is non-empty, the labeled graph of the instance without V_3
/// is tried for a matching of size three. Requires Delta^I = 3 and the
/// K_{1,4}-free condition.
ThreeSplitSolution solve_3split(const PrunedInstance& pi);

struct SolveOptions {
    /// Delegate split graphs that contain a K_{1,4} to the exact oracle.
    bool exact_fallback = false;
    /// Largest |C \ R| the fallback will enumerate.
    std::size_t fallback_budget = 20;
};

/// Full pipeline: recognize, verify K_{1,4}-freeness, prune, dispatch on the
/// independent degree of the reduced instance, and extract a BFS tree over
/// S and R in the input graph. Throws NotSplitError or HardInstanceError.
SolveOutcome solve(const SteinerInstance& inst, const SolveOptions& options = {});

} // namespace splitsteiner
