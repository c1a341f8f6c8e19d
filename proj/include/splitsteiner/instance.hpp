#pragma once

#include "splitsteiner/graph.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

namespace splitsteiner {

/// A connected graph together with its terminal set R.
class SteinerInstance {
public:
    SteinerInstance() = default;

    /// Sorts the terminals. Throws GraphError if a terminal is out of range,
    /// repeated, or if the graph is disconnected.
    SteinerInstance(Graph graph, VertexSet terminals);

    const Graph& graph() const noexcept { return graph_; }
    const VertexSet& terminals() const noexcept { return terminals_; }
    bool is_terminal(VertexId v) const;

private:
    Graph graph_;
    VertexSet terminals_;
};

/// Parses the line-oriented SSTP format:
///
///     p sstp <n> <m> <t>
///     e <u> <v>        (m lines, 1-based ids)
///     t <u>            (t lines)
///
/// Lines starting with '#' and blank lines are ignored. Throws ParseError
/// carrying the offending line number for syntax problems, self-loops,
/// out-of-range ids, duplicate edges or terminals, and count mismatches; a
/// disconnected graph is reported as ParseError at line 0.
SteinerInstance parse_instance(std::string_view text);
SteinerInstance parse_instance(std::istream& in);

/// Canonical SSTP text: header, edges sorted lexicographically, terminals
/// ascending. Each entry of `comments` is written as a "# ..." line directly
/// after the header.
std::string to_sstp(const SteinerInstance& inst, std::span<const std::string> comments = {});

} // namespace splitsteiner
