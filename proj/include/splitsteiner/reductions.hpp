#pragma once

#include "splitsteiner/graph.hpp"
#include "splitsteiner/instance.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace splitsteiner {

using Triple = std::array<std::uint32_t, 3>;

/// Exact-3-Cover instance over the ground set {1, ..., 3q}.
class X3CInstance {
public:
    X3CInstance() = default;

    /// Sorts each triple and drops repeated triples (first occurrence kept).
    /// Throws PreconditionError if the ground size is not a positive multiple
    /// of three or a triple has repeated or out-of-range elements.
    X3CInstance(std::size_t ground_size, std::vector<Triple> triples);

    std::size_t ground_size() const noexcept { return ground_size_; }
    std::size_t q() const noexcept { return ground_size_ / 3; }
    const std::vector<Triple>& triples() const noexcept { return triples_; }

private:
    std::size_t ground_size_ = 0;
    std::vector<Triple> triples_;
};

/// "x3c <3q> <n>" followed by n lines "c <a> <b> <c>"; '#' lines ignored.
X3CInstance parse_x3c(std::string_view text);
std::string to_x3c_text(const X3CInstance& x);

struct ReducedX3C {
    SteinerInstance instance;
    /// Steiner budget: q.
    std::size_t k = 0;
};

/// Ground element i (1-based) becomes vertex i-1, triple l becomes vertex
/// 3q+l; triple vertices form a clique, each is joined to its three
/// elements, and R is the ground set. Throws PreconditionError if some
/// element is in no triple (the graph would be disconnected).
ReducedX3C reduce_x3c(const X3CInstance& x);

/// Indices (ascending) of q pairwise-disjoint triples covering the ground
/// set, or nullopt. Throws PreconditionError for more than 20 triples.
std::optional<std::vector<std::size_t>> solve_x3c_bruteforce(const X3CInstance& x);

struct GeneratorConfig {
    std::size_t clique_size = 4;
    std::size_t independent_size = 4;
    /// Requested Delta^I, 1..3.
    unsigned level = 1;
    /// Only meaningful at level 3: reject anything containing a K_{1,4}.
    bool k14_free = false;
    std::uint64_t seed = 0;
    /// Probability of adding optional clique-independent edges beyond the
    /// ones needed for coverage and for reaching the level.
    double density = 0.3;
    /// Number of constructions tried before giving up.
    std::size_t max_attempts = 2000;
};

/// Seeded connected split graph with |C| = clique_size, |I| =
/// independent_size, a maximal clique and Delta^I = level; R = I. Vertex ids
/// are shuffled. Throws PreconditionError for configurations that admit no
/// such graph and BudgetError when every attempt is rejected.
SteinerInstance gen_split(const GeneratorConfig& cfg);

/// Random X3C instance over 3q elements with `triples` distinct triples. When
/// `plant_cover` is set, a random exact cover is included. Every element is
/// covered by at least one triple; without a plant that takes up to
/// ceil(3q / 2) triples (PreconditionError if fewer are asked for and run
/// out).
X3CInstance gen_x3c(std::size_t q, std::size_t triples, bool plant_cover, std::uint64_t seed);

} // namespace splitsteiner
