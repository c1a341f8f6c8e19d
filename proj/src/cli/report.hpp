#pragma once

#include "splitsteiner/oracle.hpp"
#include "splitsteiner/solver.hpp"

#include <json.hpp>

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace splitsteiner::cli {

/// Key order is insertion order, so serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

/// All ids in the JSON views below are 1-based, as in the file formats.
Json ids_json(std::span<const VertexId> ids);
Json edges_json(std::span<const Edge> edges);
Json obstruction_json(const Obstruction& o);
Json star_json(const std::optional<StarWitness>& w);

/// One-line messages with 1-based ids.
std::string join_ids(std::span<const VertexId> ids);
std::string describe_not_split(const Obstruction& o);
std::string describe_hard(const StarWitness& w);

/// {"size", "steiner_set", "tree_edges", "regime", "alpha_m", "alpha_m2",
///  "chosen_v3", "optimal"}
Json solve_json(const SolveOutcome& outcome);

/// Classification of an instance graph: split?, partition, Delta^I, V_3 and
/// the claw / K_{1,4} / K_{1,5} verdicts with witnesses.
Json check_json(const SteinerInstance& inst);

Json oracle_json(const OracleResult& r, Universe universe);

struct BenchOptions {
    std::filesystem::path dir;
    std::size_t repeat = 1;
    std::size_t jobs = 1;
    bool timing = true;
    SolveOptions solve;
};

/// One record per *.sstp file of the directory, ordered by file name,
/// followed by an aggregate record; nothing at all for an empty directory.
/// Files are solved by `jobs` workers.
std::vector<Json> bench_report(const BenchOptions& opts);

} // namespace splitsteiner::cli
