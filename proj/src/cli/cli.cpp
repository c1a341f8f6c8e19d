#include "cli.hpp"

#include "report.hpp"
#include "splitsteiner/reductions.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace splitsteiner::cli {

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw Error("cannot write '" + path + "'");
    f << text;
}

int cmd_solve(const std::string& input, const SolveOptions& opts, bool json, std::ostream& out, std::ostream& err)
{
    const auto inst = parse_instance(read_file(input));
    SolveOutcome outcome;
    try {
        outcome = solve(inst, opts);
    } catch (const NotSplitError& e) {
        err << "error: " << describe_not_split(e.obstruction()) << '\n';
        if (json)
            out << Json{{"error", "not-split"}, {"obstruction", obstruction_json(e.obstruction())}}.dump() << '\n';
        return not_split;
    } catch (const HardInstanceError& e) {
        err << "error: " << describe_hard(e.witness()) << "; use --exact-fallback for small instances\n";
        if (json)
            out << Json{{"error", "hard-instance"}, {"k14_witness", star_json(e.witness())}}.dump() << '\n';
        return hard_instance;
    }
    if (!verify_solution(inst, outcome.result.steiner_set)) {
        err << "error: internal check failed, the computed set does not connect the terminals\n";
        return io_error;
    }
    if (json) {
        out << solve_json(outcome).dump() << '\n';
        return ok;
    }
    out << "size: " << outcome.result.steiner_set.size() << '\n';
    out << "steiner_set: " << join_ids(outcome.result.steiner_set) << '\n';
    out << "regime: " << to_string(outcome.trace.regime) << '\n';
    out << "tree_edges:";
    for (const auto& e : outcome.result.tree_edges)
        out << ' ' << e.u + 1 << '-' << e.v + 1;
    out << '\n';
    return ok;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Minimum Steiner trees on split graphs", "splitsteiner"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "splitsteiner 0.1.0");

    std::string input, output;
    bool json = false;
    SolveOptions solve_opts;
    auto* solve_cmd = app.add_subcommand("solve", "Solve a Steiner instance (SSTP file)");
    solve_cmd->add_option("--input,-i", input, "SSTP instance")->required();
    solve_cmd->add_flag("--exact-fallback", solve_opts.exact_fallback,
                        "Use the exhaustive oracle on split graphs with an induced K_{1,4}");
    solve_cmd->add_option("--fallback-budget", solve_opts.fallback_budget, "Largest |C \\ R| for the fallback")
        ->capture_default_str();
    solve_cmd->add_flag("--json", json, "Print the result as JSON");

    auto* check_cmd = app.add_subcommand("check", "Classify the graph of an SSTP file (JSON)");
    check_cmd->add_option("--input,-i", input, "SSTP instance")->required();

    std::string universe = "all";
    std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();
    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive minimum Steiner set (JSON)");
    oracle_cmd->add_option("--input,-i", input, "SSTP instance")->required();
    oracle_cmd->add_option("--universe", universe, "Candidate vertices")
        ->check(CLI::IsMember({"all", "clique"}))
        ->capture_default_str();
    oracle_cmd->add_option("--budget", budget, "Maximum number of subsets to examine");

    auto* reduce_cmd = app.add_subcommand("reduce-x3c", "Turn an X3C instance into a Steiner instance");
    reduce_cmd->add_option("--input,-i", input, "X3C instance")->required();
    reduce_cmd->add_option("--output,-o", output, "SSTP output (default: stdout)");

    GeneratorConfig gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded split instance with R = I");
    gen_cmd->add_option("--level", gen.level, "Delta^I of the graph (1, 2 or 3)")->required()->check(CLI::Range(1, 3));
    gen_cmd->add_option("--clique", gen.clique_size, "|C|")->required();
    gen_cmd->add_option("--indep", gen.independent_size, "|I|")->required();
    gen_cmd->add_option("--seed", gen.seed, "Random seed")->required();
    gen_cmd->add_flag("--k14-free", gen.k14_free, "Level 3 only: no induced K_{1,4}");
    gen_cmd->add_option("--density", gen.density, "Probability of optional extra edges")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    gen_cmd->add_option("--output,-o", output, "SSTP output (default: stdout)");

    std::size_t q = 2, triples = 3;
    bool plant = false;
    std::uint64_t x3c_seed = 0;
    auto* genx_cmd = app.add_subcommand("gen-x3c", "Generate a seeded X3C instance");
    genx_cmd->add_option("--q", q, "Ground set size / 3")->required();
    genx_cmd->add_option("--triples", triples, "Number of triples")->required();
    genx_cmd->add_option("--seed", x3c_seed, "Random seed")->required();
    genx_cmd->add_flag("--plant", plant, "Include a random exact cover");
    genx_cmd->add_option("--output,-o", output, "X3C output (default: stdout)");

    BenchOptions bench;
    bool no_timing = false;
    std::string bench_dir;
    auto* bench_cmd = app.add_subcommand("bench", "Solve every *.sstp file of a directory (JSON lines)");
    bench_cmd->add_option("--dir", bench_dir, "Directory with SSTP files")->required()->check(CLI::ExistingDirectory);
    bench_cmd->add_option("--repeat", bench.repeat, "Solves per file")->capture_default_str()->check(CLI::PositiveNumber);
    bench_cmd->add_option("--jobs", bench.jobs, "Parallel workers")->capture_default_str()->check(CLI::PositiveNumber);
    bench_cmd->add_flag("--exact-fallback", bench.solve.exact_fallback, "As for solve");
    bench_cmd->add_flag("--no-timing", no_timing, "Leave times out of the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : io_error;
    }

    try {
        if (*solve_cmd)
            return cmd_solve(input, solve_opts, json, out, err);
        if (*check_cmd) {
            out << check_json(parse_instance(read_file(input))).dump() << '\n';
            return ok;
        }
        if (*oracle_cmd) {
            const auto u = universe == "all" ? Universe::AllVertices : Universe::CliqueOnly;
            const auto inst = parse_instance(read_file(input));
            out << oracle_json(brute_force_steiner(inst, u, budget), u).dump() << '\n';
            return ok;
        }
        if (*reduce_cmd) {
            const auto reduced = reduce_x3c(parse_x3c(read_file(input)));
            const std::vector<std::string> comments{"k = " + std::to_string(reduced.k)};
            write_output(output, to_sstp(reduced.instance, comments), out);
            return ok;
        }
        if (*gen_cmd) {
            const auto inst = gen_split(gen);
            std::ostringstream note;
            note << "gen level=" << gen.level << " clique=" << gen.clique_size << " indep=" << gen.independent_size
                 << " seed=" << gen.seed << " density=" << gen.density << (gen.k14_free ? " k14-free" : "");
            const std::vector<std::string> comments{note.str()};
            write_output(output, to_sstp(inst, comments), out);
            return ok;
        }
        if (*genx_cmd) {
            write_output(output, to_x3c_text(gen_x3c(q, triples, plant, x3c_seed)), out);
            return ok;
        }
        if (*bench_cmd) {
            bench.dir = bench_dir;
            bench.timing = !no_timing;
            for (const auto& record : bench_report(bench))
                out << record.dump() << '\n';
            return ok;
        }
    } catch (const NotSplitError& e) {
        err << "error: " << describe_not_split(e.obstruction()) << '\n';
        return not_split;
    } catch (const HardInstanceError& e) {
        err << "error: " << describe_hard(e.witness()) << '\n';
        return hard_instance;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return io_error;
    }
    return io_error;
}

} // namespace splitsteiner::cli
