// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "cli.hpp"
#include "oracles.hpp"

#include "splitsteiner/matching.hpp"
#include "splitsteiner/oracle.hpp"
#include "splitsteiner/reductions.hpp"
#include "splitsteiner/solver.hpp"
#include "splitsteiner/structure.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace splitsteiner;
using namespace testsupport;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
    bool pass = true;
    std::string detail;

    // Records the first failure only; later ones rarely add information.
    void fail(const std::string& why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
};

SplitPartition canonical(const Graph& g)
{
    return std::get<SplitPartition>(split_partition(g));
}

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

VertexSet random_subset(std::size_t n, double p, Rng& rng)
{
    VertexSet s;
    for (VertexId v = 0; v < n; ++v)
        if (rng.chance(p))
            s.push_back(v);
    return s;
}

// Seeded K_{1,4}-free split instance with at most max_n vertices; R = I.
std::optional<SteinerInstance> small_generated(Rng& rng, std::size_t max_n, unsigned level)
{
    GeneratorConfig cfg;
    cfg.level = level;
    cfg.clique_size = rng.between(2, max_n / 2);
    const auto top = std::min(level * cfg.clique_size, max_n - cfg.clique_size);
    if (top < level)
        return std::nullopt;
    cfg.independent_size = rng.between(level, top);
    cfg.k14_free = level == 3;
    if (cfg.k14_free && cfg.independent_size > 2 * cfg.clique_size + 1)
        cfg.independent_size = 2 * cfg.clique_size + 1;
    cfg.density = 0.1 * static_cast<double>(rng.below(9));
    cfg.seed = rng.below(std::uint64_t{1} << 40);
    try {
        return gen_split(cfg);
    } catch (const BudgetError&) {
        return std::nullopt;
    }
}

Verdict oracle_equivalence()
{
    Verdict v;
    const auto start = Clock::now();
    Rng rng(1001);
    std::size_t count = 0, by_level[4] = {0, 0, 0, 0}, general_r = 0;
    auto check = [&](const SteinerInstance& inst) {
        const auto out = solve(inst);
        const auto best = brute_force_steiner(inst, Universe::AllVertices);
        ++count;
        if (out.result.steiner_set.size() != best.min_size)
            v.fail("size " + std::to_string(out.result.steiner_set.size()) + " vs oracle " +
                   std::to_string(best.min_size) + "\n" + to_sstp(inst));
        else if (!verify_solution(inst, out.result.steiner_set))
            v.fail("infeasible output\n" + to_sstp(inst));
    };
    while (count < 600) {
        const auto level = static_cast<unsigned>(rng.between(1, 3));
        std::optional<SteinerInstance> inst;
        if (rng.chance(0.7)) {
            inst = small_generated(rng, 14, level);
        } else {
            const auto a = rng.between(1, 7);
            const auto g = random_split_graph(a, rng.between(0, 14 - a), 0.15 + 0.1 * static_cast<double>(rng.below(6)), rng);
            const auto sp = canonical(g);
            if (sp.delta_i() == 0 || find_induced_star(sp, 4))
                continue;
            inst = SteinerInstance(g, sp.independent());
        }
        if (!inst)
            continue;
        const auto delta = canonical(inst->graph()).delta_i();
        ++by_level[delta];
        if (rng.chance(0.5)) {
            check(*inst);
        } else {
            ++general_r;
            check(SteinerInstance(inst->graph(), random_subset(inst->graph().vertex_count(), 0.1 + 0.1 * static_cast<double>(rng.below(6)), rng)));
        }
    }
    const auto secs = seconds_since(start);
    if (secs >= 60.0)
        v.fail("took " + fmt(secs) + " s");
    if (by_level[1] == 0 || by_level[2] == 0 || by_level[3] == 0)
        v.fail("missing a Delta^I level in the corpus");
    if (v.pass)
        v.detail = std::to_string(count) + " instances (Delta^I 1/2/3: " + std::to_string(by_level[1]) + "/" +
                   std::to_string(by_level[2]) + "/" + std::to_string(by_level[3]) + ", general R: " +
                   std::to_string(general_r) + ") in " + fmt(secs) + " s";
    return v;
}

Verdict claw_free_suite()
{
    Verdict v;
    std::size_t count = 0, delta2 = 0;
    auto check = [&](const SteinerInstance& inst) {
        const auto pi = prune(inst, canonical(inst.graph()));
        const auto best = brute_force_steiner(inst, Universe::AllVertices).min_size;
        const auto out = solve(inst);
        ++count;
        if (out.result.steiner_set.size() != best)
            v.fail("solve differs from the oracle\n" + to_sstp(inst));
        if (out.trace.regime != Regime::Empty && out.trace.regime != Regime::OneSplit &&
            out.trace.regime != Regime::ClawFree)
            v.fail("claw-free instance left the claw-free family\n" + to_sstp(inst));
        if (!pi.terminals.empty() && solve_claw_free(pi).size() != best)
            v.fail("claw-free path differs from the oracle\n" + to_sstp(inst));
    };
    auto degree_cap = [&](const SplitPartition& sp) {
        if (sp.delta_i() == 2) {
            ++delta2;
            if (sp.independent().size() > 3)
                v.fail("claw-free with Delta^I = 2 and |I| > 3");
        }
    };

    Rng rng(2002);
    for_each_split_graph(8, [&](const Graph& g, std::size_t, const std::vector<std::uint32_t>&) {
        if (!is_connected(g) || has_induced_star_bruteforce(g, 3))
            return;
        const auto sp = canonical(g);
        degree_cap(sp);
        check(SteinerInstance(g, sp.independent()));
        check(SteinerInstance(g, random_subset(g.vertex_count(), 0.4, rng)));
    });
    const auto exhaustive = count;
    for (int round = 0; round < 300; ++round) {
        const auto inst = small_generated(rng, 16, rng.chance(0.7) ? 1 : 2);
        if (!inst || has_induced_star_bruteforce(inst->graph(), 3))
            continue;
        degree_cap(canonical(inst->graph()));
        check(*inst);
        check(SteinerInstance(inst->graph(), random_subset(inst->graph().vertex_count(), 0.3, rng)));
    }
    if (count < 200)
        v.fail("only " + std::to_string(count) + " instances");
    if (v.pass)
        v.detail = std::to_string(count) + " instances (" + std::to_string(exhaustive) + " exhaustive), " +
                   std::to_string(delta2) + " with Delta^I = 2 all have |I| <= 3";
    return v;
}

Verdict structural_equivalences()
{
    Verdict v;
    std::size_t graphs = 0, three = 0;
    auto check = [&](const Graph& g) {
        const auto sp = canonical(g);
        ++graphs;
        const bool claw = has_induced_star_bruteforce(g, 3);
        if (check_claw_free_characterization(sp) == claw)
            v.fail("claw characterization disagrees");
        if (find_induced_star(sp, 3).has_value() != claw)
            v.fail("claw search disagrees");
        const bool k14 = has_induced_star_bruteforce(g, 4);
        if (find_induced_star(sp, 4).has_value() != k14)
            v.fail("K_{1,4} search disagrees");
        if (sp.delta_i() == 3) {
            ++three;
            if (check_k14_free_3split(sp) == k14)
                v.fail("K_{1,4} condition disagrees");
        }
    };
    for_each_split_graph(9, [&](const Graph& g, std::size_t, const std::vector<std::uint32_t>&) {
        if (is_connected(g))
            check(g);
    });
    const auto exhaustive = graphs;
    Rng rng(3003);
    for (int i = 0; i < 1000; ++i) {
        const auto a = rng.between(2, 8);
        check(random_split_graph(a, rng.between(1, 16 - a), 0.1 * static_cast<double>(rng.between(1, 6)), rng));
    }
    if (v.pass)
        v.detail = std::to_string(exhaustive) + " exhaustive + 1000 random split graphs, " + std::to_string(three) +
                   " with Delta^I = 3";
    return v;
}

Verdict bound_and_tightness()
{
    Verdict v;
    Rng rng(4004);
    std::size_t solved = 0, hit[3] = {0, 0, 0};
    for (int round = 0; round < 3000; ++round) {
        GeneratorConfig cfg;
        cfg.level = 3;
        cfg.k14_free = true;
        cfg.clique_size = rng.between(2, 10);
        cfg.independent_size = rng.between(3, 2 * cfg.clique_size + 1);
        cfg.density = 0.1 * static_cast<double>(rng.below(11));
        cfg.seed = rng.below(std::uint64_t{1} << 40);
        SteinerInstance inst;
        try {
            inst = gen_split(cfg);
        } catch (const BudgetError&) {
            continue;
        }
        const auto pi = prune(inst, canonical(inst.graph()));
        const auto out = solve(inst);
        if (out.trace.regime != Regime::ThreeSplit)
            continue;
        ++solved;
        const auto i1 = pi.terminals.size();
        const auto s = out.result.steiner_set.size();
        if (s + 4 < i1 || s + 2 > i1) {
            v.fail("|S| = " + std::to_string(s) + " outside the bound for |I| = " + std::to_string(i1));
            continue;
        }
        const auto gap = i1 - s;
        ++hit[gap - 2];
        const auto alpha = out.trace.alpha_m.value_or(0);
        const auto alpha2 = out.trace.alpha_m2.value_or(0);
        if ((gap == 4) != (alpha == 2))
            v.fail("|S| = |I| - 4 without alpha(M) = 2 or the converse");
        if ((gap == 3) != (alpha == 1 || (alpha == 0 && alpha2 >= 3)))
            v.fail("|S| = |I| - 3 outside its two cases or the converse");
        if (brute_force_steiner(inst, Universe::CliqueOnly).min_size != s)
            v.fail("oracle disagrees\n" + to_sstp(inst));
    }
    for (std::size_t g = 0; g < 3; ++g)
        if (hit[g] == 0)
            v.fail("no instance with |S| = |I| - " + std::to_string(g + 2));
    if (v.pass)
        v.detail = std::to_string(solved) + " 3-split instances; |I|-2/-3/-4 reached " + std::to_string(hit[0]) + "/" +
                   std::to_string(hit[1]) + "/" + std::to_string(hit[2]) + " times, all oracle-checked";
    return v;
}

Verdict matching_cap()
{
    Verdict v;
    Rng rng(5005);
    std::size_t graphs = 0, pairs = 0, max_alpha = 0;
    while (graphs < 200) {
        GeneratorConfig cfg;
        cfg.level = 3;
        cfg.k14_free = true;
        cfg.clique_size = rng.between(2, 40);
        cfg.independent_size = rng.between(3, 2 * cfg.clique_size + 1);
        cfg.density = 0.1 * static_cast<double>(rng.below(11));
        cfg.seed = rng.below(std::uint64_t{1} << 40);
        SteinerInstance inst;
        try {
            inst = gen_split(cfg);
        } catch (const BudgetError&) {
            continue;
        }
        ++graphs;
        const auto sp = canonical(inst.graph());
        const auto all = set_union(sp.clique(), sp.independent());
        for (VertexId x : sp.v3()) {
            const auto nx = sp.cross_neighbors(x);
            const auto rest = sp.restricted(set_difference(all, VertexSet(nx.begin(), nx.end())));
            const auto alpha = maximum_matching(build_labeled_graph(rest).to_graph()).size();
            ++pairs;
            max_alpha = std::max(max_alpha, alpha);
            if (alpha > 2)
                v.fail("alpha = " + std::to_string(alpha) + " after removing N^I(" + std::to_string(x) + ")\n" +
                       to_sstp(inst));
        }
    }
    std::size_t matchings = 0;
    for (int i = 0; i < 2000; ++i) {
        const auto g = random_graph(rng.between(1, 12), 0.05 + 0.01 * static_cast<double>(rng.below(60)), rng);
        ++matchings;
        if (maximum_matching(g).size() != max_matching_bruteforce(g))
            v.fail("matching differs from brute force");
    }
    if (v.pass)
        v.detail = std::to_string(graphs) + " graphs, " + std::to_string(pairs) + " V_3 vertices, max alpha " +
                   std::to_string(max_alpha) + "; matching = brute force on " + std::to_string(matchings) +
                   " graphs";
    return v;
}

Verdict reduction_dichotomy()
{
    Verdict v;
    Rng rng(6006);
    std::size_t yes = 0, no = 0;
    for (int i = 0; i < 100; ++i) {
        const std::size_t q = rng.between(1, 4);
        const bool plant = rng.chance(0.5);
        const std::size_t hi = q == 1 ? 1 : 8, lo = std::min(hi, plant ? q : (3 * q + 1) / 2);
        const auto x = gen_x3c(q, rng.between(lo, hi), plant, rng.below(std::uint64_t{1} << 40));
        const auto t = x.triples().size();
        const auto r = reduce_x3c(x);
        const auto& g = r.instance.graph();
        if (g.vertex_count() != 3 * q + t || g.edge_count() != t * (t - 1) / 2 + 3 * t)
            v.fail("size formula broken");
        if (find_induced_star(canonical(g), 5) || has_induced_star_bruteforce(g, 5))
            v.fail("reduced graph contains a K_{1,5}");
        const bool cover = solve_x3c_bruteforce(x).has_value();
        if (cover != (brute_force_steiner(r.instance, Universe::AllVertices).min_size == q))
            v.fail("dichotomy broken\n" + to_x3c_text(x));
        (cover ? yes : no)++;
    }
    if (v.pass)
        v.detail = "100 X3C instances (" + std::to_string(yes) + " solvable, " + std::to_string(no) + " not)";
    return v;
}

Verdict performance()
{
    Verdict v;
    std::string detail;
    auto timed = [&](const GeneratorConfig& cfg, double limit, const char* label) {
        const auto inst = gen_split(cfg);
        const auto start = Clock::now();
        const auto out = solve(inst);
        const auto secs = seconds_since(start);
        const auto n = inst.graph().vertex_count();
        if (!verify_solution(inst, out.result.steiner_set))
            v.fail(std::string(label) + ": infeasible");
        if (secs >= limit)
            v.fail(std::string(label) + ": " + fmt(secs) + " s");
        detail += std::string(detail.empty() ? "" : "; ") + label + " |V| = " + std::to_string(n) + ", |S| = " +
                  std::to_string(out.result.steiner_set.size()) + ", regime " +
                  std::string(to_string(out.trace.regime)) + ", " + fmt(secs) + " s";
    };

    GeneratorConfig three;
    three.level = 3;
    three.k14_free = true;
    three.clique_size = 2500;
    three.independent_size = 2500;
    three.seed = 7;
    timed(three, 30.0, "3-split");

    GeneratorConfig two;
    two.level = 2;
    two.clique_size = 16667;
    two.independent_size = 33333;
    two.density = 0.5;
    two.seed = 7;
    timed(two, 10.0, "2-split");
    if (v.pass)
        v.detail = detail;
    return v;
}

struct Run {
    int code;
    std::string out;
};

Run cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "splitsteiner");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str()};
}

Verdict determinism()
{
    Verdict v;
    const auto dir = fs::temp_directory_path() / "splitsteiner-acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::size_t files = 0;
    for (unsigned level = 1; level <= 3; ++level)
        for (int seed = 0; seed < 6; ++seed) {
            std::vector<std::string> args{"gen",   "--level", std::to_string(level),        "--clique", "12",
                                          "--indep", std::to_string(level == 3 ? 13 : 8 * level), "--seed", std::to_string(seed)};
            if (level == 3)
                args.push_back("--k14-free");
            const auto a = cli(args), b = cli(args);
            if (a.code != 0 || a.out != b.out)
                v.fail("gen output differs for level " + std::to_string(level) + " seed " + std::to_string(seed));
            const auto file = dir / ("g" + std::to_string(level) + "_" + std::to_string(seed) + ".sstp");
            std::ofstream(file, std::ios::binary) << a.out;
            ++files;
            const auto s1 = cli({"solve", "-i", file.string(), "--json"});
            const auto s2 = cli({"solve", "-i", file.string(), "--json"});
            if (s1.code != 0 || s1.out != s2.out)
                v.fail("solve JSON differs for " + file.filename().string());
        }
    const auto x = cli({"gen-x3c", "--q", "2", "--triples", "4", "--seed", "3", "--plant"});
    std::ofstream(dir / "x.x3c", std::ios::binary) << x.out;
    const auto reduced = cli({"reduce-x3c", "-i", (dir / "x.x3c").string()});
    std::ofstream(dir / "x.sstp", std::ios::binary) << reduced.out;
    ++files;

    const auto serial = cli({"bench", "--dir", dir.string(), "--no-timing"});
    const auto parallel = cli({"bench", "--dir", dir.string(), "--no-timing", "--jobs", "4"});
    const auto again = cli({"bench", "--dir", dir.string(), "--no-timing", "--jobs", "4", "--exact-fallback"});
    const auto again2 = cli({"bench", "--dir", dir.string(), "--no-timing", "--jobs", "3", "--exact-fallback"});
    if (serial.code != 0 || serial.out != parallel.out)
        v.fail("bench report depends on --jobs");
    if (again.out != again2.out)
        v.fail("bench report with fallback depends on --jobs");
    fs::remove_all(dir);
    if (v.pass)
        v.detail = std::to_string(files) + " files; gen, solve --json and bench (jobs 1/3/4) byte-identical";
    return v;
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
        {"1 oracle equivalence", oracle_equivalence},
        {"2 claw-free suite", claw_free_suite},
        {"3 structural equivalences", structural_equivalences},
        {"4 bound and tightness", bound_and_tightness},
        {"5 matching cap", matching_cap},
        {"6 reduction dichotomy", reduction_dichotomy},
        {"7 performance", performance},
        {"8 determinism", determinism},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Verdict v;
        const auto start = Clock::now();
        try {
            v = run();
        } catch (const std::exception& e) {
            v.fail(std::string("exception: ") + e.what());
        }
        failed += !v.pass;
        std::cout << (v.pass ? "PASS " : "FAIL ") << name << ": " << v.detail << " [" << fmt(seconds_since(start))
                  << " s]" << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
