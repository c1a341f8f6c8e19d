#include "fixtures.hpp"
#include "oracles.hpp"

#include "splitsteiner/oracle.hpp"
#include "splitsteiner/reductions.hpp"
#include "splitsteiner/solver.hpp"

#include <doctest.h>

#include <algorithm>

using namespace splitsteiner;
using namespace testsupport;

namespace {

SplitPartition canonical(const Graph& g)
{
    return std::get<SplitPartition>(split_partition(g));
}

PrunedInstance pruned(const Graph& g, VertexSet terminals)
{
    const SteinerInstance inst(g, std::move(terminals));
    return prune(inst, canonical(inst.graph()));
}

} // namespace

TEST_CASE("prune on P3 with R = {a, c}")
{
    const SteinerInstance inst(path3(), VertexSet{0, 2});
    const auto pi = prune(inst, canonical(inst.graph()));
    CHECK(pi.removed_s1.empty());
    CHECK(pi.removed_s2 == VertexSet{1});
    // a leaves with S3; c then sees the whole remaining clique {b}, is
    // promoted and leaves too, which strands b.
    CHECK(pi.removed_s3 == VertexSet{0, 2});
    CHECK(pi.promoted == VertexSet{2});
    CHECK(pi.clique_terminal_anchor == VertexId{0});
    CHECK(pi.promotion_anchor == VertexId{1});
    CHECK(pi.reduced.clique().empty());
    CHECK(pi.terminals.empty());

    const auto out = solve(inst);
    CHECK(out.result.steiner_set == VertexSet{1});
    const std::vector<Edge> tree{{0, 1}, {1, 2}};
    CHECK(out.result.tree_edges == tree);
    CHECK(brute_force_steiner(inst, Universe::AllVertices).witness == VertexSet{1});
}

TEST_CASE("prune removes everything when clique terminals serve all of I")
{
    using namespace seven;
    const auto g = seven::graph();
    const auto pi = pruned(g, VertexSet{u, v, w, a, b, c, d});
    CHECK(pi.reduced.clique().empty());
    CHECK(pi.reduced.independent().empty());
    CHECK(pi.removed_s3 == VertexSet{u, v, w, a, b, c, d});

    const auto out = solve(SteinerInstance(g, VertexSet{u, v, w, a, b, c, d}));
    CHECK(out.result.steiner_set.empty());
    CHECK(out.trace.regime == Regime::Empty);
    CHECK(out.result.tree_edges.size() == 6);
}

TEST_CASE("prune applies S1 before S2")
{
    // Clique 0,1,2; x = 3 hangs off 0 only; terminals 4 ~ {1}, 5 ~ {2}.
    const auto g = make_graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}});
    const auto pi = pruned(g, VertexSet{4, 5});
    CHECK(pi.removed_s1 == VertexSet{3});
    CHECK(pi.removed_s2 == VertexSet{0});
    CHECK(pi.reduced.clique() == VertexSet{1, 2});
    CHECK(pi.terminals == VertexSet{4, 5});
}

TEST_CASE("claw-free path")
{
    // Delta^I = 1 with four terminals.
    const auto g1 = make_graph(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
                                   {0, 5}, {1, 6}, {2, 7}, {3, 8}});
    const auto pi1 = pruned(g1, VertexSet{5, 6, 7, 8});
    CHECK(pi1.terminals.size() == 4);
    CHECK(solve_claw_free(pi1).size() == 4);

    // Delta^I = 2, I = {a, b}, x ~ {a, b}.
    enum : unsigned { x, y, z, a, b, c };
    const auto g2 = make_graph(5, {{x, y}, {x, z}, {y, z}, {x, a}, {x, b}, {y, a}, {z, b}});
    const auto pi2 = pruned(g2, VertexSet{a, b});
    REQUIRE(check_claw_free_characterization(pi2.reduced));
    CHECK(solve_claw_free(pi2) == VertexSet{x});

    const auto g3 =
        make_graph(6, {{x, y}, {x, z}, {y, z}, {x, a}, {x, b}, {y, b}, {y, c}, {z, a}, {z, c}});
    const auto pi3 = pruned(g3, VertexSet{a, b, c});
    REQUIRE(check_claw_free_characterization(pi3.reduced));
    CHECK(solve_claw_free(pi3).size() == 2);
    CHECK(solve(SteinerInstance(g3, VertexSet{a, b, c})).trace.regime == Regime::ClawFree);

    const auto pairs = make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
    CHECK_THROWS_AS(solve_claw_free(pruned(pairs, VertexSet{2, 3, 4, 5})), PreconditionError);
}

TEST_CASE("1-split path")
{
    PrunedInstance single;
    single.reduced = SplitPartition(path3(), VertexSet{0, 1});
    CHECK(solve_1split(single) == VertexSet{1});

    // Six clique vertices, five of them with one pendant terminal.
    std::vector<Edge> edges;
    for (VertexId p = 0; p < 6; ++p)
        for (VertexId q = p + 1; q < 6; ++q)
            edges.push_back({p, q});
    for (VertexId p = 0; p < 5; ++p)
        edges.push_back({p, 6 + p});
    const auto g = Graph::from_edges(11, edges);
    const auto pi = pruned(g, VertexSet{6, 7, 8, 9, 10});
    CHECK(solve_1split(pi).size() == 5);
    const auto pairs = make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
    CHECK_THROWS_AS(solve_1split(pruned(pairs, VertexSet{2, 3, 4, 5})), PreconditionError);
}

TEST_CASE("2-split path")
{
    using namespace six;
    const SteinerInstance tri(six::graph(), VertexSet{a, b, c});
    PrunedInstance host;
    host.reduced = canonical(tri.graph());
    host.terminals = host.reduced.independent();
    const auto two = solve_2split(host);
    CHECK(two.alpha_m == 1);
    CHECK(two.steiner_set == VertexSet{u, v});
    CHECK(brute_force_steiner(tri, Universe::AllVertices).min_size == 2);

    // Through the pipeline w is dropped and b then sees the whole clique.
    const auto pi = prune(tri, canonical(tri.graph()));
    CHECK(pi.removed_s2 == VertexSet{w});
    CHECK(pi.promoted == VertexSet{b});
    const auto via = solve(tri);
    CHECK(via.trace.regime == Regime::OneSplit);
    CHECK(via.result.steiner_set == VertexSet{u, v});

    // u ~ {a, b}, v ~ {c, d}.
    const auto pairs = make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
    const SteinerInstance pi_pairs(pairs, VertexSet{2, 3, 4, 5});
    const auto out = solve(pi_pairs);
    CHECK(out.trace.regime == Regime::TwoSplit);
    CHECK(out.trace.alpha_m == std::size_t{2});
    CHECK(out.result.steiner_set == VertexSet{0, 1});
    CHECK(brute_force_steiner(pi_pairs, Universe::AllVertices).min_size == 2);

    CHECK_THROWS_AS(solve_2split(pruned(seven::graph(), VertexSet{3, 4, 5, 6})), PreconditionError);
}

TEST_CASE("3-split path on the seven-vertex example")
{
    using namespace seven;
    const SteinerInstance inst(seven::graph(), VertexSet{a, b, c, d});
    const auto pi = prune(inst, canonical(inst.graph()));
    const auto three = solve_3split(pi);
    CHECK(three.chosen_v3 == u);
    CHECK(three.alpha_m == 0);
    REQUIRE(three.alpha_m2);
    CHECK(*three.alpha_m2 < 3);
    CHECK(three.steiner_set == VertexSet{u, v});
    CHECK(brute_force_steiner(inst, Universe::AllVertices).min_size == 2);

    const auto out = solve(inst);
    CHECK(out.trace.regime == Regime::ThreeSplit);
    CHECK(out.trace.chosen_v3_vertex == u);
    CHECK(out.result.optimal);
}

TEST_CASE("solve handles degenerate terminal sets")
{
    const auto none = solve(SteinerInstance(path3(), VertexSet{}));
    CHECK(none.result.steiner_set.empty());
    CHECK(none.result.tree_edges.empty());

    const auto one = solve(SteinerInstance(path3(), VertexSet{2}));
    CHECK(one.result.steiner_set.empty());
    CHECK(one.result.tree_edges.empty());

    const auto all = solve(SteinerInstance(path3(), VertexSet{0, 1, 2}));
    CHECK(all.result.steiner_set.empty());
    const std::vector<Edge> tree{{0, 1}, {1, 2}};
    CHECK(all.result.tree_edges == tree);
}

TEST_CASE("solve rejects non-split and hard inputs")
{
    const auto c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK_THROWS_AS(solve(SteinerInstance(c4, VertexSet{0, 2})), NotSplitError);

    const auto reduced = reduce_x3c(X3CInstance(6, {{1, 2, 3}, {4, 5, 6}, {1, 4, 5}}));
    const auto expected = find_induced_star(canonical(reduced.instance.graph()), 4);
    REQUIRE(expected);
    try {
        solve(reduced.instance);
        FAIL("expected HardInstanceError");
    } catch (const HardInstanceError& e) {
        CHECK(e.witness().center == expected->center);
        CHECK(e.witness().leaves == expected->leaves);
    }

    SolveOptions fallback;
    fallback.exact_fallback = true;
    const auto out = solve(reduced.instance, fallback);
    CHECK(out.trace.regime == Regime::ExactFallback);
    CHECK(out.result.steiner_set.size() == 2);
    CHECK(out.result.optimal);

    fallback.fallback_budget = 2;
    CHECK_THROWS_AS(solve(reduced.instance, fallback), HardInstanceError);
}

TEST_CASE("solve matches the reference minimum on small random instances")
{
    Rng rng(77);
    int solved = 0;
    for (int round = 0; round < 400; ++round) {
        GeneratorConfig cfg;
        cfg.level = static_cast<unsigned>(rng.between(1, 3));
        cfg.clique_size = rng.between(2, 5);
        cfg.independent_size = rng.between(cfg.level, std::min<std::size_t>(cfg.level * cfg.clique_size, 7));
        cfg.k14_free = true;
        cfg.seed = rng.below(1u << 30);
        cfg.density = 0.1 * static_cast<double>(rng.below(8));
        if (cfg.level == 3 && cfg.independent_size > 2 * cfg.clique_size + 1)
            continue;
        SteinerInstance inst;
        try {
            inst = gen_split(cfg);
        } catch (const BudgetError&) {
            continue;
        }
        VertexSet terminals = inst.terminals();
        if (rng.chance(0.5)) {
            terminals.clear();
            for (VertexId v = 0; v < inst.graph().vertex_count(); ++v)
                if (rng.chance(0.4))
                    terminals.push_back(v);
        }
        const SteinerInstance general(inst.graph(), terminals);
        const auto out = solve(general);
        ++solved;
        REQUIRE(verify_solution(general, out.result.steiner_set));
        REQUIRE(is_spanning_tree(general.graph(), set_union(out.result.steiner_set, terminals), out.result.tree_edges));
        REQUIRE(out.result.steiner_set.size() == steiner_minimum_reference(general));
        const auto again = solve(general);
        REQUIRE(again.result.steiner_set == out.result.steiner_set);
        REQUIRE(again.result.tree_edges == out.result.tree_edges);
    }
    CHECK(solved > 300);
}

TEST_CASE("pruning keeps the optimum")
{
    // Reduced problem: fewest clique vertices of the reduced graph seeing
    // every remaining terminal, plus one anchor when only promoted terminals
    // are left to serve.
    auto reduced_minimum = [](const PrunedInstance& pi) {
        const auto& c = pi.reduced.clique();
        std::size_t best = c.size() + 1;
        for (std::uint32_t mask = 0; mask < (1u << c.size()); ++mask) {
            VertexSet pick;
            for (std::size_t i = 0; i < c.size(); ++i)
                if (mask >> i & 1)
                    pick.push_back(c[i]);
            const bool covers = std::all_of(pi.terminals.begin(), pi.terminals.end(), [&](VertexId t) {
                const auto nb = pi.reduced.cross_neighbors(t);
                return std::any_of(nb.begin(), nb.end(), [&](VertexId x) { return contains(pick, x); });
            });
            if (covers)
                best = std::min(best, pick.size());
        }
        return best + (pi.promotion_anchor ? 1 : 0);
    };
    Rng rng(12);
    for (int round = 0; round < 500; ++round) {
        const auto g = random_split_graph(rng.between(1, 6), rng.between(0, 6), 0.4, rng);
        VertexSet terminals;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (rng.chance(0.5))
                terminals.push_back(v);
        const SteinerInstance inst(g, terminals);
        const auto pi = prune(inst, canonical(g));
        REQUIRE(pi.reduced.validate(g).empty());
        REQUIRE(reduced_minimum(pi) == steiner_minimum_reference(inst));
    }
}

TEST_CASE("regime names")
{
    CHECK(to_string(Regime::Empty) == "empty");
    CHECK(to_string(Regime::OneSplit) == "1-split");
    CHECK(to_string(Regime::TwoSplit) == "2-split");
    CHECK(to_string(Regime::ThreeSplit) == "3-split");
    CHECK(to_string(Regime::ClawFree) == "claw-free");
    CHECK(to_string(Regime::ExactFallback) == "exact-fallback");
}
