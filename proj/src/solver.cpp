#include "splitsteiner/solver.hpp"

#include "splitsteiner/matching.hpp"
#include "splitsteiner/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace splitsteiner {

namespace {

std::string describe(const Obstruction& o)
{
    std::ostringstream s;
    s << "graph is not split: induced " << to_string(o.kind) << " on";
    for (VertexId v : o.vertices)
        s << ' ' << v;
    return s.str();
}

std::string describe(const StarWitness& w)
{
    std::ostringstream s;
    s << "graph contains an induced K_{1," << w.leaves.size() << "} centered at " << w.center << " with leaves";
    for (VertexId v : w.leaves)
        s << ' ' << v;
    return s.str();
}

VertexSet present_vertices(const SplitPartition& sp)
{
    return set_union(sp.clique(), sp.independent());
}

// Labels of a maximum matching of the labeled graph of `sp`.
VertexSet matched_labels(const SplitPartition& sp, std::size_t& alpha)
{
    const auto m = build_labeled_graph(sp);
    const auto matching = maximum_matching(m.to_graph());
    std::vector<LabeledEdge> chosen;
    chosen.reserve(matching.size());
    for (const auto& e : matching.edges)
        chosen.push_back(*m.find(m.host(e.u), m.host(e.v)));
    alpha = matching.size();
    return corresponding_vertex_set(m, chosen);
}

// S1 plus one clique neighbor for every terminal S1 leaves unserved.
VertexSet complete_cover(const SplitPartition& sp, const VertexSet& s1)
{
    const auto served = independent_neighborhood(sp, s1);
    const auto rest = set_difference(sp.independent(), served);
    return set_union(s1, corresponding_clique_set(sp, rest));
}

} // namespace

NotSplitError::NotSplitError(Obstruction obstruction)
    : Error(describe(obstruction)), obstruction_(std::move(obstruction))
{
}

HardInstanceError::HardInstanceError(StarWitness witness) : Error(describe(witness)), witness_(std::move(witness)) {}

std::string_view to_string(Regime regime)
{
    switch (regime) {
    case Regime::Empty: return "empty";
    case Regime::OneSplit: return "1-split";
    case Regime::TwoSplit: return "2-split";
    case Regime::ThreeSplit: return "3-split";
    case Regime::ClawFree: return "claw-free";
    case Regime::ExactFallback: return "exact-fallback";
    }
    return "?";
}

PrunedInstance prune(const SteinerInstance& inst, const SplitPartition& sp)
{
    const auto& g = inst.graph();
    const auto n = g.vertex_count();
    std::vector<unsigned char> terminal(n, 0), removed(n, 0);
    for (VertexId r : inst.terminals())
        terminal[r] = 1;

    PrunedInstance pi;
    for (VertexId i : sp.independent())
        if (!terminal[i]) {
            pi.removed_s1.push_back(i);
            removed[i] = 1;
        }
    for (VertexId c : sp.clique()) {
        if (terminal[c])
            continue;
        const auto nb = sp.cross_neighbors(c);
        if (std::none_of(nb.begin(), nb.end(), [&](VertexId i) { return terminal[i]; })) {
            pi.removed_s2.push_back(c);
            removed[c] = 1;
        }
    }
    for (VertexId c : sp.clique()) {
        if (!terminal[c])
            continue;
        if (!pi.clique_terminal_anchor)
            pi.clique_terminal_anchor = c;
        pi.removed_s3.push_back(c);
        removed[c] = 1;
        for (VertexId i : sp.cross_neighbors(c))
            if (!removed[i]) {
                pi.removed_s3.push_back(i);
                removed[i] = 1;
            }
    }

    VertexSet keep;
    for (VertexId v = 0; v < n; ++v)
        if (!removed[v])
            keep.push_back(v);
    pi.reduced = sp.restricted(keep);

    // Restore maximality: a terminal adjacent to the whole remaining clique
    // joins it and leaves again with S3; clique vertices that no longer see a
    // terminal leave with S2.
    std::optional<VertexId> anchor;
    for (;;) {
        VertexSet drop;
        for (VertexId c : pi.reduced.clique())
            if (pi.reduced.independent_degree(c) == 0)
                drop.push_back(c);
        std::optional<VertexId> promote;
        if (drop.empty() && !pi.reduced.clique().empty())
            for (VertexId i : pi.reduced.independent())
                if (pi.reduced.cross_neighbors(i).size() == pi.reduced.clique().size()) {
                    promote = i;
                    break;
                }
        if (drop.empty() && !promote)
            break;
        if (promote) {
            anchor = pi.reduced.clique().front();
            pi.promoted.push_back(*promote);
            pi.removed_s3.push_back(*promote);
            drop.push_back(*promote);
        } else {
            pi.removed_s2.insert(pi.removed_s2.end(), drop.begin(), drop.end());
        }
        pi.reduced = pi.reduced.restricted(set_difference(present_vertices(pi.reduced), drop));
    }

    normalize(pi.removed_s2);
    normalize(pi.removed_s3);
    pi.terminals = pi.reduced.independent();
    if (pi.terminals.empty() && !pi.promoted.empty() && inst.terminals().size() >= 2)
        pi.promotion_anchor = anchor;
    return pi;
}

VertexSet solve_claw_free(const PrunedInstance& pi)
{
    const auto& sp = pi.reduced;
    if (!check_claw_free_characterization(sp))
        throw PreconditionError("reduced instance is not claw-free");
    if (sp.delta_i() <= 1)
        return corresponding_clique_set(sp, sp.independent());
    if (sp.independent().size() > 3)
        throw PreconditionError("claw-free reduced instance with Delta^I = 2 has more than three terminals");
    VertexId x = 0;
    for (VertexId c : sp.clique())
        if (sp.independent_degree(c) == 2) {
            x = c;
            break;
        }
    return complete_cover(sp, {x});
}

VertexSet solve_1split(const PrunedInstance& pi)
{
    if (pi.reduced.delta_i() != 1)
        throw PreconditionError("solve_1split needs Delta^I = 1, got " + std::to_string(pi.reduced.delta_i()));
    return corresponding_clique_set(pi.reduced, pi.reduced.independent());
}

TwoSplitSolution solve_2split(const PrunedInstance& pi)
{
    if (pi.reduced.delta_i() != 2)
        throw PreconditionError("solve_2split needs Delta^I = 2, got " + std::to_string(pi.reduced.delta_i()));
    TwoSplitSolution out;
    const auto s1 = matched_labels(pi.reduced, out.alpha_m);
    out.steiner_set = complete_cover(pi.reduced, s1);
    return out;
}

ThreeSplitSolution solve_3split(const PrunedInstance& pi)
{
    const auto& sp = pi.reduced;
    if (sp.delta_i() != 3)
        throw PreconditionError("solve_3split needs Delta^I = 3, got " + std::to_string(sp.delta_i()));
    if (!check_k14_free_3split(sp))
        throw PreconditionError("reduced 3-split instance contains an induced K_{1,4}");

    const auto all = present_vertices(sp);
    ThreeSplitSolution out;
    out.chosen_v3 = sp.v3().front();
    VertexSet best_labels;
    bool have_best = false;
    for (VertexId v : sp.v3()) {
        const auto nb = sp.cross_neighbors(v);
        const auto g2 = sp.restricted(set_difference(all, VertexSet(nb.begin(), nb.end())));
        std::size_t alpha = 0;
        auto labels = matched_labels(g2, alpha);
        if (!have_best || alpha > out.alpha_m) {
            have_best = true;
            out.alpha_m = alpha;
            out.chosen_v3 = v;
            best_labels = std::move(labels);
        }
    }

    VertexSet s1;
    if (out.alpha_m < 1) {
        const auto h2 = sp.restricted(set_difference(all, sp.v3()));
        std::size_t alpha2 = 0;
        auto labels = matched_labels(h2, alpha2);
        out.alpha_m2 = alpha2;
        if (alpha2 >= 3)
            s1 = std::move(labels);
        else
            s1 = {sp.v3().front()};
    } else {
        s1 = set_union(VertexSet{out.chosen_v3}, best_labels);
    }
    out.steiner_set = complete_cover(sp, s1);
    return out;
}

SolveOutcome solve(const SteinerInstance& inst, const SolveOptions& options)
{
    const auto& g = inst.graph();
    auto parsed = split_partition(g);
    if (auto* ns = std::get_if<NotSplit>(&parsed))
        throw NotSplitError(ns->obstruction);
    const auto& sp = std::get<SplitPartition>(parsed);

    SolveOutcome out;
    out.result.optimal = true;
    const auto& terminals = inst.terminals();
    if (terminals.size() <= 1) {
        out.result.tree_edges = bfs_tree(g, terminals);
        return out;
    }

    if (auto star = find_induced_star(sp, 4)) {
        const auto free_clique = set_difference(sp.clique(), terminals);
        if (!options.exact_fallback || free_clique.size() > options.fallback_budget)
            throw HardInstanceError(*star);
        const auto oracle = brute_force_steiner(inst, Universe::CliqueOnly);
        out.trace.regime = Regime::ExactFallback;
        out.result.steiner_set = oracle.witness;
        out.result.tree_edges = bfs_tree(g, set_union(oracle.witness, terminals));
        return out;
    }

    const auto pi = prune(inst, sp);
    const auto& reduced = pi.reduced;
    VertexSet s;
    if (reduced.independent().empty()) {
        out.trace.regime = Regime::Empty;
        if (pi.promotion_anchor)
            s = {*pi.promotion_anchor};
    } else if (reduced.delta_i() == 1) {
        out.trace.regime = Regime::OneSplit;
        s = solve_1split(pi);
    } else if (reduced.delta_i() == 2 && check_claw_free_characterization(reduced)) {
        out.trace.regime = Regime::ClawFree;
        s = solve_claw_free(pi);
    } else if (reduced.delta_i() == 2) {
        out.trace.regime = Regime::TwoSplit;
        auto two = solve_2split(pi);
        out.trace.alpha_m = two.alpha_m;
        s = std::move(two.steiner_set);
    } else {
        out.trace.regime = Regime::ThreeSplit;
        auto three = solve_3split(pi);
        out.trace.alpha_m = three.alpha_m;
        out.trace.alpha_m2 = three.alpha_m2;
        out.trace.chosen_v3_vertex = three.chosen_v3;
        s = std::move(three.steiner_set);
    }

    out.result.steiner_set = s;
    out.result.tree_edges = bfs_tree(g, set_union(s, terminals));
    return out;
}

} // namespace splitsteiner
