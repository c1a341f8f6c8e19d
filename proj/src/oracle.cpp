#include "splitsteiner/oracle.hpp"

#include "splitsteiner/errors.hpp"
#include "splitsteiner/split_partition.hpp"

#include <bit>
#include <string>
#include <variant>

namespace splitsteiner {

namespace {

constexpr std::size_t max_candidates = 25;

// Connectivity of the vertex set `mask` on graphs with at most 64 vertices.
bool mask_connected(const std::vector<std::uint64_t>& adj, std::uint64_t mask)
{
    if (std::popcount(mask) <= 1)
        return true;
    std::uint64_t reached = mask & (~mask + 1);
    std::uint64_t frontier = reached;
    while (frontier) {
        std::uint64_t next = 0;
        for (auto f = frontier; f; f &= f - 1)
            next |= adj[std::countr_zero(f)];
        next &= mask & ~reached;
        reached |= next;
        frontier = next;
    }
    return reached == mask;
}

} // namespace

OracleResult brute_force_steiner(const SteinerInstance& inst, Universe universe, std::uint64_t budget)
{
    const auto& g = inst.graph();
    const auto& terminals = inst.terminals();

    VertexSet pool;
    if (universe == Universe::AllVertices) {
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            pool.push_back(v);
    } else {
        auto parsed = split_partition(g);
        if (std::holds_alternative<NotSplit>(parsed))
            throw PreconditionError("clique-only oracle needs a split graph");
        pool = std::get<SplitPartition>(parsed).clique();
    }
    const auto candidates = set_difference(pool, terminals);
    if (candidates.size() > max_candidates)
        throw PreconditionError("oracle limited to " + std::to_string(max_candidates) + " candidates, got " +
                                std::to_string(candidates.size()));

    const bool small = g.vertex_count() <= 64;
    std::vector<std::uint64_t> adj;
    std::uint64_t base = 0;
    if (small) {
        adj.assign(g.vertex_count(), 0);
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            for (VertexId w : g.neighbors(v))
                adj[v] |= std::uint64_t{1} << w;
        for (VertexId r : terminals)
            base |= std::uint64_t{1} << r;
    }

    OracleResult out;
    std::vector<std::size_t> pick;
    VertexSet chosen;
    auto feasible = [&]() {
        if (small) {
            auto mask = base;
            for (auto i : pick)
                mask |= std::uint64_t{1} << candidates[i];
            return mask_connected(adj, mask);
        }
        chosen.clear();
        for (auto i : pick)
            chosen.push_back(candidates[i]);
        return is_connected(g, set_union(chosen, terminals));
    };

    const auto c = candidates.size();
    for (std::size_t k = 0; k <= c; ++k) {
        pick.resize(k);
        for (std::size_t i = 0; i < k; ++i)
            pick[i] = i;
        for (;;) {
            if (out.explored >= budget)
                throw BudgetError("oracle budget of " + std::to_string(budget) + " subsets exhausted");
            ++out.explored;
            if (feasible()) {
                out.min_size = k;
                for (auto i : pick)
                    out.witness.push_back(candidates[i]);
                return out;
            }
            // Next k-combination in lexicographic order.
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == c - k + i - 1)
                --i;
            if (i == 0)
                break;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    throw Error("no Steiner set exists within the search universe");
}

bool verify_solution(const SteinerInstance& inst, std::span<const VertexId> s)
{
    const auto& g = inst.graph();
    VertexSet set(s.begin(), s.end());
    normalize(set);
    for (VertexId v : set) {
        if (v >= g.vertex_count())
            throw PreconditionError("vertex out of range: " + std::to_string(v));
        if (inst.is_terminal(v))
            throw PreconditionError("Steiner set contains terminal " + std::to_string(v));
    }
    return is_connected(g, set_union(set, inst.terminals()));
}

} // namespace splitsteiner
