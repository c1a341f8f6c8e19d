#include "splitsteiner/structure.hpp"

#include "splitsteiner/errors.hpp"

#include <algorithm>
#include <string>

namespace splitsteiner {

namespace {

// |N(a) ∪ N(b) ∪ ...| over the clique, for independent vertices.
std::size_t clique_coverage(const SplitPartition& sp, std::span<const VertexId> independents,
                            std::vector<unsigned char>& mark)
{
    std::size_t covered = 0;
    for (VertexId x : independents)
        for (VertexId c : sp.cross_neighbors(x))
            if (!mark[c]) {
                mark[c] = 1;
                ++covered;
            }
    for (VertexId x : independents)
        for (VertexId c : sp.cross_neighbors(x))
            mark[c] = 0;
    return covered;
}

} // namespace

std::optional<StarWitness> find_induced_star(const SplitPartition& sp, std::size_t r)
{
    if (r < 3)
        throw PreconditionError("find_induced_star requires r >= 3");

    std::vector<unsigned char> mark(sp.universe_size(), 0);
    for (VertexId v : sp.clique()) {
        const auto leaves = sp.cross_neighbors(v);
        if (leaves.size() >= r)
            return StarWitness{v, {leaves.begin(), leaves.begin() + static_cast<std::ptrdiff_t>(r)}};
        if (leaves.size() + 1 != r)
            continue;
        // Need a clique vertex outside N(x) for every leaf x.
        for (VertexId x : leaves)
            for (VertexId c : sp.cross_neighbors(x))
                mark[c] = 1;
        std::optional<VertexId> outsider;
        for (VertexId w : sp.clique())
            if (!mark[w]) {
                outsider = w;
                break;
            }
        for (VertexId x : leaves)
            for (VertexId c : sp.cross_neighbors(x))
                mark[c] = 0;
        if (outsider) {
            StarWitness star{v, {leaves.begin(), leaves.end()}};
            star.leaves.push_back(*outsider);
            return star;
        }
    }
    return std::nullopt;
}

bool check_claw_free_characterization(const SplitPartition& sp)
{
    if (sp.delta_i() <= 1)
        return true;
    if (sp.delta_i() > 2)
        return false;
    std::vector<unsigned char> mark(sp.universe_size(), 0);
    for (VertexId u : sp.clique()) {
        if (sp.independent_degree(u) != 2)
            continue;
        if (clique_coverage(sp, sp.cross_neighbors(u), mark) != sp.clique().size())
            return false;
    }
    return true;
}

bool check_k14_free_3split(const SplitPartition& sp)
{
    if (sp.delta_i() != 3)
        throw PreconditionError("check_k14_free_3split requires a 3-split graph, got Delta^I = " +
                                std::to_string(sp.delta_i()));
    std::vector<unsigned char> mark(sp.universe_size(), 0);
    for (VertexId u : sp.v3())
        if (clique_coverage(sp, sp.cross_neighbors(u), mark) != sp.clique().size())
            return false;
    return true;
}

Graph LabeledGraph::to_graph() const
{
    std::vector<Edge> local;
    local.reserve(edges.size());
    auto index = [&](VertexId v) {
        return static_cast<VertexId>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
    };
    for (const auto& e : edges)
        local.push_back(make_edge(index(e.a), index(e.b)));
    return Graph::from_edges(vertices.size(), local);
}

std::optional<LabeledEdge> LabeledGraph::find(VertexId a, VertexId b) const
{
    if (a > b)
        std::swap(a, b);
    auto it = std::lower_bound(edges.begin(), edges.end(), LabeledEdge{a, b, 0});
    if (it != edges.end() && it->a == a && it->b == b)
        return *it;
    return std::nullopt;
}

LabeledGraph build_labeled_graph(const SplitPartition& sp)
{
    LabeledGraph m;
    m.vertices = sp.independent();
    for (VertexId c : sp.clique()) {
        const auto nb = sp.cross_neighbors(c);
        if (nb.size() >= 3)
            throw PreconditionError("labeled graph needs Delta^I <= 2; vertex " + std::to_string(c) + " has " +
                                    std::to_string(nb.size()) + " independent neighbors");
        if (nb.size() == 2)
            m.edges.push_back({nb[0], nb[1], c});
    }
    // Clique vertices were scanned in ascending order, so after a stable sort
    // the first edge of every pair carries the smallest label.
    std::stable_sort(m.edges.begin(), m.edges.end(),
                     [](const LabeledEdge& x, const LabeledEdge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
    m.edges.erase(std::unique(m.edges.begin(), m.edges.end(),
                              [](const LabeledEdge& x, const LabeledEdge& y) { return x.a == y.a && x.b == y.b; }),
                  m.edges.end());
    return m;
}

VertexSet corresponding_vertex_set(const LabeledGraph& m, std::span<const LabeledEdge> es)
{
    VertexSet labels;
    labels.reserve(es.size());
    for (const auto& e : es) {
        const auto found = m.find(e.a, e.b);
        if (!found || found->label != e.label)
            throw PreconditionError("edge " + std::to_string(e.a) + "-" + std::to_string(e.b) +
                                    " is not in the labeled graph");
        labels.push_back(e.label);
    }
    const auto before = labels.size();
    normalize(labels);
    if (labels.size() != before)
        throw PreconditionError("two labeled edges share a label; host is not l-split with l <= 2");
    return labels;
}

VertexSet corresponding_clique_set(const SplitPartition& sp, std::span<const VertexId> vs)
{
    VertexSet out;
    out.reserve(vs.size());
    for (VertexId u : vs) {
        if (u >= sp.universe_size() || !sp.in_independent(u))
            throw PreconditionError("vertex " + std::to_string(u) + " is not an independent vertex");
        const auto nb = sp.cross_neighbors(u);
        if (nb.empty())
            throw PreconditionError("independent vertex " + std::to_string(u) + " has no clique neighbor");
        out.push_back(nb.front());
    }
    normalize(out);
    return out;
}

VertexSet independent_neighborhood(const SplitPartition& sp, std::span<const VertexId> clique_vertices)
{
    VertexSet out;
    for (VertexId c : clique_vertices) {
        if (!sp.in_clique(c))
            throw PreconditionError("vertex " + std::to_string(c) + " is not a clique vertex");
        const auto nb = sp.cross_neighbors(c);
        out.insert(out.end(), nb.begin(), nb.end());
    }
    normalize(out);
    return out;
}

} // namespace splitsteiner
