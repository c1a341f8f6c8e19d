#include "splitsteiner/graph.hpp"

#include "splitsteiner/errors.hpp"

#include <algorithm>
#include <string>

namespace splitsteiner {

Edge make_edge(VertexId a, VertexId b)
{
    return a < b ? Edge{a, b} : Edge{b, a};
}

void normalize(VertexSet& s)
{
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

VertexSet set_union(std::span<const VertexId> a, std::span<const VertexId> b)
{
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(std::span<const VertexId> a, std::span<const VertexId> b)
{
    VertexSet out;
    out.reserve(a.size());
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool contains(std::span<const VertexId> sorted, VertexId v)
{
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges)
{
    Graph g(n);
    for (const auto& e : edges) {
        if (e.u == e.v)
            throw GraphError("self-loop at vertex " + std::to_string(e.u));
        if (e.u >= n || e.v >= n)
            throw GraphError("edge endpoint out of range: " + std::to_string(std::max(e.u, e.v)));
        g.adjacency_[e.u].push_back(e.v);
        g.adjacency_[e.v].push_back(e.u);
    }
    for (VertexId v = 0; v < n; ++v) {
        auto& nb = g.adjacency_[v];
        std::sort(nb.begin(), nb.end());
        if (auto dup = std::adjacent_find(nb.begin(), nb.end()); dup != nb.end())
            throw GraphError("parallel edge " + std::to_string(v) + "-" + std::to_string(*dup));
    }
    g.edge_count_ = edges.size();
    return g;
}

Graph Graph::from_adjacency(std::vector<std::vector<VertexId>> adjacency)
{
    const auto n = adjacency.size();
    std::size_t total = 0;
    for (VertexId v = 0; v < n; ++v) {
        auto& nb = adjacency[v];
        if (!std::is_sorted(nb.begin(), nb.end()))
            std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw GraphError("parallel edge at vertex " + std::to_string(v));
        if (!nb.empty() && nb.back() >= n)
            throw GraphError("neighbor out of range at vertex " + std::to_string(v));
        total += nb.size();
    }

    // Symmetry in O(n + m): visiting u in ascending order consumes every
    // sorted list adj[v] front to back.
    std::vector<std::size_t> cursor(n, 0);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v : adjacency[u]) {
            if (v == u)
                throw GraphError("self-loop at vertex " + std::to_string(u));
            auto& c = cursor[v];
            if (c >= adjacency[v].size() || adjacency[v][c] != u)
                throw GraphError("adjacency not symmetric at " + std::to_string(u) + "-" + std::to_string(v));
            ++c;
        }
    }

    Graph g;
    g.adjacency_ = std::move(adjacency);
    g.edge_count_ = total / 2;
    return g;
}

bool Graph::has_edge(VertexId a, VertexId b) const
{
    const auto& small = degree(a) <= degree(b) ? adjacency_[a] : adjacency_[b];
    const auto other = degree(a) <= degree(b) ? b : a;
    return std::binary_search(small.begin(), small.end(), other);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < adjacency_.size(); ++u)
        for (auto it = std::upper_bound(adjacency_[u].begin(), adjacency_[u].end(), u); it != adjacency_[u].end(); ++it)
            out.push_back({u, *it});
    return out;
}

namespace {

// BFS over the induced subgraph; calls visit(parent, child) for tree edges.
template <typename Visit>
std::size_t induced_bfs(const Graph& g, std::span<const VertexId> subset, Visit&& visit)
{
    if (subset.empty())
        return 0;
    std::vector<unsigned char> state(g.vertex_count(), 0); // 0 absent, 1 unvisited, 2 seen
    VertexId root = subset.front();
    for (VertexId v : subset) {
        if (v >= g.vertex_count())
            throw GraphError("vertex out of range: " + std::to_string(v));
        state[v] = 1;
        root = std::min(root, v);
    }
    std::vector<VertexId> queue{root};
    state[root] = 2;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId u = queue[head];
        for (VertexId w : g.neighbors(u)) {
            if (state[w] != 1)
                continue;
            state[w] = 2;
            visit(u, w);
            queue.push_back(w);
        }
    }
    return queue.size();
}

std::size_t distinct_count(std::span<const VertexId> subset)
{
    VertexSet copy(subset.begin(), subset.end());
    normalize(copy);
    return copy.size();
}

} // namespace

bool is_connected(const Graph& g, std::span<const VertexId> subset)
{
    if (subset.size() <= 1)
        return true;
    return induced_bfs(g, subset, [](VertexId, VertexId) {}) == distinct_count(subset);
}

bool is_connected(const Graph& g)
{
    if (g.vertex_count() <= 1)
        return true;
    VertexSet all(g.vertex_count());
    for (VertexId v = 0; v < all.size(); ++v)
        all[v] = v;
    return is_connected(g, all);
}

std::vector<Edge> bfs_tree(const Graph& g, std::span<const VertexId> subset)
{
    std::vector<Edge> tree;
    const auto reached = induced_bfs(g, subset, [&](VertexId p, VertexId c) { tree.push_back(make_edge(p, c)); });
    if (reached != distinct_count(subset))
        throw GraphError("subset does not induce a connected subgraph");
    return tree;
}

} // namespace splitsteiner
