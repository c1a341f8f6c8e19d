#pragma once

// Small named graphs from the documentation examples.

#include "splitsteiner/graph.hpp"
#include "splitsteiner/instance.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace testsupport {

inline splitsteiner::Graph make_graph(std::size_t n, std::initializer_list<std::pair<unsigned, unsigned>> edges)
{
    std::vector<splitsteiner::Edge> es;
    for (auto [u, v] : edges)
        es.push_back(splitsteiner::make_edge(u, v));
    return splitsteiner::Graph::from_edges(n, es);
}

/// Path a-b-c as 0-1-2.
inline splitsteiner::Graph path3() { return make_graph(3, {{0, 1}, {1, 2}}); }

/// Triangle u,v,w = 0,1,2 with a,b,c,d = 3..6 and u~{a,b,c}, v~{a,d}, w~{b,d}.
namespace seven {
enum : unsigned { u, v, w, a, b, c, d };
inline splitsteiner::Graph graph()
{
    return make_graph(7, {{u, v}, {u, w}, {v, w}, {u, a}, {u, b}, {u, c}, {v, a}, {v, d}, {w, b}, {w, d}});
}
} // namespace seven

/// Triangle u,v,w = 0,1,2 with a,b,c = 3,4,5 and u~{a,b}, v~{b,c}, w~{}.
namespace six {
enum : unsigned { u, v, w, a, b, c };
inline splitsteiner::Graph graph()
{
    return make_graph(6, {{u, v}, {u, w}, {v, w}, {u, a}, {u, b}, {v, b}, {v, c}});
}
} // namespace six

} // namespace testsupport
