#include "splitsteiner/split_partition.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

namespace splitsteiner {

std::string_view to_string(Obstruction::Kind kind)
{
    switch (kind) {
    case Obstruction::Kind::TwoK2: return "2K2";
    case Obstruction::Kind::C4: return "C4";
    case Obstruction::Kind::C5: return "C5";
    }
    return "?";
}

SplitPartition::SplitPartition(const Graph& g, std::span<const VertexId> clique)
    : role_(g.vertex_count(), Role::Independent)
{
    for (VertexId c : clique)
        role_[c] = Role::Clique;

    std::vector<std::size_t> count(g.vertex_count() + 1, 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (role_[v] == Role::Clique) {
            clique_.push_back(v);
            continue;
        }
        independent_.push_back(v);
        for (VertexId c : g.neighbors(v)) {
            if (role_[c] == Role::Clique) {
                ++count[v];
                ++count[c];
            }
        }
    }
    offsets_.assign(g.vertex_count() + 1, 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        offsets_[v + 1] = offsets_[v] + count[v];
    cross_.resize(offsets_.back());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    // Independent vertices are visited in ascending order, so every clique
    // vertex's list comes out sorted.
    for (VertexId i : independent_) {
        for (VertexId c : g.neighbors(i)) {
            if (role_[c] != Role::Clique)
                continue;
            cross_[fill[i]++] = c;
            cross_[fill[c]++] = i;
        }
    }
    finish();
}

SplitPartition SplitPartition::restricted(std::span<const VertexId> keep) const
{
    SplitPartition out;
    const auto n = universe_size();
    out.role_.assign(n, Role::Absent);
    for (VertexId v : keep)
        if (v < n)
            out.role_[v] = role_[v];

    out.offsets_.assign(n + 1, 0);
    for (VertexId v = 0; v < n; ++v) {
        std::size_t deg = 0;
        if (out.role_[v] != Role::Absent) {
            (out.role_[v] == Role::Clique ? out.clique_ : out.independent_).push_back(v);
            for (VertexId w : cross_neighbors(v))
                deg += out.role_[w] != Role::Absent;
        }
        out.offsets_[v + 1] = out.offsets_[v] + deg;
    }
    out.cross_.reserve(out.offsets_.back());
    for (VertexId v = 0; v < n; ++v) {
        if (out.role_[v] == Role::Absent)
            continue;
        for (VertexId w : cross_neighbors(v))
            if (out.role_[w] != Role::Absent)
                out.cross_.push_back(w);
    }
    out.finish();
    return out;
}

void SplitPartition::finish()
{
    delta_i_ = 0;
    v3_.clear();
    for (VertexId c : clique_) {
        const auto d = independent_degree(c);
        delta_i_ = std::max(delta_i_, d);
        if (d == 3)
            v3_.push_back(c);
    }
}

std::string SplitPartition::validate(const Graph& g, bool require_maximal) const
{
    if (g.vertex_count() != universe_size())
        return "partition universe does not match the graph";
    for (VertexId c : clique_) {
        std::size_t in_clique = 0;
        VertexSet indep;
        for (VertexId w : g.neighbors(c)) {
            if (role_[w] == Role::Clique)
                ++in_clique;
            else if (role_[w] == Role::Independent)
                indep.push_back(w);
        }
        if (in_clique + 1 != clique_.size())
            return "clique vertex " + std::to_string(c) + " misses part of C";
        const auto cross = cross_neighbors(c);
        if (!std::equal(indep.begin(), indep.end(), cross.begin(), cross.end()))
            return "stale independent neighborhood at " + std::to_string(c);
    }
    for (VertexId i : independent_) {
        for (VertexId w : g.neighbors(i))
            if (role_[w] == Role::Independent)
                return "independent vertices " + std::to_string(i) + " and " + std::to_string(w) + " are adjacent";
        if (require_maximal && cross_neighbors(i).size() == clique_.size())
            return "clique is not maximal: " + std::to_string(i) + " sees all of C";
    }
    std::size_t delta = 0;
    VertexSet v3;
    for (VertexId c : clique_) {
        delta = std::max(delta, independent_degree(c));
        if (independent_degree(c) == 3)
            v3.push_back(c);
    }
    if (delta != delta_i_ || v3 != v3_)
        return "Delta^I or V_3 inconsistent with adjacency";
    return {};
}

namespace {

std::optional<Obstruction> find_2k2_or_c4(const Graph& g)
{
    const auto n = g.vertex_count();
    std::vector<unsigned char> near(n, 0);
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId b : g.neighbors(a)) {
            if (b < a)
                continue;
            // near: 1 = N(a) only, 2 = N(b) only, 3 = both or a/b itself
            for (VertexId w : g.neighbors(a))
                near[w] |= 1;
            for (VertexId w : g.neighbors(b))
                near[w] |= 2;
            near[a] = near[b] = 3;

            std::optional<Obstruction> found;
            for (VertexId c = 0; c < n && !found; ++c) {
                if (near[c] == 3)
                    continue;
                for (VertexId d : g.neighbors(c)) {
                    if (near[d] == 3)
                        continue;
                    if (near[c] == 0 && near[d] == 0) {
                        found = Obstruction{Obstruction::Kind::TwoK2, {a, b, c, d}};
                        break;
                    }
                    if (near[c] == 1 && near[d] == 2) {
                        found = Obstruction{Obstruction::Kind::C4, {a, c, d, b}};
                        break;
                    }
                }
            }
            for (VertexId w : g.neighbors(a))
                near[w] = 0;
            for (VertexId w : g.neighbors(b))
                near[w] = 0;
            near[a] = near[b] = 0;
            if (found)
                return found;
        }
    }
    return std::nullopt;
}

std::optional<Obstruction> find_c5(const Graph& g)
{
    const auto n = g.vertex_count();
    for (VertexId a = 0; a < n; ++a) {
        const auto na = g.neighbors(a);
        for (std::size_t i = 0; i < na.size(); ++i) {
            for (std::size_t j = 0; j < na.size(); ++j) {
                const VertexId b = na[i], e = na[j];
                if (i == j || g.has_edge(b, e))
                    continue;
                // a-b-c-d-e-a with chords a-c, a-d, b-d, b-e, c-e absent.
                for (VertexId c : g.neighbors(b)) {
                    if (c == a || g.has_edge(a, c) || g.has_edge(c, e))
                        continue;
                    for (VertexId d : g.neighbors(c)) {
                        if (d == b || d == a || d == e || !g.has_edge(d, e))
                            continue;
                        if (g.has_edge(a, d) || g.has_edge(b, d))
                            continue;
                        return Obstruction{Obstruction::Kind::C5, {a, b, c, d, e}};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

struct Swap {
    std::optional<VertexId> removed;
    std::optional<VertexId> added;
};

// Lexicographic comparison of the sorted sets K - removed + added.
bool lex_less(const Swap& a, const Swap& b)
{
    auto only = [](const Swap& x, const Swap& y) {
        VertexSet s;
        if (x.added && x.added != y.added)
            s.push_back(*x.added);
        if (y.removed && y.removed != x.removed)
            s.push_back(*y.removed);
        return s;
    };
    const auto a_only = only(a, b);
    const auto b_only = only(b, a);
    if (a_only.empty() && b_only.empty())
        return false;
    if (b_only.empty())
        return true;
    if (a_only.empty())
        return false;
    return *std::min_element(a_only.begin(), a_only.end()) < *std::min_element(b_only.begin(), b_only.end());
}

} // namespace

std::variant<SplitPartition, NotSplit> split_partition(const Graph& g)
{
    const auto n = g.vertex_count();
    if (n == 0)
        return SplitPartition(g, {});

    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId{0});
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });

    // Degree-sequence test: with d_1 >= ... >= d_n and m = max{i : d_i >= i-1},
    // G is split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i, and then the
    // first m vertices form a maximum clique.
    std::size_t m = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (g.degree(order[i]) >= i)
            m = i + 1;
    std::uint64_t head = 0, tail = 0;
    for (std::size_t i = 0; i < n; ++i)
        (i < m ? head : tail) += g.degree(order[i]);
    if (head != std::uint64_t{m} * (m - 1) + tail) {
        if (auto o = find_2k2_or_c4(g))
            return NotSplit{*o};
        if (auto o = find_c5(g))
            return NotSplit{*o};
        return NotSplit{};
    }

    VertexSet clique(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m));
    normalize(clique);

    // Other maximum cliques leaving an independent complement are K - x + y
    // with x free of independent neighbors and y adjacent to all of K but x.
    std::vector<unsigned char> in_clique(n, 0);
    std::uint64_t clique_sum = 0;
    for (VertexId c : clique) {
        in_clique[c] = 1;
        clique_sum += c;
    }
    Swap best;
    for (VertexId y = 0; y < n; ++y) {
        if (in_clique[y] || g.degree(y) + 1 != m)
            continue;
        std::uint64_t s = 0;
        for (VertexId w : g.neighbors(y))
            s += w;
        const auto x = static_cast<VertexId>(clique_sum - s);
        if (x >= n || !in_clique[x] || g.degree(x) + 1 != m)
            continue;
        Swap cand{x, y};
        if (lex_less(cand, best))
            best = cand;
    }
    if (best.added) {
        clique.erase(std::find(clique.begin(), clique.end(), *best.removed));
        clique.push_back(*best.added);
        normalize(clique);
    }
    return SplitPartition(g, clique);
}

} // namespace splitsteiner
