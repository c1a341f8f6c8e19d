#include "splitsteiner/matching.hpp"

#include "splitsteiner/errors.hpp"

#include <cstdint>
#include <string>

namespace splitsteiner {

namespace {

constexpr std::int32_t none = -1;

// Edmonds' blossom search, one alternating tree at a time. Scratch state is
// reset only on the vertices a search touched, and a tree whose search fails
// is discarded for good (it cannot take part in any later augmenting path).
class Blossom {
public:
    explicit Blossom(const Graph& g)
        : g_(g), n_(static_cast<std::int32_t>(g.vertex_count())), match_(n_, none), parent_(n_, none), base_(n_),
          even_(n_, 0), in_blossom_(n_, 0), dead_(n_, 0), stamp_(n_, 0)
    {
        for (std::int32_t v = 0; v < n_; ++v)
            base_[v] = v;
    }

    std::size_t greedy()
    {
        std::size_t size = 0;
        for (std::int32_t v = 0; v < n_; ++v) {
            if (match_[v] != none)
                continue;
            for (VertexId w : g_.neighbors(v)) {
                if (match_[w] == none) {
                    match_[v] = static_cast<std::int32_t>(w);
                    match_[w] = v;
                    ++size;
                    break;
                }
            }
        }
        return size;
    }

    // Augments along the first path found from each exposed root in turn;
    // stops once `limit` edges are matched.
    std::size_t run(std::size_t size, std::size_t limit)
    {
        for (std::int32_t root = 0; root < n_ && size < limit; ++root) {
            if (match_[root] != none || dead_[root])
                continue;
            const auto end = search(root);
            if (end == none) {
                for (auto v : touched_)
                    dead_[v] = 1;
                continue;
            }
            augment(end);
            ++size;
        }
        return size;
    }

    Matching result() const
    {
        Matching m;
        for (std::int32_t v = 0; v < n_; ++v)
            if (match_[v] > v)
                m.edges.push_back({static_cast<VertexId>(v), static_cast<VertexId>(match_[v])});
        return m;
    }

private:
    void touch(std::int32_t v)
    {
        if (!even_[v] && parent_[v] == none)
            touched_.push_back(v);
    }

    std::int32_t lca(std::int32_t a, std::int32_t b)
    {
        ++clock_;
        for (;;) {
            a = base_[a];
            stamp_[a] = clock_;
            if (match_[a] == none)
                break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (stamp_[b] == clock_)
                return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(std::int32_t v, std::int32_t b, std::int32_t child)
    {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    std::int32_t search(std::int32_t root)
    {
        for (auto v : touched_) {
            even_[v] = 0;
            parent_[v] = none;
            base_[v] = v;
        }
        touched_.clear();
        queue_.clear();

        touch(root);
        even_[root] = 1;
        queue_.push_back(root);
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            const auto v = queue_[head];
            for (VertexId w : g_.neighbors(v)) {
                const auto to = static_cast<std::int32_t>(w);
                if (dead_[to] || base_[v] == base_[to] || match_[v] == to)
                    continue;
                if (to == root || (match_[to] != none && parent_[match_[to]] != none)) {
                    const auto b = lca(v, to);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (auto i : touched_) {
                        if (!in_blossom_[base_[i]])
                            continue;
                        base_[i] = b;
                        if (!even_[i]) {
                            even_[i] = 1;
                            queue_.push_back(i);
                        }
                    }
                    for (auto i : touched_)
                        in_blossom_[i] = 0;
                } else if (parent_[to] == none) {
                    touch(to);
                    parent_[to] = v;
                    if (match_[to] == none)
                        return to;
                    const auto mate = match_[to];
                    touch(mate);
                    even_[mate] = 1;
                    queue_.push_back(mate);
                }
            }
        }
        return none;
    }

    void augment(std::int32_t v)
    {
        while (v != none) {
            const auto pv = parent_[v];
            const auto next = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = next;
        }
    }

    const Graph& g_;
    std::int32_t n_;
    std::vector<std::int32_t> match_, parent_, base_;
    std::vector<unsigned char> even_, in_blossom_, dead_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t clock_ = 0;
    std::vector<std::int32_t> touched_, queue_;
};

} // namespace

Matching maximum_matching(const Graph& g)
{
    Blossom b(g);
    b.run(b.greedy(), g.vertex_count());
    return b.result();
}

std::size_t matching_size_at_most(const Graph& g, std::size_t k)
{
    if (k > 3)
        throw PreconditionError("matching_size_at_most supports k <= 3, got " + std::to_string(k));
    Blossom b(g);
    const auto greedy = b.greedy();
    if (greedy > k)
        return k + 1;
    return b.run(greedy, k + 1);
}

} // namespace splitsteiner
