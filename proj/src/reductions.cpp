#include "splitsteiner/reductions.hpp"

#include "splitsteiner/errors.hpp"
#include "splitsteiner/split_partition.hpp"
#include "splitsteiner/structure.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <set>
#include <sstream>
#include <variant>

namespace splitsteiner {

X3CInstance::X3CInstance(std::size_t ground_size, std::vector<Triple> triples) : ground_size_(ground_size)
{
    if (ground_size == 0 || ground_size % 3 != 0)
        throw PreconditionError("X3C ground size must be a positive multiple of 3, got " + std::to_string(ground_size));
    std::set<Triple> seen;
    for (auto t : triples) {
        std::sort(t.begin(), t.end());
        if (t[0] < 1 || t[2] > ground_size)
            throw PreconditionError("triple element out of range 1.." + std::to_string(ground_size));
        if (t[0] == t[1] || t[1] == t[2])
            throw PreconditionError("triple with repeated element " + std::to_string(t[1]));
        if (seen.insert(t).second)
            triples_.push_back(t);
    }
}

X3CInstance parse_x3c(std::string_view text)
{
    auto number = [](std::string_view tok, std::size_t line) {
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
        return value;
    };

    std::size_t ground = 0, count = 0, line_no = 0;
    bool header = false;
    std::vector<Triple> triples;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream words(line);
        std::vector<std::string> tok;
        for (std::string w; words >> w;)
            tok.push_back(w);
        if (tok.empty() || tok[0].front() == '#')
            continue;
        if (!header) {
            if (tok.size() != 3 || tok[0] != "x3c")
                throw ParseError(line_no, "expected header 'x3c <3q> <n>'");
            ground = number(tok[1], line_no);
            count = number(tok[2], line_no);
            if (ground == 0 || ground % 3 != 0)
                throw ParseError(line_no, "ground size must be a positive multiple of 3");
            header = true;
            continue;
        }
        if (tok[0] != "c" || tok.size() != 4)
            throw ParseError(line_no, "expected 'c <a> <b> <c>'");
        Triple t{};
        for (std::size_t i = 0; i < 3; ++i) {
            const auto e = number(tok[i + 1], line_no);
            if (e < 1 || e > ground)
                throw ParseError(line_no, "element " + tok[i + 1] + " out of range 1.." + std::to_string(ground));
            t[i] = static_cast<std::uint32_t>(e);
        }
        if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
            throw ParseError(line_no, "triple with repeated element");
        triples.push_back(t);
    }
    if (!header)
        throw ParseError(0, "missing 'x3c' header");
    if (triples.size() != count)
        throw ParseError(0, "header announces " + std::to_string(count) + " triples, found " +
                                std::to_string(triples.size()));
    return X3CInstance(ground, std::move(triples));
}

std::string to_x3c_text(const X3CInstance& x)
{
    std::ostringstream out;
    out << "x3c " << x.ground_size() << ' ' << x.triples().size() << '\n';
    for (const auto& t : x.triples())
        out << "c " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    return out.str();
}

ReducedX3C reduce_x3c(const X3CInstance& x)
{
    const auto z = x.ground_size();
    const auto& triples = x.triples();
    std::vector<unsigned char> covered(z + 1, 0);
    std::vector<Edge> edges;
    edges.reserve(triples.size() * (triples.size() - 1) / 2 + 3 * triples.size());
    for (std::size_t l = 0; l < triples.size(); ++l) {
        const auto v = static_cast<VertexId>(z + l);
        for (std::size_t m = l + 1; m < triples.size(); ++m)
            edges.push_back({v, static_cast<VertexId>(z + m)});
        for (auto e : triples[l]) {
            covered[e] = 1;
            edges.push_back({static_cast<VertexId>(e - 1), v});
        }
    }
    for (std::size_t e = 1; e <= z; ++e)
        if (!covered[e])
            throw PreconditionError("ground element " + std::to_string(e) + " lies in no triple");

    VertexSet terminals(z);
    for (VertexId i = 0; i < z; ++i)
        terminals[i] = i;
    return {SteinerInstance(Graph::from_edges(z + triples.size(), edges), std::move(terminals)), x.q()};
}

std::optional<std::vector<std::size_t>> solve_x3c_bruteforce(const X3CInstance& x)
{
    const auto& triples = x.triples();
    if (triples.size() > 20)
        throw PreconditionError("X3C brute force limited to 20 triples, got " + std::to_string(triples.size()));
    const auto z = x.ground_size();
    std::vector<std::vector<std::size_t>> containing(z + 1);
    for (std::size_t l = 0; l < triples.size(); ++l)
        for (auto e : triples[l])
            containing[e].push_back(l);

    std::vector<unsigned char> used(z + 1, 0);
    std::vector<std::size_t> chosen;
    // Branch on the smallest uncovered element; each triple containing it is
    // tried in input order.
    auto search = [&](auto&& self) -> bool {
        std::size_t e = 1;
        while (e <= z && used[e])
            ++e;
        if (e > z)
            return true;
        for (auto l : containing[e]) {
            const auto& t = triples[l];
            if (used[t[0]] || used[t[1]] || used[t[2]])
                continue;
            for (auto u : t)
                used[u] = 1;
            chosen.push_back(l);
            if (self(self))
                return true;
            chosen.pop_back();
            for (auto u : t)
                used[u] = 0;
        }
        return false;
    };
    if (!search(search))
        return std::nullopt;
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

namespace {

// Own sampling on top of the engine so that output does not depend on the
// standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t n)
    {
        const auto limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
        for (;;) {
            const auto x = engine_();
            if (x < limit)
                return x % n;
        }
    }

    bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

    template <typename T>
    void shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

    template <typename T>
    const T& pick(const std::vector<T>& v)
    {
        return v[below(v.size())];
    }

private:
    std::mt19937_64 engine_;
};

// Neighbourhoods N^I(c) over local indices: clique vertex c, independent j.
using Incidence = std::vector<std::vector<std::uint32_t>>;

bool has(const std::vector<std::uint32_t>& s, std::uint32_t x)
{
    return std::find(s.begin(), s.end(), x) != s.end();
}

bool meets(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b)
{
    return std::any_of(a.begin(), a.end(), [&](std::uint32_t x) { return has(b, x); });
}

// Each independent vertex gets one clique neighbour, a random clique vertex first
// receives `level` of them, then optional extras; no clique vertex exceeds
// `level` independent neighbours and no independent vertex sees all of C.
std::optional<Incidence> capacity_construction(const GeneratorConfig& cfg, Rng& rng)
{
    const auto a = cfg.clique_size, b = cfg.independent_size;
    const auto cap = cfg.level;
    Incidence sets(a);
    std::vector<std::size_t> degree(b, 0);
    std::vector<std::uint32_t> open(a);
    std::vector<std::size_t> slot(a);
    for (std::uint32_t c = 0; c < a; ++c)
        open[c] = c, slot[c] = c;
    auto close_if_full = [&](std::uint32_t c) {
        if (sets[c].size() != cap)
            return;
        slot[open.back()] = slot[c];
        open[slot[c]] = open.back();
        open.pop_back();
    };

    std::vector<std::uint32_t> order(b);
    for (std::uint32_t j = 0; j < b; ++j)
        order[j] = j;
    rng.shuffle(order);
    const auto seed_clique = static_cast<std::uint32_t>(rng.below(a));
    for (std::size_t k = 0; k < cap; ++k) {
        sets[seed_clique].push_back(order[k]);
        ++degree[order[k]];
    }
    close_if_full(seed_clique);
    for (std::size_t k = cap; k < b; ++k) {
        if (open.empty())
            return std::nullopt;
        const auto c = rng.pick(open);
        sets[c].push_back(order[k]);
        ++degree[order[k]];
        close_if_full(c);
    }
    for (std::uint32_t j = 0; j < b && !open.empty(); ++j) {
        while (rng.chance(cfg.density) && degree[j] + 2 < a + 1 && !open.empty()) {
            const auto c = rng.pick(open);
            if (has(sets[c], j))
                break;
            sets[c].push_back(j);
            ++degree[j];
            close_if_full(c);
        }
    }
    return sets;
}

// K_{1,4}-free 3-split construction: every neighbourhood must meet every
// triple, so each new set first hits what it has to and is then filled,
// preferring still uncovered independent vertices.
std::optional<Incidence> k14_free_construction(const GeneratorConfig& cfg, Rng& rng)
{
    const auto a = cfg.clique_size, b = cfg.independent_size;
    Incidence sets;
    std::vector<std::size_t> triples;
    std::vector<std::size_t> cover(b, 0);
    std::vector<std::uint32_t> uncovered(b);
    for (std::uint32_t j = 0; j < b; ++j)
        uncovered[j] = j;

    auto add = [&](std::vector<std::uint32_t>& s, std::uint32_t x) {
        if (has(s, x))
            return;
        s.push_back(x);
    };
    auto fill = [&](std::vector<std::uint32_t>& s, std::size_t size) {
        for (std::size_t guard = 0; s.size() < size && guard < 8 * b + 16; ++guard) {
            std::vector<std::uint32_t> fresh;
            for (auto u : uncovered)
                if (!has(s, u))
                    fresh.push_back(u);
            add(s, fresh.empty() || rng.chance(0.2) ? static_cast<std::uint32_t>(rng.below(b)) : rng.pick(fresh));
        }
    };
    // Random elements from sets not yet met until all are met.
    auto hit = [&](std::vector<std::uint32_t>& s, const std::vector<std::size_t>& targets, std::size_t cap) {
        for (;;) {
            std::vector<std::size_t> open;
            for (auto t : targets)
                if (!meets(s, sets[t]))
                    open.push_back(t);
            if (open.empty())
                return true;
            if (s.size() >= cap)
                return false;
            add(s, rng.pick(sets[rng.pick(open)]));
        }
    };
    auto commit = [&](std::vector<std::uint32_t> s) {
        for (auto x : s)
            if (cover[x]++ == 0)
                uncovered.erase(std::find(uncovered.begin(), uncovered.end(), x));
        if (s.size() == 3)
            triples.push_back(sets.size());
        sets.push_back(std::move(s));
    };

    // Pairs {x, y} (x may equal y) meeting every triple; a new triple is only
    // accepted while some such pair survives, so later sets of size two can
    // always be formed.
    auto hitting_pairs = [&](const std::vector<std::size_t>& ts) {
        std::vector<std::uint32_t> pool;
        for (auto t : ts)
            for (auto x : sets[t])
                if (!has(pool, x))
                    pool.push_back(x);
        std::sort(pool.begin(), pool.end());
        std::vector<std::vector<std::uint32_t>> out;
        for (std::size_t i = 0; i < pool.size(); ++i)
            for (std::size_t j = i; j < pool.size(); ++j) {
                std::vector<std::uint32_t> s{pool[i]};
                if (j != i)
                    s.push_back(pool[j]);
                if (std::all_of(ts.begin(), ts.end(), [&](std::size_t t) { return meets(s, sets[t]); }))
                    out.push_back(std::move(s));
            }
        return out;
    };

    const std::size_t triple_cap = 1 + rng.below(6);
    std::vector<std::size_t> everyone;
    for (std::size_t c = 0; c < a; ++c) {
        const double p_triple = c == 0 ? 1.0 : 0.2 + 0.5 * cfg.density;
        std::vector<std::uint32_t> s;
        bool ok = false;
        if (triples.size() < triple_cap && rng.chance(p_triple)) {
            ok = hit(s, everyone, 3);
            if (ok)
                fill(s, 3);
            if (ok && s.size() == 3 && !triples.empty()) {
                sets.push_back(s);
                triples.push_back(sets.size() - 1);
                ok = !hitting_pairs(triples).empty();
                triples.pop_back();
                sets.pop_back();
            }
        }
        if (!ok) {
            for (int retry = 0; retry < 8 && !ok; ++retry) {
                s.clear();
                ok = hit(s, triples, 2);
            }
            if (!ok) {
                const auto options = hitting_pairs(triples);
                if (options.empty())
                    return std::nullopt;
                s = rng.pick(options);
                ok = true;
            }
            fill(s, std::max<std::size_t>(s.size(), rng.chance(cfg.density + 0.3) ? 2 : 1));
        }
        if (s.size() > 3 || (s.size() == 3 && !std::all_of(everyone.begin(), everyone.end(), [&](std::size_t t) {
                                 return meets(s, sets[t]);
                             })))
            return std::nullopt;
        everyone.push_back(sets.size());
        commit(std::move(s));
    }

    // Coverage repair: a set of size one may grow freely, a set of size two
    // only if the resulting triple still meets everything.
    while (!uncovered.empty()) {
        const auto w = uncovered.front();
        std::vector<std::size_t> small, pairs;
        for (std::size_t c = 0; c < a; ++c) {
            if (sets[c].size() <= 1)
                small.push_back(c);
            else if (sets[c].size() == 2)
                pairs.push_back(c);
        }
        std::optional<std::size_t> target;
        if (!small.empty()) {
            target = rng.pick(small);
        } else {
            rng.shuffle(pairs);
            for (auto c : pairs) {
                auto grown = sets[c];
                grown.push_back(w);
                bool good = true;
                for (std::size_t d = 0; d < a && good; ++d)
                    good = d == c || meets(grown, sets[d]);
                if (good) {
                    target = c;
                    break;
                }
            }
        }
        if (!target)
            return std::nullopt;
        sets[*target].push_back(w);
        ++cover[w];
        uncovered.erase(uncovered.begin());
    }
    return sets;
}

} // namespace

SteinerInstance gen_split(const GeneratorConfig& cfg)
{
    const std::size_t a = cfg.clique_size, b = cfg.independent_size, l = cfg.level;
    if (l < 1 || l > 3)
        throw PreconditionError("generator level must be 1, 2 or 3");
    if (a < 2)
        throw PreconditionError("a maximal clique next to a non-empty independent set needs at least 2 vertices");
    if (b < l || b > l * a)
        throw PreconditionError("independent size must lie in [level, level * clique size]");
    if (cfg.density < 0.0 || cfg.density > 1.0)
        throw PreconditionError("density must lie in [0, 1]");
    if (cfg.k14_free && l == 3 && b > 2 * a + 1)
        throw PreconditionError("a K_{1,4}-free 3-split graph has |I| <= 2|C| + 1");

    Rng rng(cfg.seed);
    const auto n = a + b;
    for (std::size_t attempt = 0; attempt < cfg.max_attempts; ++attempt) {
        const auto sets = cfg.k14_free && l == 3 ? k14_free_construction(cfg, rng) : capacity_construction(cfg, rng);
        if (!sets)
            continue;

        std::vector<std::size_t> seen(b, 0);
        for (const auto& s : *sets)
            for (auto j : s)
                ++seen[j];
        if (std::any_of(seen.begin(), seen.end(), [&](std::size_t d) { return d == 0 || d == a; }))
            continue;

        // Shuffled ids: position k of `perm` holds the id of local vertex k
        // (clique vertices first).
        std::vector<VertexId> perm(n);
        for (VertexId v = 0; v < n; ++v)
            perm[v] = v;
        rng.shuffle(perm);

        VertexSet clique(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(a));
        std::sort(clique.begin(), clique.end());
        std::vector<std::vector<VertexId>> adjacency(n);
        std::vector<std::vector<VertexId>> indep_nb(b);
        for (std::size_t c = 0; c < a; ++c) {
            std::vector<VertexId> own;
            for (auto j : (*sets)[c]) {
                own.push_back(perm[a + j]);
                indep_nb[j].push_back(perm[c]);
            }
            std::sort(own.begin(), own.end());
            auto& out = adjacency[perm[c]];
            out.reserve(a - 1 + own.size());
            auto ci = clique.begin();
            auto oi = own.begin();
            while (ci != clique.end() || oi != own.end()) {
                if (oi == own.end() || (ci != clique.end() && *ci < *oi)) {
                    if (*ci != perm[c])
                        out.push_back(*ci);
                    ++ci;
                } else {
                    out.push_back(*oi++);
                }
            }
        }
        for (std::size_t j = 0; j < b; ++j) {
            std::sort(indep_nb[j].begin(), indep_nb[j].end());
            adjacency[perm[a + j]] = std::move(indep_nb[j]);
        }

        VertexSet terminals(perm.begin() + static_cast<std::ptrdiff_t>(a), perm.end());
        std::sort(terminals.begin(), terminals.end());
        SteinerInstance inst(Graph::from_adjacency(std::move(adjacency)), std::move(terminals));

        auto parsed = split_partition(inst.graph());
        const auto* sp = std::get_if<SplitPartition>(&parsed);
        if (!sp || sp->clique() != clique || sp->delta_i() != l)
            continue;
        if (cfg.k14_free && l == 3 && find_induced_star(*sp, 4))
            continue;
        return inst;
    }
    throw BudgetError("generator gave up after " + std::to_string(cfg.max_attempts) + " attempts");
}

X3CInstance gen_x3c(std::size_t q, std::size_t triples, bool plant_cover, std::uint64_t seed)
{
    const auto z = 3 * q;
    const auto possible = z * (z - 1) * (z - 2) / 6;
    if (q == 0 || triples < q || triples > possible)
        throw PreconditionError("need q >= 1 and q <= triples <= C(3q, 3)");
    Rng rng(seed);
    std::set<Triple> chosen;
    std::vector<Triple> out;
    auto push = [&](Triple t) {
        std::sort(t.begin(), t.end());
        if (chosen.insert(t).second)
            out.push_back(t);
    };

    std::vector<std::uint32_t> elements(z);
    for (std::uint32_t e = 0; e < z; ++e)
        elements[e] = e + 1;
    if (plant_cover) {
        rng.shuffle(elements);
        for (std::size_t i = 0; i < q; ++i)
            push({elements[3 * i], elements[3 * i + 1], elements[3 * i + 2]});
    }
    // Cover every element, then fill with random distinct triples.
    std::vector<unsigned char> covered(z + 1, 0);
    for (const auto& t : out)
        for (auto e : t)
            covered[e] = 1;
    for (std::uint32_t e = 1; e <= z; ++e) {
        if (covered[e])
            continue;
        if (out.size() == triples)
            throw PreconditionError("too few triples to cover the ground set");
        // One partner from the still uncovered elements, so ceil(3q / 2)
        // triples always suffice, the other anywhere.
        std::vector<std::uint32_t> open;
        for (std::uint32_t f = e + 1; f <= z; ++f)
            if (!covered[f])
                open.push_back(f);
        for (;;) {
            const auto partner = open.empty() ? static_cast<std::uint32_t>(rng.below(z) + 1) : rng.pick(open);
            Triple t{e, partner, static_cast<std::uint32_t>(rng.below(z) + 1)};
            if (t[1] == e || t[2] == e || t[1] == t[2])
                continue;
            const auto before = out.size();
            push(t);
            if (out.size() == before)
                continue;
            for (auto u : t)
                covered[u] = 1;
            break;
        }
    }
    while (out.size() < triples) {
        Triple t{static_cast<std::uint32_t>(rng.below(z) + 1), static_cast<std::uint32_t>(rng.below(z) + 1),
                 static_cast<std::uint32_t>(rng.below(z) + 1)};
        if (t[0] != t[1] && t[0] != t[2] && t[1] != t[2])
            push(t);
    }
    rng.shuffle(out);
    return X3CInstance(z, std::move(out));
}

} // namespace splitsteiner
