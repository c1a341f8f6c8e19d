#include "splitsteiner/instance.hpp"

#include "splitsteiner/errors.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace splitsteiner {

SteinerInstance::SteinerInstance(Graph graph, VertexSet terminals)
    : graph_(std::move(graph)), terminals_(std::move(terminals))
{
    std::sort(terminals_.begin(), terminals_.end());
    if (std::adjacent_find(terminals_.begin(), terminals_.end()) != terminals_.end())
        throw GraphError("repeated terminal");
    if (!terminals_.empty() && terminals_.back() >= graph_.vertex_count())
        throw GraphError("terminal out of range: " + std::to_string(terminals_.back()));
    if (!is_connected(graph_))
        throw GraphError("graph is not connected");
}

bool SteinerInstance::is_terminal(VertexId v) const
{
    return contains(terminals_, v);
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        const auto start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start)
            out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::size_t to_count(std::string_view tok, std::size_t line)
{
    std::size_t value = 0;
    const auto* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
    return value;
}

VertexId to_vertex(std::string_view tok, std::size_t n, std::size_t line)
{
    const auto id = to_count(tok, line);
    if (id < 1 || id > n)
        throw ParseError(line, "vertex id " + std::string(tok) + " out of range 1.." + std::to_string(n));
    return static_cast<VertexId>(id - 1);
}

} // namespace

SteinerInstance parse_instance(std::string_view text)
{
    std::size_t n = 0, m = 0, t = 0;
    bool header = false;
    std::vector<Edge> edges;
    std::vector<std::size_t> edge_lines;
    VertexSet terminals;
    std::vector<std::size_t> terminal_lines;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        const auto line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        const auto tok = split_tokens(line);
        if (tok.empty() || tok[0].front() == '#')
            continue;

        if (!header) {
            if (tok.size() != 5 || tok[0] != "p" || tok[1] != "sstp")
                throw ParseError(line_no, "expected header 'p sstp <n> <m> <t>'");
            n = to_count(tok[2], line_no);
            m = to_count(tok[3], line_no);
            t = to_count(tok[4], line_no);
            header = true;
            continue;
        }
        if (tok[0] == "e") {
            if (tok.size() != 3)
                throw ParseError(line_no, "expected 'e <u> <v>'");
            const auto u = to_vertex(tok[1], n, line_no);
            const auto v = to_vertex(tok[2], n, line_no);
            if (u == v)
                throw ParseError(line_no, "self-loop at vertex " + std::string(tok[1]));
            edges.push_back(make_edge(u, v));
            edge_lines.push_back(line_no);
        } else if (tok[0] == "t") {
            if (tok.size() != 2)
                throw ParseError(line_no, "expected 't <u>'");
            terminals.push_back(to_vertex(tok[1], n, line_no));
            terminal_lines.push_back(line_no);
        } else {
            throw ParseError(line_no, "unknown record '" + std::string(tok[0]) + "'");
        }
    }

    if (!header)
        throw ParseError(0, "missing 'p sstp' header");
    if (edges.size() != m)
        throw ParseError(0, "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    if (terminals.size() != t)
        throw ParseError(0, "header announces " + std::to_string(t) + " terminals, found " +
                                std::to_string(terminals.size()));

    // Report duplicates at the line of their second occurrence.
    auto first_repeat = [](const auto& items, const std::vector<std::size_t>& lines) -> std::size_t {
        std::vector<std::size_t> order(items.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return items[a] < items[b]; });
        std::size_t worst = 0;
        for (std::size_t i = 1; i < order.size(); ++i)
            if (items[order[i]] == items[order[i - 1]] && (worst == 0 || lines[order[i]] < worst))
                worst = lines[order[i]];
        return worst;
    };
    if (auto l = first_repeat(edges, edge_lines))
        throw ParseError(l, "duplicate edge");
    if (auto l = first_repeat(terminals, terminal_lines))
        throw ParseError(l, "duplicate terminal");

    Graph g = Graph::from_edges(n, edges);
    if (!is_connected(g))
        throw ParseError(0, "graph is not connected");
    return SteinerInstance(std::move(g), std::move(terminals));
}

SteinerInstance parse_instance(std::istream& in)
{
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_instance(std::string_view(text));
}

std::string to_sstp(const SteinerInstance& inst, std::span<const std::string> comments)
{
    const auto& g = inst.graph();
    std::ostringstream out;
    out << "p sstp " << g.vertex_count() << ' ' << g.edge_count() << ' ' << inst.terminals().size() << '\n';
    for (const auto& c : comments)
        out << "# " << c << '\n';
    for (const auto& e : g.edges())
        out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    for (VertexId t : inst.terminals())
        out << "t " << t + 1 << '\n';
    return out.str();
}

} // namespace splitsteiner
