#include "splitsteiner/matching.hpp"
#include "splitsteiner/oracle.hpp"
#include "splitsteiner/reductions.hpp"
#include "splitsteiner/solver.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace splitsteiner;

namespace {

using PyEdge = std::pair<VertexId, VertexId>;

std::vector<PyEdge> to_pairs(const std::vector<Edge>& edges)
{
    std::vector<PyEdge> out;
    out.reserve(edges.size());
    for (const auto& e : edges)
        out.emplace_back(e.u, e.v);
    return out;
}

Graph build_graph(std::size_t n, const std::vector<PyEdge>& edges)
{
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (auto [u, v] : edges)
        es.push_back(make_edge(u, v));
    return Graph::from_edges(n, es);
}

py::object star_object(const std::optional<StarWitness>& w)
{
    if (!w)
        return py::none();
    return py::make_tuple(w->center, w->leaves);
}

// Exception types live for the whole interpreter session.
struct Exceptions {
    py::handle error, graph, parse, precondition, budget, not_split, hard;
};

Exceptions& exceptions()
{
    static Exceptions e;
    return e;
}

py::handle make_exception(py::module_& m, const char* name, py::handle base)
{
    PyObject* type = PyErr_NewException(("splitsteiner." + std::string(name)).c_str(), base.ptr(), nullptr);
    m.add_object(name, py::handle(type));
    return type;
}

void raise_with(py::handle type, const std::string& message, std::initializer_list<std::pair<const char*, py::object>> attrs)
{
    py::object exc = py::reinterpret_borrow<py::object>(type)(message);
    for (const auto& [key, value] : attrs)
        exc.attr(key) = value;
    PyErr_SetObject(type.ptr(), exc.ptr());
}

void translate(std::exception_ptr p)
{
    const auto& x = exceptions();
    try {
        if (p)
            std::rethrow_exception(p);
    } catch (const NotSplitError& e) {
        raise_with(x.not_split, e.what(),
                   {{"kind", py::str(std::string(to_string(e.obstruction().kind)))},
                    {"vertices", py::cast(e.obstruction().vertices)}});
    } catch (const HardInstanceError& e) {
        raise_with(x.hard, e.what(), {{"witness", star_object(e.witness())}});
    } catch (const ParseError& e) {
        raise_with(x.parse, e.what(), {{"line", py::int_(e.line())}});
    } catch (const PreconditionError& e) {
        PyErr_SetString(x.precondition.ptr(), e.what());
    } catch (const BudgetError& e) {
        PyErr_SetString(x.budget.ptr(), e.what());
    } catch (const GraphError& e) {
        PyErr_SetString(x.graph.ptr(), e.what());
    } catch (const Error& e) {
        PyErr_SetString(x.error.ptr(), e.what());
    }
}

py::dict outcome_dict(const SolveOutcome& o)
{
    py::dict d;
    d["steiner_set"] = o.result.steiner_set;
    d["tree_edges"] = to_pairs(o.result.tree_edges);
    d["regime"] = std::string(to_string(o.trace.regime));
    d["optimal"] = o.result.optimal;
    d["alpha_m"] = o.trace.alpha_m;
    d["alpha_m2"] = o.trace.alpha_m2;
    d["chosen_v3"] = o.trace.chosen_v3_vertex;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Steiner trees on split graphs (native core)";

    auto& x = exceptions();
    x.error = make_exception(m, "Error", PyExc_RuntimeError);
    x.graph = make_exception(m, "GraphError", x.error);
    x.parse = make_exception(m, "ParseError", x.error);
    x.precondition = make_exception(m, "PreconditionError", x.error);
    x.budget = make_exception(m, "BudgetError", x.error);
    x.not_split = make_exception(m, "NotSplitError", x.error);
    x.hard = make_exception(m, "HardInstanceError", x.error);
    py::register_exception_translator(translate);

    py::class_<SteinerInstance>(m, "Instance")
        .def(py::init([](std::size_t n, const std::vector<PyEdge>& edges, VertexSet terminals) {
                 return SteinerInstance(build_graph(n, edges), std::move(terminals));
             }),
             py::arg("n"), py::arg("edges"), py::arg("terminals"))
        .def_property_readonly("vertex_count", [](const SteinerInstance& i) { return i.graph().vertex_count(); })
        .def_property_readonly("edges", [](const SteinerInstance& i) { return to_pairs(i.graph().edges()); })
        .def_property_readonly("terminals", &SteinerInstance::terminals)
        .def("neighbors",
             [](const SteinerInstance& i, VertexId v) {
                 if (v >= i.graph().vertex_count())
                     throw PreconditionError("vertex out of range");
                 const auto nb = i.graph().neighbors(v);
                 return VertexSet(nb.begin(), nb.end());
             })
        .def("to_sstp", [](const SteinerInstance& i) { return to_sstp(i); })
        .def("__repr__", [](const SteinerInstance& i) {
            return "Instance(n=" + std::to_string(i.graph().vertex_count()) +
                   ", m=" + std::to_string(i.graph().edge_count()) +
                   ", terminals=" + std::to_string(i.terminals().size()) + ")";
        });

    m.def("parse_instance", [](const std::string& text) { return parse_instance(text); }, py::arg("text"),
          "Instance from SSTP text.");

    py::class_<SplitPartition>(m, "Partition")
        .def_property_readonly("clique", &SplitPartition::clique)
        .def_property_readonly("independent", &SplitPartition::independent)
        .def_property_readonly("delta_i", &SplitPartition::delta_i)
        .def_property_readonly("v3", &SplitPartition::v3)
        .def("cross_neighbors", [](const SplitPartition& sp, VertexId v) {
            if (!sp.contains(v))
                throw PreconditionError("vertex not in the partition");
            const auto nb = sp.cross_neighbors(v);
            return VertexSet(nb.begin(), nb.end());
        });

    m.def(
        "split_partition",
        [](const SteinerInstance& inst) {
            auto r = split_partition(inst.graph());
            if (auto* no = std::get_if<NotSplit>(&r))
                throw NotSplitError(no->obstruction);
            return std::get<SplitPartition>(std::move(r));
        },
        py::arg("instance"), "Canonical split partition; raises NotSplitError with kind and vertices.");

    m.def(
        "find_induced_star",
        [](const SplitPartition& sp, std::size_t r) { return star_object(find_induced_star(sp, r)); },
        py::arg("partition"), py::arg("r"), "(center, leaves) of an induced K_{1,r}, or None.");

    m.def(
        "solve",
        [](const SteinerInstance& inst, bool exact_fallback, std::size_t fallback_budget) {
            SolveOptions opts;
            opts.exact_fallback = exact_fallback;
            opts.fallback_budget = fallback_budget;
            SolveOutcome out;
            {
                py::gil_scoped_release release;
                out = solve(inst, opts);
            }
            return outcome_dict(out);
        },
        py::arg("instance"), py::arg("exact_fallback") = false, py::arg("fallback_budget") = 20);

    m.def(
        "brute_force_steiner",
        [](const SteinerInstance& inst, const std::string& universe, std::optional<std::uint64_t> budget) {
            if (universe != "all" && universe != "clique")
                throw PreconditionError("universe must be 'all' or 'clique'");
            const auto r = brute_force_steiner(inst, universe == "all" ? Universe::AllVertices : Universe::CliqueOnly,
                                               budget.value_or(std::numeric_limits<std::uint64_t>::max()));
            py::dict d;
            d["min_size"] = r.min_size;
            d["witness"] = r.witness;
            d["explored"] = r.explored;
            return d;
        },
        py::arg("instance"), py::arg("universe") = "all", py::arg("budget") = py::none());

    m.def(
        "verify_solution", [](const SteinerInstance& inst, VertexSet s) {
            normalize(s);
            return verify_solution(inst, s);
        },
        py::arg("instance"), py::arg("steiner_set"));

    m.def(
        "maximum_matching",
        [](std::size_t n, const std::vector<PyEdge>& edges) { return to_pairs(maximum_matching(build_graph(n, edges)).edges); },
        py::arg("n"), py::arg("edges"));

    m.def(
        "reduce_x3c",
        [](std::size_t ground_size, std::vector<Triple> triples) {
            auto r = reduce_x3c(X3CInstance(ground_size, std::move(triples)));
            return py::make_tuple(std::move(r.instance), r.k);
        },
        py::arg("ground_size"), py::arg("triples"), "(instance, k) for 1-based triples over {1..ground_size}.");

    m.def(
        "solve_x3c_bruteforce",
        [](std::size_t ground_size, std::vector<Triple> triples) {
            return solve_x3c_bruteforce(X3CInstance(ground_size, std::move(triples)));
        },
        py::arg("ground_size"), py::arg("triples"));

    m.def(
        "gen_split",
        [](unsigned level, std::size_t clique, std::size_t indep, std::uint64_t seed, bool k14_free, double density) {
            GeneratorConfig cfg;
            cfg.level = level;
            cfg.clique_size = clique;
            cfg.independent_size = indep;
            cfg.seed = seed;
            cfg.k14_free = k14_free;
            cfg.density = density;
            return gen_split(cfg);
        },
        py::arg("level"), py::arg("clique"), py::arg("indep"), py::arg("seed"), py::arg("k14_free") = false,
        py::arg("density") = 0.3);

    m.def(
        "gen_x3c",
        [](std::size_t q, std::size_t triples, bool plant, std::uint64_t seed) {
            return gen_x3c(q, triples, plant, seed).triples();
        },
        py::arg("q"), py::arg("triples"), py::arg("plant_cover"), py::arg("seed"));
}
