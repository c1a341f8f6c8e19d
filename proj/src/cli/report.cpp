#include "report.hpp"

#include "splitsteiner/structure.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

namespace splitsteiner::cli {

Json ids_json(std::span<const VertexId> ids)
{
    Json out = Json::array();
    for (VertexId v : ids)
        out.push_back(v + 1);
    return out;
}

Json edges_json(std::span<const Edge> edges)
{
    Json out = Json::array();
    for (const auto& e : edges)
        out.push_back({e.u + 1, e.v + 1});
    return out;
}

Json obstruction_json(const Obstruction& o)
{
    return Json{{"kind", std::string(to_string(o.kind))}, {"vertices", ids_json(o.vertices)}};
}

Json star_json(const std::optional<StarWitness>& w)
{
    if (!w)
        return nullptr;
    return Json{{"center", w->center + 1}, {"leaves", ids_json(w->leaves)}};
}

std::string join_ids(std::span<const VertexId> ids)
{
    std::string s;
    for (VertexId v : ids)
        s += (s.empty() ? "" : " ") + std::to_string(v + 1);
    return s;
}

std::string describe_not_split(const Obstruction& o)
{
    return "graph is not split: induced " + std::string(to_string(o.kind)) + " on " + join_ids(o.vertices);
}

std::string describe_hard(const StarWitness& w)
{
    return "induced K_{1," + std::to_string(w.leaves.size()) + "} centered at " + std::to_string(w.center + 1) +
           " with leaves " + join_ids(w.leaves);
}

namespace {

template <typename T>
Json optional_json(const std::optional<T>& v)
{
    if (!v)
        return nullptr;
    return *v;
}

} // namespace

Json solve_json(const SolveOutcome& outcome)
{
    const auto& r = outcome.result;
    const auto& t = outcome.trace;
    Json out;
    out["size"] = r.steiner_set.size();
    out["steiner_set"] = ids_json(r.steiner_set);
    out["tree_edges"] = edges_json(r.tree_edges);
    out["regime"] = std::string(to_string(t.regime));
    out["alpha_m"] = optional_json(t.alpha_m);
    out["alpha_m2"] = optional_json(t.alpha_m2);
    out["chosen_v3"] = t.chosen_v3_vertex ? Json(*t.chosen_v3_vertex + 1) : Json(nullptr);
    out["optimal"] = r.optimal;
    return out;
}

Json check_json(const SteinerInstance& inst)
{
    const auto& g = inst.graph();
    Json out;
    out["vertices"] = g.vertex_count();
    out["edges"] = g.edge_count();
    out["terminals"] = inst.terminals().size();
    auto parsed = split_partition(g);
    if (auto* ns = std::get_if<NotSplit>(&parsed)) {
        out["split"] = false;
        out["obstruction"] = obstruction_json(ns->obstruction);
        return out;
    }
    const auto& sp = std::get<SplitPartition>(parsed);
    out["split"] = true;
    out["clique"] = ids_json(sp.clique());
    out["independent"] = ids_json(sp.independent());
    out["delta_i"] = sp.delta_i();
    out["v3"] = ids_json(sp.v3());

    const auto claw = find_induced_star(sp, 3);
    const auto k14 = find_induced_star(sp, 4);
    const auto k15 = find_induced_star(sp, 5);
    out["claw_free"] = !claw.has_value();
    out["claw_witness"] = star_json(claw);
    out["k14_free"] = !k14.has_value();
    out["k14_witness"] = star_json(k14);
    out["k15_free"] = !k15.has_value();
    out["k15_witness"] = star_json(k15);
    return out;
}

Json oracle_json(const OracleResult& r, Universe universe)
{
    Json out;
    out["min_size"] = r.min_size;
    out["witness"] = ids_json(r.witness);
    out["explored"] = r.explored;
    out["universe"] = universe == Universe::AllVertices ? "all" : "clique";
    return out;
}

namespace {

struct BenchRecord {
    std::string status = "ok";
    std::string message;
    std::optional<SolveOutcome> outcome;
    bool verified = false;
    double time_ms = 0.0;
};

BenchRecord bench_one(const std::filesystem::path& file, const BenchOptions& opts)
{
    BenchRecord rec;
    std::optional<SteinerInstance> inst;
    try {
        std::ifstream in(file);
        if (!in)
            throw Error("cannot open " + file.string());
        inst = parse_instance(in);
    } catch (const Error& e) {
        rec.status = "parse-error";
        rec.message = e.what();
        return rec;
    }
    using clock = std::chrono::steady_clock;
    double total = 0.0;
    try {
        for (std::size_t i = 0; i < opts.repeat; ++i) {
            const auto start = clock::now();
            auto outcome = solve(*inst, opts.solve);
            total += std::chrono::duration<double, std::milli>(clock::now() - start).count();
            rec.outcome = std::move(outcome);
        }
    } catch (const NotSplitError& e) {
        rec.status = "not-split";
        rec.message = describe_not_split(e.obstruction());
        return rec;
    } catch (const HardInstanceError& e) {
        rec.status = "hard";
        rec.message = describe_hard(e.witness());
        return rec;
    } catch (const Error& e) {
        rec.status = "error";
        rec.message = e.what();
        return rec;
    }
    rec.time_ms = total / static_cast<double>(std::max<std::size_t>(opts.repeat, 1));
    rec.verified = verify_solution(*inst, rec.outcome->result.steiner_set);
    return rec;
}

} // namespace

std::vector<Json> bench_report(const BenchOptions& opts)
{
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(opts.dir))
        if (entry.is_regular_file() && entry.path().extension() == ".sstp")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });

    if (files.empty())
        return {};

    std::vector<BenchRecord> records(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (auto i = next++; i < files.size(); i = next++)
            records[i] = bench_one(files[i], opts);
    };
    const auto jobs = std::clamp<std::size_t>(opts.jobs, 1, std::max<std::size_t>(files.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t j = 1; j < jobs; ++j)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    std::vector<Json> out;
    std::size_t ok = 0, verified = 0;
    double total_ms = 0.0;
    for (std::size_t i = 0; i < files.size(); ++i) {
        const auto& rec = records[i];
        Json j;
        j["file"] = files[i].filename().string();
        j["status"] = rec.status;
        if (rec.outcome) {
            j["regime"] = std::string(to_string(rec.outcome->trace.regime));
            j["size"] = rec.outcome->result.steiner_set.size();
        } else {
            j["regime"] = nullptr;
            j["size"] = nullptr;
        }
        j["verified"] = rec.verified;
        j["time_ms"] = opts.timing && rec.outcome ? Json(rec.time_ms) : Json(nullptr);
        j["repeat"] = opts.repeat;
        if (!rec.message.empty())
            j["message"] = rec.message;
        ok += rec.status == "ok";
        verified += rec.verified;
        total_ms += rec.time_ms;
        out.push_back(std::move(j));
    }
    Json agg;
    agg["instances"] = files.size();
    agg["ok"] = ok;
    agg["failed"] = files.size() - ok;
    agg["verified"] = verified;
    agg["total_time_ms"] = opts.timing ? Json(total_ms) : Json(nullptr);
    out.push_back(Json{{"aggregate", std::move(agg)}});
    return out;
}

} // namespace splitsteiner::cli
