#include "hiercon/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hiercon/errors.hpp"

namespace hiercon {

using json = nlohmann::ordered_json;

std::string fmt_double(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

const char* to_string(Protocol p) {
    return p == Protocol::Absolute ? "absolute" : "relative";
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Consensus: return "consensus";
        case Verdict::NoConsensus: return "no_consensus";
        case Verdict::Boundary: return "boundary";
    }
    return "?";
}

const char* to_string(TraceVerdict v) {
    switch (v) {
        case TraceVerdict::Converged: return "converged";
        case TraceVerdict::Diverged: return "diverged";
        case TraceVerdict::Undecided: return "undecided";
    }
    return "?";
}

const char* to_string(Consistency c) {
    switch (c) {
        case Consistency::Agree: return "agree";
        case Consistency::Disagree: return "disagree";
        case Consistency::Inconclusive: return "inconclusive";
    }
    return "?";
}

Protocol protocol_from_string(const std::string& s) {
    if (s == "absolute") return Protocol::Absolute;
    if (s == "relative") return Protocol::Relative;
    throw Error(errc::invalid_parameter, "unknown protocol '" + s + "'");
}

namespace {

std::vector<Edge> parse_edges(const json& arr, const char* field) {
    if (!arr.is_array())
        throw Error(errc::parse_error, std::string(field) + " must be an array");
    std::vector<Edge> edges;
    edges.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
            !item[1].is_number_integer() || !item[2].is_number())
            throw Error(errc::parse_error,
                        std::string(field) + " entries must be [child, parent, weight] triples");
        edges.push_back({item[0].get<int>(), item[1].get<int>(), item[2].get<double>()});
    }
    return edges;
}

json edges_to_json(const std::vector<Edge>& edges) {
    json arr = json::array();
    for (const Edge& e : edges) arr.push_back({e.child, e.parent, e.weight});
    return arr;
}

json gains_to_json(const GainPair& gains) {
    return json{{"alpha", gains.alpha}, {"beta", gains.beta}};
}

json complex_list(const Spectrum& spectrum) {
    json arr = json::array();
    for (const Complex& ev : spectrum) arr.push_back({ev.real(), ev.imag()});
    return arr;
}

}  // namespace

MixedGraph graph_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(errc::parse_error, e.what());
    }
    if (!doc.is_object()) throw Error(errc::parse_error, "graph spec must be a JSON object");
    for (const auto& [key, value] : doc.items())
        if (key != "n" && key != "dag_edges" && key != "reverse_edges")
            throw Error(errc::parse_error, "unknown field '" + key + "'");
    if (!doc.contains("n") || !doc.contains("dag_edges") || !doc.contains("reverse_edges"))
        throw Error(errc::parse_error, "graph spec needs n, dag_edges and reverse_edges");
    if (!doc["n"].is_number_integer())
        throw Error(errc::parse_error, "n must be an integer");

    HierarchicalGraph g =
        build_dag(doc["n"].get<int>(), parse_edges(doc["dag_edges"], "dag_edges"));
    return add_reverse_edges(std::move(g),
                             parse_edges(doc["reverse_edges"], "reverse_edges"));
}

MixedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::io_error, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return graph_from_json(buf.str());
}

std::string graph_to_json(const MixedGraph& m) {
    json doc{{"n", m.n()},
             {"dag_edges", edges_to_json(m.base.dag_edges)},
             {"reverse_edges", edges_to_json(m.reverse_edges)}};
    return doc.dump(2) + "\n";
}

void save_graph_file(const MixedGraph& m, const std::string& path) {
    write_text_file(path, graph_to_json(m));
}

std::string report_to_json(const MixedGraph& m, const SpectralReport& report,
                           const GainPair& gains, Protocol protocol,
                           const VerdictResult& verdict) {
    json span = nullptr;
    if (!m.reverse_edges.empty()) {
        int theta = m.n(), phi = 1;
        for (const Edge& e : m.reverse_edges) {
            theta = std::min(theta, e.child);
            phi = std::max(phi, e.parent);
        }
        span = json{{"theta", theta}, {"phi", phi}, {"s", phi - theta}};
    }
    json doc{{"n", m.n()},
             {"has_spanning_tree", report.spanning_tree},
             {"reverse_span", span},
             {"eigenvalues", complex_list(report.spectrum)},
             {"abs_criterion", report.abs_criterion},
             {"rel_criterion", report.rel_criterion},
             {"gershgorin_bound", report.gershgorin_bound},
             {"gains", gains_to_json(gains)},
             {"protocol", to_string(protocol)},
             {"verdict", to_string(verdict.verdict)},
             {"margin", verdict.margin}};
    return doc.dump(2) + "\n";
}

std::string trace_to_csv(const SimulationTrace& trace) {
    std::ostringstream out;
    const int n = trace.positions.empty() ? 0 : static_cast<int>(trace.positions.front().size());
    out << "t";
    for (int i = 1; i <= n; ++i) out << ",x_" << i;
    for (int i = 1; i <= n; ++i) out << ",v_" << i;
    out << ",pos_disagreement,vel_disagreement\n";
    for (std::size_t k = 0; k < trace.times.size(); ++k) {
        out << fmt_double(trace.times[k]);
        for (int i = 0; i < n; ++i) out << ',' << fmt_double(trace.positions[k][i]);
        for (int i = 0; i < n; ++i) out << ',' << fmt_double(trace.velocities[k][i]);
        out << ',' << fmt_double(trace.pos_disagreement[k]) << ','
            << fmt_double(trace.vel_disagreement[k]) << '\n';
    }
    return out.str();
}

std::string trace_verdict_to_json(const SimulationTrace& trace, const GainPair& gains,
                                  Protocol protocol, const SimulationConfig& cfg) {
    json doc{{"verdict", to_string(trace.verdict)},
             {"time", trace.verdict_time},
             {"overflow", trace.overflow},
             {"protocol", to_string(protocol)},
             {"gains", gains_to_json(gains)},
             {"config", json{{"dt", cfg.dt},
                             {"t_max", cfg.t_max},
                             {"conv_tol", cfg.conv_tol},
                             {"div_tol", cfg.div_tol},
                             {"sample_stride", cfg.sample_stride}}},
             {"final", json{{"pos_disagreement",
                             trace.pos_disagreement.empty() ? 0.0 : trace.pos_disagreement.back()},
                            {"vel_disagreement",
                             trace.vel_disagreement.empty() ? 0.0
                                                            : trace.vel_disagreement.back()}}}};
    return doc.dump(2) + "\n";
}

namespace {

void sim_columns(std::ostringstream& out, const std::optional<SimOutcome>& sim) {
    if (sim)
        out << ',' << to_string(sim->verdict) << ',' << fmt_double(sim->time) << ','
            << to_string(sim->consistency);
    else
        out << ",,,";
}

json sim_to_json(const SimOutcome& sim) {
    return json{{"verdict", to_string(sim.verdict)},
                {"time", sim.time},
                {"consistency", to_string(sim.consistency)}};
}

json family_to_json(const FamilySpec& spec) {
    json doc = std::visit(
        [](const auto& family) -> json {
            using F = std::decay_t<decltype(family)>;
            if constexpr (std::is_same_v<F, PathRingFamily>) {
                return json{{"kind", "path-ring"},
                            {"weight", family.weight},
                            {"reverse_weight", family.reverse_weight}};
            } else if constexpr (std::is_same_v<F, StarFamily>) {
                return json{{"kind", "star"},
                            {"rho", family.rho},
                            {"reverse_weight_low", family.reverse_weights.low},
                            {"reverse_weight_high", family.reverse_weights.high},
                            {"max_reverse", family.max_reverse}};
            } else {
                return json{{"kind", "random"},
                            {"dag_density", family.dag_density},
                            {"zeta_cap", family.zeta_cap},
                            {"xi_cap", family.xi_cap},
                            {"weight_low", family.weights.low},
                            {"weight_high", family.weights.high}};
            }
        },
        spec.family);
    doc["n_start"] = spec.n_range.start;
    doc["n_stop"] = spec.n_range.stop;
    doc["n_stride"] = spec.n_range.stride;
    doc["seed"] = spec.seed;
    return doc;
}

}  // namespace

std::string sweep_to_csv(const SweepResult& result) {
    std::ostringstream out;
    out << "n,s,abs_criterion,rel_criterion,gershgorin_bound,abs_verdict,abs_margin,"
           "rel_verdict,rel_margin,sim_abs_verdict,sim_abs_time,consistency_abs,"
           "sim_rel_verdict,sim_rel_time,consistency_rel\n";
    for (const SweepRecord& rec : result.records) {
        out << rec.n << ',';
        if (rec.s) out << *rec.s;
        out << ',' << fmt_double(rec.abs_criterion) << ',' << fmt_double(rec.rel_criterion)
            << ',' << fmt_double(rec.gershgorin_bound) << ','
            << to_string(rec.abs_verdict.verdict) << ',' << fmt_double(rec.abs_verdict.margin)
            << ',' << to_string(rec.rel_verdict.verdict) << ','
            << fmt_double(rec.rel_verdict.margin);
        sim_columns(out, rec.abs_sim);
        sim_columns(out, rec.rel_sim);
        out << '\n';
    }
    return out.str();
}

std::string sweep_to_json(const FamilySpec& spec, const GainPair& gains,
                          const SweepResult& result, bool full) {
    json records = json::array();
    for (const SweepRecord& rec : result.records) {
        json r{{"n", rec.n},
               {"s", rec.s ? json(*rec.s) : json(nullptr)},
               {"abs_criterion", rec.abs_criterion},
               {"rel_criterion", rec.rel_criterion},
               {"gershgorin_bound", rec.gershgorin_bound},
               {"abs_verdict", to_string(rec.abs_verdict.verdict)},
               {"abs_margin", rec.abs_verdict.margin},
               {"rel_verdict", to_string(rec.rel_verdict.verdict)},
               {"rel_margin", rec.rel_verdict.margin}};
        if (rec.abs_sim) r["sim_absolute"] = sim_to_json(*rec.abs_sim);
        if (rec.rel_sim) r["sim_relative"] = sim_to_json(*rec.rel_sim);
        if (full) r["eigenvalues"] = complex_list(rec.spectrum);
        records.push_back(std::move(r));
    }
    json doc{{"family", family_to_json(spec)},
             {"gains", gains_to_json(gains)},
             {"records", std::move(records)},
             {"breaking_size",
              json{{"absolute", result.breaking_abs ? json(*result.breaking_abs) : json(nullptr)},
                   {"relative",
                    result.breaking_rel ? json(*result.breaking_rel) : json(nullptr)}}},
             {"boundary_sizes",
              json{{"absolute", result.boundary_abs}, {"relative", result.boundary_rel}}}};
    return doc.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(errc::io_error, "cannot write " + path);
    out << content;
    if (!out) throw Error(errc::io_error, "write failed for " + path);
}

}  // namespace hiercon
