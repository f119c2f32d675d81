#pragma once

#include <string>

#include "hiercon/dynamics.hpp"
#include "hiercon/graph.hpp"
#include "hiercon/spectral.hpp"
#include "hiercon/sweep.hpp"

namespace hiercon {

/// Shortest round-trip decimal form; '.' separator, deterministic.
std::string fmt_double(double v);

const char* to_string(Protocol p);
const char* to_string(Verdict v);
const char* to_string(TraceVerdict v);
const char* to_string(Consistency c);

Protocol protocol_from_string(const std::string& s);

// Graph spec files: {"n": int, "dag_edges": [[child,parent,weight],...],
// "reverse_edges": [[child,parent,weight],...]}, one-based indices. Parsing
// is strict: all three fields required, unknown fields rejected, and the
// result passes the same validation as build_dag/add_reverse_edges.
MixedGraph graph_from_json(const std::string& text);
MixedGraph load_graph_file(const std::string& path);
std::string graph_to_json(const MixedGraph& m);
void save_graph_file(const MixedGraph& m, const std::string& path);

/// Analysis report as JSON; eigenvalues serialize as [re, im] pairs.
std::string report_to_json(const MixedGraph& m, const SpectralReport& report,
                           const GainPair& gains, Protocol protocol,
                           const VerdictResult& verdict);

/// Trace CSV: t, x_1..x_n, v_1..v_n, pos_disagreement, vel_disagreement.
std::string trace_to_csv(const SimulationTrace& trace);

/// Verdict sidecar for a simulation run.
std::string trace_verdict_to_json(const SimulationTrace& trace, const GainPair& gains,
                                  Protocol protocol, const SimulationConfig& cfg);

/// One row per swept size; sim columns are blank when not simulated.
std::string sweep_to_csv(const SweepResult& result);

/// Full sweep structure; eigenvalues included only when full is set.
std::string sweep_to_json(const FamilySpec& spec, const GainPair& gains,
                          const SweepResult& result, bool full);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace hiercon
