#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "hiercon/errors.hpp"
#include "hiercon/io.hpp"
#include "helpers.hpp"

using namespace hiercon;
using hiercon::testing::ring_mixed;

namespace {

errc parse_code(const std::string& text) {
    try {
        (void)graph_from_json(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return errc::parse_error;
}

}  // namespace

TEST_CASE("graph JSON round trip preserves structure") {
    const MixedGraph m = gen_random_mixed(9, 0.3, 6, {0.25, 1.75}, 404);
    CHECK(graph_from_json(graph_to_json(m)) == m);
    CHECK(graph_to_json(m) == graph_to_json(m));
}

TEST_CASE("graph JSON parsing is strict") {
    CHECK(parse_code("not json at all") == errc::parse_error);
    CHECK(parse_code("[1,2,3]") == errc::parse_error);
    CHECK(parse_code(R"({"n":3,"dag_edges":[]})") == errc::parse_error);
    CHECK(parse_code(R"({"n":3,"dag_edges":[],"reverse_edges":[],"extra":1})") ==
          errc::parse_error);
    CHECK(parse_code(R"({"n":3.5,"dag_edges":[],"reverse_edges":[]})") == errc::parse_error);
    CHECK(parse_code(R"({"n":3,"dag_edges":[[2,1]],"reverse_edges":[]})") ==
          errc::parse_error);
    CHECK(parse_code(R"({"n":3,"dag_edges":[[2.5,1,1.0]],"reverse_edges":[]})") ==
          errc::parse_error);
    // validation errors surface with their own codes
    CHECK(parse_code(R"({"n":3,"dag_edges":[[1,2,1.0]],"reverse_edges":[]})") ==
          errc::edge_order_violation);
    CHECK(parse_code(R"({"n":3,"dag_edges":[[2,1,1.0]],"reverse_edges":[[2,3,0.0]]})") ==
          errc::non_positive_weight);
    CHECK(parse_code(R"({"n":2,"dag_edges":[],"reverse_edges":[]})") ==
          errc::too_few_vertices);
}

TEST_CASE("fmt_double emits shortest round-trip decimals") {
    CHECK(fmt_double(0.5) == "0.5");
    CHECK(fmt_double(1.0) == "1");
    CHECK(fmt_double(-0.1) == "-0.1");
    CHECK(std::stod(fmt_double(4.736067977499789)) == 4.736067977499789);
}

TEST_CASE("trace CSV layout") {
    std::mt19937_64 rng(66);
    const auto x0 = hiercon::testing::random_vector(4, rng);
    const auto v0 = hiercon::testing::random_vector(4, rng);
    SimulationConfig cfg;
    cfg.t_max = 1.0;
    cfg.sample_stride = 200;
    const auto trace =
        simulate(MixedGraph{gen_path(4, 1.0), {}}, {1, 1}, Protocol::Relative, x0, v0, cfg);

    const std::string csv = trace_to_csv(trace);
    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "t,x_1,x_2,x_3,x_4,v_1,v_2,v_3,v_4,pos_disagreement,vel_disagreement");
    std::size_t rows = 0;
    for (std::string line; std::getline(lines, line);) ++rows;
    CHECK(rows == trace.times.size());

    const std::string sidecar = trace_verdict_to_json(trace, {1, 1}, Protocol::Relative, cfg);
    CHECK(sidecar.find("\"verdict\"") != std::string::npos);
    CHECK(sidecar.find("\"overflow\": false") != std::string::npos);
}

TEST_CASE("report JSON serializes eigenvalues as [re, im] pairs") {
    const MixedGraph m = ring_mixed(4);
    const SpectralReport report = make_spectral_report(m);
    const VerdictResult verdict = consensus_verdict(report, {1, 1}, Protocol::Absolute);
    const auto doc = nlohmann::json::parse(
        report_to_json(m, report, {1, 1}, Protocol::Absolute, verdict));
    CHECK(doc["reverse_span"]["s"] == 3);
    REQUIRE(doc["eigenvalues"].is_array());
    REQUIRE(doc["eigenvalues"].size() == 4);
    Spectrum parsed;
    for (const auto& pair : doc["eigenvalues"]) {
        REQUIRE(pair.size() == 2);
        parsed.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    CHECK(hiercon::testing::max_multiset_distance(parsed, report.spectrum) == 0.0);
}

TEST_CASE("sweep CSV has one row per record and blank sim columns when off") {
    const FamilySpec spec{PathRingFamily{}, NRange{3, 8, 1}, 0};
    const SweepResult result = run_sweep(spec, {1.0, 2.0}, false, {});
    const std::string csv = sweep_to_csv(result);
    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    CHECK(header.substr(0, 4) == "n,s,");
    std::size_t rows = 0;
    for (std::string line; std::getline(lines, line);) {
        CHECK(line.find(",,,,,,") != std::string::npos);  // six empty sim fields
        ++rows;
    }
    CHECK(rows == result.records.size());
}
