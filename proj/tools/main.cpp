// hiercon: build hierarchical multi-agent networks, analyze second-order
// consensus via Laplacian spectra, simulate the closed-loop dynamics, and
// sweep growing graph families under fixed gains.

#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <random>
#include <string>

#include "hiercon/errors.hpp"
#include "hiercon/io.hpp"
#include "hiercon/rng.hpp"
#include "hiercon/sweep.hpp"

namespace {

using namespace hiercon;

constexpr int kExitConsensus = 0;
constexpr int kExitError = 1;
constexpr int kExitNoConsensus = 2;
constexpr int kExitBoundary = 3;

struct RangeFlag {
    NRange range;
};

NRange parse_range(const std::string& text) {
    NRange r;
    const auto first = text.find(':');
    if (first == std::string::npos)
        throw Error(errc::invalid_parameter, "--n expects START:STOP[:STRIDE]");
    const auto second = text.find(':', first + 1);
    try {
        r.start = std::stoi(text.substr(0, first));
        r.stop = std::stoi(text.substr(first + 1, second - first - 1));
        if (second != std::string::npos) r.stride = std::stoi(text.substr(second + 1));
    } catch (const std::exception&) {
        throw Error(errc::invalid_parameter, "--n expects integer START:STOP[:STRIDE]");
    }
    if (r.start <= 2 || r.stop < r.start || r.stride < 1)
        throw Error(errc::invalid_parameter,
                    "--n range needs start > 2, stop >= start, stride >= 1");
    return r;
}

struct FamilyFlags {
    std::string kind = "path-ring";
    double weight = 1.0;
    double rev_weight = 1.0;
    double rho = 1.0;
    int rev_max = -1;
    double rev_wlo = 0.1;
    double rev_whi = 2.0;
    double density = 0.15;
    int zeta_cap = 3;
    int xi_cap = 3;
    double wlo = 0.05;
    double whi = 2.0;

    void attach(CLI::App* cmd, bool allow_plain_path) {
        std::string kinds = allow_plain_path ? "path-ring, star, random, path"
                                             : "path-ring, star, random";
        cmd->add_option("--family", kind, "Graph family: " + kinds)->capture_default_str();
        cmd->add_option("--weight", weight, "Path edge weight")->capture_default_str();
        cmd->add_option("--rev-weight", rev_weight, "Path-ring reverse edge weight")
            ->capture_default_str();
        cmd->add_option("--rho", rho, "Star hub weight")->capture_default_str();
        cmd->add_option("--rev-max", rev_max,
                        "Star: max reverse edges per instance (-1 = all pairs)")
            ->capture_default_str();
        cmd->add_option("--rev-wlo", rev_wlo, "Star reverse weight lower bound")
            ->capture_default_str();
        cmd->add_option("--rev-whi", rev_whi, "Star reverse weight upper bound")
            ->capture_default_str();
        cmd->add_option("--density", density, "Random: extra DAG edge density")
            ->capture_default_str();
        cmd->add_option("--zeta-cap", zeta_cap, "Random: max DAG in-neighbors per vertex")
            ->capture_default_str();
        cmd->add_option("--xi-cap", xi_cap, "Random: max reverse in-neighbors per vertex")
            ->capture_default_str();
        cmd->add_option("--wlo", wlo, "Random weight lower bound")->capture_default_str();
        cmd->add_option("--whi", whi, "Random weight upper bound")->capture_default_str();
    }

    FamilySpec to_spec(const NRange& range, std::uint64_t seed) const {
        FamilySpec spec;
        spec.n_range = range;
        spec.seed = seed;
        if (kind == "path-ring")
            spec.family = PathRingFamily{weight, rev_weight};
        else if (kind == "star")
            spec.family = StarFamily{rho, {rev_wlo, rev_whi}, rev_max};
        else if (kind == "random")
            spec.family = RandomMixedFamily{density, zeta_cap, xi_cap, {wlo, whi}};
        else
            throw Error(errc::invalid_parameter, "unknown family '" + kind + "'");
        return spec;
    }
};

void write_file_or_stdout(const std::string& path, const std::string& content) {
    if (path == "-")
        std::cout << content;
    else
        write_text_file(path, content);
}

std::filesystem::path prepare_out_dir(const std::string& dir) {
    std::filesystem::path p(dir);
    std::error_code ec;
    std::filesystem::create_directories(p, ec);
    if (ec) throw Error(errc::io_error, "cannot create output directory " + dir);
    return p;
}

int run_analyze(const std::string& graph_file, const GainPair& gains,
                const std::string& protocol_name, double zero_tol, double margin_tol) {
    const MixedGraph m = load_graph_file(graph_file);
    const Protocol protocol = protocol_from_string(protocol_name);
    const SpectralReport report = make_spectral_report(m, zero_tol);
    const VerdictResult verdict = consensus_verdict(report, gains, protocol, margin_tol);
    std::cout << report_to_json(m, report, gains, protocol, verdict);
    switch (verdict.verdict) {
        case Verdict::Consensus: return kExitConsensus;
        case Verdict::NoConsensus: return kExitNoConsensus;
        case Verdict::Boundary: return kExitBoundary;
    }
    return kExitError;
}

int run_simulate(const std::string& graph_file, const GainPair& gains,
                 const std::string& protocol_name, const SimulationConfig& cfg,
                 bool have_x0, double x0_const, bool have_v0, double v0_const,
                 std::uint64_t seed, const std::string& out_dir) {
    const MixedGraph m = load_graph_file(graph_file);
    const Protocol protocol = protocol_from_string(protocol_name);
    const int n = m.n();

    std::mt19937_64 rng(splitmix64(seed));
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    Vector x0(n), v0(n);
    for (int i = 0; i < n; ++i) x0[i] = have_x0 ? x0_const : unit(rng);
    for (int i = 0; i < n; ++i) v0[i] = have_v0 ? v0_const : unit(rng);

    const SimulationTrace trace = simulate(m, gains, protocol, x0, v0, cfg);
    const auto dir = prepare_out_dir(out_dir);
    write_text_file((dir / "trace.csv").string(), trace_to_csv(trace));
    write_text_file((dir / "verdict.json").string(),
                    trace_verdict_to_json(trace, gains, protocol, cfg));
    std::cout << "verdict: " << to_string(trace.verdict) << " at t=" << fmt_double(trace.verdict_time)
              << (trace.overflow ? " (overflow)" : "") << "\n";
    return 0;
}

int run_sweep_cmd(const FamilyFlags& family, const NRange& range, const GainPair& gains,
                  bool simulate_flag, const SimulationConfig& cfg, bool full,
                  std::uint64_t seed, const std::string& out_dir) {
    const FamilySpec spec = family.to_spec(range, seed);
    const SweepResult result = run_sweep(spec, gains, simulate_flag, cfg);
    const auto dir = prepare_out_dir(out_dir);
    write_text_file((dir / "sweep.csv").string(), sweep_to_csv(result));
    write_text_file((dir / "sweep.json").string(), sweep_to_json(spec, gains, result, full));

    auto print_breaking = [](const char* label, const std::optional<int>& size,
                             const std::vector<int>& boundary) {
        std::cout << "breaking size (" << label << "): ";
        if (size)
            std::cout << *size << "\n";
        else
            std::cout << "none\n";
        if (!boundary.empty()) {
            std::cout << "boundary sizes (" << label << "):";
            for (int n : boundary) std::cout << ' ' << n;
            std::cout << "\n";
        }
    };
    print_breaking("absolute", result.breaking_abs, result.boundary_abs);
    print_breaking("relative", result.breaking_rel, result.boundary_rel);
    return 0;
}

int run_gen(const FamilyFlags& family, int n, std::uint64_t seed, const std::string& out) {
    MixedGraph m;
    if (family.kind == "path") {
        m = MixedGraph{gen_path(n, family.weight), {}};
    } else {
        const FamilySpec spec = family.to_spec(NRange{n, n, 1}, seed);
        m = build_family_instance(spec, n);
    }
    write_file_or_stdout(out, graph_to_json(m));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hierarchical multi-agent consensus toolkit"};
    app.require_subcommand(1);

    GainPair gains;
    std::string protocol = "absolute";
    std::string graph_file;
    std::string out = ".";
    std::uint64_t seed = 0;
    double zero_tol = kZeroTol;
    double margin_tol = kMarginTol;
    SimulationConfig cfg;

    auto add_gains = [&](CLI::App* cmd) {
        cmd->add_option("--alpha", gains.alpha, "State control gain")
            ->capture_default_str();
        cmd->add_option("--beta", gains.beta, "Velocity control gain")
            ->capture_default_str();
        cmd->add_option("--protocol", protocol, "absolute or relative")
            ->capture_default_str();
    };
    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "Master seed")->envname("HIERCON_SEED");
    };

    CLI::App* analyze = app.add_subcommand(
        "analyze", "Spectral consensus analysis of a graph spec file (stdout JSON; exit code "
                   "0=consensus, 2=no consensus, 3=boundary)");
    analyze->add_option("--graph", graph_file, "Graph spec JSON file")->required();
    add_gains(analyze);
    analyze->add_option("--zero-tol", zero_tol, "Zero-eigenvalue tolerance")
        ->capture_default_str();
    analyze->add_option("--margin-tol", margin_tol, "Boundary verdict band")
        ->capture_default_str();

    CLI::App* simulate_cmd = app.add_subcommand(
        "simulate", "Integrate the closed-loop dynamics; writes trace.csv and verdict.json");
    simulate_cmd->add_option("--graph", graph_file, "Graph spec JSON file")->required();
    add_gains(simulate_cmd);
    simulate_cmd->add_option("--dt", cfg.dt, "Integration step")->capture_default_str();
    simulate_cmd->add_option("--t-max", cfg.t_max, "Time horizon")->capture_default_str();
    simulate_cmd->add_option("--conv-tol", cfg.conv_tol, "Convergence threshold")
        ->capture_default_str();
    simulate_cmd->add_option("--div-tol", cfg.div_tol, "Divergence threshold")
        ->capture_default_str();
    simulate_cmd->add_option("--stride", cfg.sample_stride, "Sample decimation")
        ->capture_default_str();
    double x0_const = 0.0, v0_const = 0.0;
    CLI::Option* x0_opt =
        simulate_cmd->add_option("--x0-const", x0_const, "Set every initial position");
    CLI::Option* v0_opt =
        simulate_cmd->add_option("--v0-const", v0_const, "Set every initial velocity");
    add_seed(simulate_cmd);
    simulate_cmd->add_option("--out", out, "Output directory")->capture_default_str();

    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "Analyze a growing graph family under fixed gains; writes sweep.csv/sweep.json");
    FamilyFlags sweep_family;
    sweep_family.attach(sweep_cmd, false);
    std::string range_text;
    sweep_cmd->add_option("--n", range_text, "Size range START:STOP[:STRIDE]")->required();
    add_gains(sweep_cmd);
    bool simulate_flag = false;
    sweep_cmd->add_flag("--simulate", simulate_flag,
                        "Also run both protocols and record consistency");
    bool full = false;
    sweep_cmd->add_flag("--full", full, "Include eigenvalues in sweep.json");
    sweep_cmd->add_option("--dt", cfg.dt, "Integration step")->capture_default_str();
    sweep_cmd->add_option("--t-max", cfg.t_max, "Time horizon")->capture_default_str();
    add_seed(sweep_cmd);
    sweep_cmd->add_option("--out", out, "Output directory")->capture_default_str();

    CLI::App* gen = app.add_subcommand("gen", "Emit a graph spec JSON file for a family instance");
    FamilyFlags gen_family;
    gen_family.attach(gen, true);
    int gen_n = 0;
    gen->add_option("--n", gen_n, "Vertex count")->required();
    add_seed(gen);
    gen->add_option("--out", out, "Output file, or - for stdout")->default_val("-");

    try {
        app.parse(argc, argv);
        if (analyze->parsed())
            return run_analyze(graph_file, gains, protocol, zero_tol, margin_tol);
        if (simulate_cmd->parsed())
            return run_simulate(graph_file, gains, protocol, cfg, static_cast<bool>(*x0_opt),
                                x0_const, static_cast<bool>(*v0_opt), v0_const, seed, out);
        if (sweep_cmd->parsed())
            return run_sweep_cmd(sweep_family, parse_range(range_text), gains, simulate_flag,
                                 cfg, full, seed, out);
        if (gen->parsed()) return run_gen(gen_family, gen_n, seed, out);
        return kExitError;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
