// spcppt: classify bipartite matrices, compute canonical forms and
// reductions, and rerun the reproducible constructions and sweeps.
//
// Exit codes: 0 all assertions pass, 1 an assertion fails, 2 parse error,
// 3 violated precondition, 4 algorithm-specific error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "spcppt/commands.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw spcppt::Error(spcppt::ErrorCode::ParseError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SPC / PPT / separability toolkit for bipartite matrices"};
    app.require_subcommand(1);

    double tol = spcppt::kDefaultTol;
    std::string output = "text";
    bool timing = false;
    app.add_option("--tol", tol, "Relative tolerance")->capture_default_str();
    app.add_option("--output", output, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_flag("--timing", timing, "Append elapsed time to the report");

    auto* analyze = app.add_subcommand("analyze", "Classify a matrix file");
    std::string analyze_path;
    analyze->add_option("path", analyze_path, "Matrix file")->required();

    auto* canonical = app.add_subcommand("canonical", "Canonical form (2x2 SPC rank 4) or rank-3 reduction (2xm)");
    std::string canonical_path;
    std::string mode = "canonical";
    double epsilon = 1e-3;
    canonical->add_option("path", canonical_path, "Matrix file")->required();
    canonical->add_option("--mode", mode, "canonical or reduce")
        ->check(CLI::IsMember({"canonical", "reduce"}))
        ->capture_default_str();
    canonical->add_option("--epsilon", epsilon, "Perturbation for reduce mode")->capture_default_str();

    auto* repro = app.add_subcommand("reproduce", "Rerun a construction or sweep");
    spcppt::ReproduceParams params;
    std::optional<int> samples, n, k, m, threads;
    std::optional<double> alpha;
    repro->add_option("target", params.target, "Target")->required()->check(CLI::IsMember(spcppt::reproduce_targets()));
    repro->add_option("--seed", params.seed, "Base seed; sample i uses seed + i")->capture_default_str();
    repro->add_option("--samples", samples, "Samples per sweep");
    repro->add_option("--n", n, "Depth for bases / flip-family (k = 2^n)");
    repro->add_option("--alpha", alpha, "Identity weight for flip-family");
    repro->add_option("--k", k, "Factor dimension for tg-sweep / spc-ppt-sweep");
    repro->add_option("--m", m, "Right factor dimension for rank3-sweep");
    repro->add_option("--threads", threads, "Worker threads (output is independent of this)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        spcppt::ReportDocument doc;
        if (*analyze) {
            doc = spcppt::analyze_report(slurp(analyze_path), tol);
        } else if (*canonical) {
            const auto which = mode == "reduce" ? spcppt::CanonicalMode::Reduce : spcppt::CanonicalMode::Canonical;
            doc = spcppt::canonical_report(slurp(canonical_path), which, tol, epsilon);
        } else {
            params.tol = tol;
            params.samples = samples;
            params.n = n;
            params.k = k;
            params.m = m;
            params.alpha = alpha;
            if (threads) {
                if (*threads < 1) throw spcppt::Error(spcppt::ErrorCode::BadParams, "--threads must be positive");
                params.threads = static_cast<unsigned>(*threads);
            }
            doc = spcppt::reproduce(params);
        }
        if (timing) {
            doc.elapsed_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }
        std::cout << (output == "json" ? spcppt::render_json(doc) : spcppt::render_text(doc));
        return doc.exit_code();
    } catch (const spcppt::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return spcppt::exit_code_for(e.code());
    }
}
