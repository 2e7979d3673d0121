#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rslocal/config.hpp"
#include "rslocal/errors.hpp"
#include "rslocal/pipelines.hpp"
#include "rslocal/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitConfigError = 2;
constexpr int kExitCheckFailure = 3;
constexpr int kExitInternalError = 4;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification pipelines for local Rankin-Selberg factors"};
    app.set_version_flag("--version", std::string("verify (rslocal) ") + rslocal::kArtifactVersion);

    std::string pipeline;
    std::string config_path;
    std::string out_path;
    std::uint64_t seed = 0;
    unsigned trunc = 0;

    app.add_option("pipeline", pipeline,
                   "Pipeline to run (or 'list-pipelines' to print the available names)")
        ->required();
    app.add_option("--config", config_path, "Run configuration file");
    app.add_option("--out", out_path, "Report output path (overrides the config's 'report')");
    auto* seed_opt = app.add_option("--seed", seed, "Seed override for randomized sweeps");
    auto* trunc_opt = app.add_option("--trunc", trunc, "Truncation degree override");

    CLI11_PARSE(app, argc, argv);
    const bool seed_given = seed_opt->count() > 0;
    const bool trunc_given = trunc_opt->count() > 0;

    if (pipeline == "list-pipelines") {
        for (const std::string& name : rslocal::pipeline_names()) std::cout << name << "\n";
        return kExitPass;
    }

    try {
        if (config_path.empty())
            throw rslocal::ConfigError("--config is required (see README for the grammar)");
        rslocal::RunConfig cfg = rslocal::parse_config_file(config_path);
        if (cfg.pipeline != pipeline)
            throw rslocal::ConfigError("config file is for pipeline '" + cfg.pipeline +
                                       "', but '" + pipeline + "' was requested");
        if (seed_given) cfg.seed = seed;
        if (trunc_given) {
            cfg.trunc = trunc;
            rslocal::validate_config(cfg);
        }
        if (!out_path.empty()) cfg.report_path = out_path;

        const auto start = std::chrono::steady_clock::now();
        const rslocal::Report report = rslocal::run_pipeline(cfg);
        const auto elapsed = std::chrono::duration<double>(
            std::chrono::steady_clock::now() - start);

        if (!cfg.report_path.empty()) {
            report.write_file(cfg.report_path);
            std::cout << "# report: " << cfg.report_path << "\n" << report.summary();
        } else {
            std::cout << report.render();
        }
        std::printf("# duration: %.3fs\n", elapsed.count());
        return report.overall_pass() ? kExitPass : kExitCheckFailure;
    } catch (const rslocal::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const rslocal::UnsupportedDomainError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const rslocal::InternalInvariantError& e) {
        std::cerr << "internal invariant failure: " << e.what() << "\n";
        return kExitInternalError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    }
}
