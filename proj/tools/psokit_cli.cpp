// Benchmark harness CLI: single cells, full grids, dimension sweeps and the
// per-dimension selection self-check, all driven by a config file with flag
// overrides.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "psokit/psokit.hpp"

namespace {

struct cli_overrides {
    std::string config_path;
    std::vector<std::string> objectives;
    std::vector<int> dims;
    std::vector<std::string> variants;
    int particles = 0;
    int iterations = 0;
    int runs = 0;
    double gamma = -1.0;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::vector<double> thresholds;
    std::string out;
    std::string format;
    int threads = 0;
};

void add_common_options(CLI::App* cmd, cli_overrides& o) {
    // CLI11 turns an empty value string into 0 for numeric targets; Number
    // rejects it up front so --gamma '' cannot silently disable the trigger.
    cmd->add_option("--config", o.config_path, "config file (key = value lines)");
    cmd->add_option("--objective", o.objectives, "objective names")->delimiter(',');
    cmd->add_option("--dim", o.dims, "dimensions")->delimiter(',')->check(CLI::Number);
    cmd->add_option("--particles", o.particles, "swarm size")->check(CLI::Number);
    cmd->add_option("--variant", o.variants, "variant names")->delimiter(',');
    cmd->add_option("--iterations", o.iterations, "iterations per run")->check(CLI::Number);
    cmd->add_option("--runs", o.runs, "runs per cell")->check(CLI::Number);
    cmd->add_option("--gamma", o.gamma, "event-trigger threshold")->check(CLI::Number);
    cmd->add_option("--seed", o.seed, "base seed (run i uses seed + i)")->check(CLI::Number);
    cmd->add_option("--thresholds", o.thresholds, "time-to-threshold costs")
        ->delimiter(',')
        ->check(CLI::Number);
    cmd->add_option("--out", o.out, "output path (default stdout)");
    cmd->add_option("--format", o.format, "csv or markdown");
    cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)")->check(CLI::Number);
}

psokit::experiment_config load_config(const CLI::App* cmd, const cli_overrides& o) {
    psokit::experiment_config cfg;
    bool have_objective = false;
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path);
        if (!in) throw psokit::config_error("cannot open config file '" + o.config_path + "'");
        std::ostringstream text;
        text << in.rdbuf();
        cfg = psokit::parse_config(text.str());
        have_objective = true;
    }
    if (cmd->count("--objective")) {
        cfg.objectives.clear();
        for (const auto& name : o.objectives)
            cfg.objectives.push_back(psokit::parse_objective(name));
        have_objective = true;
    }
    if (cmd->count("--dim")) cfg.dims = o.dims;
    if (cmd->count("--variant")) {
        cfg.variants.clear();
        for (const auto& name : o.variants) cfg.variants.push_back(psokit::parse_variant(name));
    }
    if (cmd->count("--particles")) cfg.n_particles = o.particles;
    if (cmd->count("--iterations")) cfg.iterations = o.iterations;
    if (cmd->count("--runs")) cfg.runs = o.runs;
    if (cmd->count("--gamma")) {
        cfg.gamma = o.gamma;
        cfg.gamma_per_dimension.clear();
    }
    if (cmd->count("--seed")) cfg.base_seed = o.seed;
    if (cmd->count("--thresholds")) cfg.thresholds = o.thresholds;
    if (cmd->count("--out")) cfg.out = o.out;
    if (cmd->count("--format")) cfg.format = psokit::parse_report_format(o.format);
    if (!have_objective) throw psokit::config_error("config needs at least one objective");
    cfg.validate();
    return cfg;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw psokit::config_error("cannot write output file '" + path + "'");
    out << text;
}

int emit_grid_result(const psokit::grid_result& result, const psokit::experiment_config& cfg) {
    std::string text = psokit::emit_grid_report(result.rows, cfg.format);
    if (!cfg.thresholds.empty()) {
        if (cfg.out.empty()) {
            text += "\n" + psokit::emit_threshold_report(result.thresholds, cfg.format);
        } else {
            const char* ext = cfg.format == psokit::report_format::csv ? ".thresholds.csv"
                                                                       : ".thresholds.md";
            write_output(cfg.out + ext, psokit::emit_threshold_report(result.thresholds, cfg.format));
        }
    }
    write_output(cfg.out, text);
    for (const auto& failure : result.failures) std::cerr << "cell failed: " << failure << "\n";
    return result.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"particle swarm benchmark harness"};
    app.require_subcommand(1);

    cli_overrides run_opts, grid_opts, sweep_opts;
    std::vector<int> sweep_dims;
    int oracle_instances = 200;
    std::uint64_t oracle_seed = 1;

    auto* run_cmd = app.add_subcommand("run", "run a single (objective, dim, variant) cell");
    add_common_options(run_cmd, run_opts);

    auto* grid_cmd = app.add_subcommand("grid", "run the full objective x dim x variant grid");
    add_common_options(grid_cmd, grid_opts);

    auto* sweep_cmd = app.add_subcommand("sweep", "mean cost per variant across dimensions");
    add_common_options(sweep_cmd, sweep_opts);
    sweep_cmd->add_option("--dims", sweep_dims, "dimensions to sweep")
        ->delimiter(',')
        ->required();

    auto* oracle_cmd =
        app.add_subcommand("oracle-check", "verify per-dimension selection against brute force");
    oracle_cmd->add_option("--instances", oracle_instances, "random instances to check");
    oracle_cmd->add_option("--seed", oracle_seed, "seed for instance generation");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            const auto cfg = load_config(run_cmd, run_opts);
            if (cfg.objectives.size() != 1 || cfg.dims.size() != 1 || cfg.variants.size() != 1)
                throw psokit::config_error(
                    "run wants exactly one objective, one dim and one variant (use grid for more)");
            return emit_grid_result(psokit::run_grid(cfg, run_opts.threads), cfg);
        }
        if (grid_cmd->parsed()) {
            const auto cfg = load_config(grid_cmd, grid_opts);
            return emit_grid_result(psokit::run_grid(cfg, grid_opts.threads), cfg);
        }
        if (sweep_cmd->parsed()) {
            const auto cfg = load_config(sweep_cmd, sweep_opts);
            const auto result =
                psokit::dimension_robustness_sweep(cfg, sweep_dims, sweep_opts.threads);
            write_output(cfg.out, psokit::emit_sweep_report(result.rows, cfg.format));
            for (const auto& failure : result.failures)
                std::cerr << "cell failed: " << failure << "\n";
            return result.ok() ? 0 : 1;
        }
        // oracle-check
        const int mismatches = psokit::oracle_check(oracle_instances, oracle_seed, &std::cerr);
        std::cout << oracle_instances - mismatches << "/" << oracle_instances
                  << " instances matched brute force\n";
        return mismatches == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
