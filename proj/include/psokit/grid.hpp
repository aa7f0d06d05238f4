#pragma once

#include <atomic>
#include <map>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "psokit/config.hpp"
#include "psokit/engine.hpp"
#include "psokit/metrics.hpp"
#include "psokit/report.hpp"

namespace psokit {

namespace detail {

/// Run fn(0..count-1) on up to `threads` workers (0 = hardware concurrency).
/// fn must not throw; job state carries its own error slot.
template <typename Fn>
inline void run_jobs(std::size_t count, int threads, Fn&& fn) {
    unsigned n = threads > 0 ? static_cast<unsigned>(threads)
                             : std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (n > count) n = static_cast<unsigned>(count);
    if (n <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t)
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (auto& t : pool) t.join();
}

/// All runs of one (objective, dim, variant) cell, or the error that stopped them.
struct trace_bundle {
    objective_id objective = objective_id::sphere;
    int dim = 0;
    variant_key variant;
    std::vector<run_trace> traces;
    std::string error;
};

struct bundle_set {
    std::vector<trace_bundle> bundles;
    std::map<std::tuple<int, int, std::string>, std::size_t> index;

    std::size_t ensure(objective_id o, int dim, const variant_key& v) {
        const auto key = std::make_tuple(static_cast<int>(o), dim, variant_name(v));
        const auto it = index.find(key);
        if (it != index.end()) return it->second;
        bundles.push_back({o, dim, v, {}, {}});
        index.emplace(key, bundles.size() - 1);
        return bundles.size() - 1;
    }

    const trace_bundle& at(objective_id o, int dim, const variant_key& v) const {
        return bundles[index.at(std::make_tuple(static_cast<int>(o), dim, variant_name(v)))];
    }
};

inline std::string cell_label(objective_id o, int dim, const variant_key& v) {
    return std::string(objective_name(o)) + "/" + std::to_string(dim) + "/" + variant_name(v);
}

/// Execute every bundle (optionally concurrent); failures land in the error slot.
inline void execute_bundles(bundle_set& set, const experiment_config& cfg, int threads) {
    run_jobs(set.bundles.size(), threads, [&](std::size_t i) {
        auto& b = set.bundles[i];
        try {
            const objective_spec spec = make_objective(b.objective, b.dim);
            const variant_config vcfg = make_variant_config(
                b.variant, cfg.n_particles, cfg.iterations, cfg.gamma, cfg.gamma_per_dimension);
            b.traces.reserve(static_cast<std::size_t>(cfg.runs));
            for (int r = 0; r < cfg.runs; ++r)
                b.traces.push_back(run(spec, vcfg, cfg.base_seed + static_cast<std::uint64_t>(r)));
        } catch (const std::exception& e) {
            b.error = e.what();
            b.traces.clear();
        }
    });
}

} // namespace detail

/// Output of run_grid: the report rows plus per-cell failure notes.
struct grid_result {
    std::vector<grid_row> rows;
    std::vector<threshold_row> thresholds;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/*!
 * Run the full objective x dimension x variant cross product.
 *
 * Every variant's computation percentage is measured against the plain flavour
 * of its host on the same objective, dimension and seeds; those baseline runs
 * are executed once and shared between the variants that need them.  A failing
 * cell is reported in `failures` and skipped, the rest of the grid still runs.
 */
inline grid_result run_grid(const experiment_config& cfg, int threads = 0) {
    cfg.validate();

    detail::bundle_set set;
    for (auto o : cfg.objectives)
        for (int dim : cfg.dims)
            for (const auto& v : cfg.variants) {
                set.ensure(o, dim, v);
                set.ensure(o, dim, variant_key{v.host, false, false, false});
            }
    detail::execute_bundles(set, cfg, threads);

    grid_result result;
    for (auto o : cfg.objectives)
        for (int dim : cfg.dims)
            for (const auto& v : cfg.variants) {
                const auto& bundle = set.at(o, dim, v);
                const auto& baseline = set.at(o, dim, variant_key{v.host, false, false, false});
                const std::string label = detail::cell_label(o, dim, v);
                if (!bundle.error.empty()) {
                    result.failures.push_back(label + ": " + bundle.error);
                    continue;
                }
                if (!baseline.error.empty()) {
                    result.failures.push_back(label + ": baseline failed: " + baseline.error);
                    continue;
                }
                op_counter baseline_total;
                for (const auto& t : baseline.traces) baseline_total += t.counter;

                grid_row row;
                row.objective = o;
                row.dim = dim;
                row.variant = v;
                row.seed0 = cfg.base_seed;
                row.report = aggregate(bundle.traces, accept_value_for(o, dim), baseline_total);
                result.rows.push_back(row);

                for (double threshold : cfg.thresholds) {
                    threshold_row tr;
                    tr.objective = o;
                    tr.dim = dim;
                    tr.variant = v;
                    tr.threshold = threshold;
                    tr.runs = static_cast<int>(bundle.traces.size());
                    double sum = 0.0;
                    for (const auto& t : bundle.traces)
                        if (const auto hit = time_to_threshold(t, threshold)) {
                            ++tr.reached;
                            sum += *hit;
                        }
                    if (tr.reached > 0) tr.mean_iters = sum / tr.reached;
                    result.thresholds.push_back(tr);
                }
            }
    return result;
}

/// Sweep output plus per-cell failure notes.
struct sweep_result {
    std::vector<sweep_row> rows;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/*!
 * Mean solved cost of every configured variant at each requested dimension,
 * for plotting scaling behaviour.  No baselines are run (there is no
 * computation column); everything else matches run_grid.
 */
inline sweep_result dimension_robustness_sweep(const experiment_config& cfg,
                                               const std::vector<int>& dims, int threads = 0) {
    if (dims.empty()) throw config_error("sweep needs at least one dimension");
    for (int d : dims)
        if (d < 1) throw config_error("dimensions must be >= 1");
    cfg.validate();

    detail::bundle_set set;
    for (auto o : cfg.objectives)
        for (int dim : dims)
            for (const auto& v : cfg.variants) set.ensure(o, dim, v);
    detail::execute_bundles(set, cfg, threads);

    sweep_result result;
    for (auto o : cfg.objectives)
        for (int dim : dims)
            for (const auto& v : cfg.variants) {
                const auto& bundle = set.at(o, dim, v);
                if (!bundle.error.empty()) {
                    result.failures.push_back(detail::cell_label(o, dim, v) + ": " + bundle.error);
                    continue;
                }
                sweep_row row;
                row.objective = o;
                row.dim = dim;
                row.variant = v;
                row.runs = static_cast<int>(bundle.traces.size());
                const double accept = accept_value_for(o, dim);
                double sum = 0.0;
                int solved = 0;
                for (const auto& t : bundle.traces)
                    if (success_of_run(t, accept)) {
                        ++solved;
                        sum += t.final_cost();
                    }
                if (solved > 0) row.mean = sum / solved;
                row.success_rate = 100.0 * solved / static_cast<double>(row.runs);
                result.rows.push_back(row);
            }
    return result;
}

} // namespace psokit
