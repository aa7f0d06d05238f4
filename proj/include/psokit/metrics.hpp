#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "psokit/counter.hpp"
#include "psokit/errors.hpp"

namespace psokit {

/// Everything observable about one seeded run.
struct run_trace {
    std::uint64_t seed = 0;
    /// gbest total after initialization (index 0) and after every iteration.
    std::vector<double> best_cost_by_iteration;
    op_counter counter;
    std::vector<double> final_position;

    double final_cost() const {
        if (best_cost_by_iteration.empty()) throw contract_error("empty trace");
        return best_cost_by_iteration.back();
    }
};

/// A run is solved when it finishes strictly below the acceptance value.
/// A NaN final cost never counts as solved.
inline bool success_of_run(const run_trace& trace, double accept_value) {
    const double final = trace.final_cost();
    return final < accept_value; // NaN compares false
}

/*!
 * Last iteration at which the best cost still improved meaningfully: the
 * largest i with best[i-1] - best[i] > rel_tol * max(1, |best[i-1]|).
 * Returns 0 when the trace never improved (or has no iterations).
 */
inline int convergence_iteration(const run_trace& trace, double rel_tol = 1e-12) {
    const auto& best = trace.best_cost_by_iteration;
    for (std::size_t i = best.size(); i-- > 1;) {
        const double before = best[i - 1];
        const double drop = before - best[i];
        if (drop > rel_tol * std::max(1.0, std::abs(before))) return static_cast<int>(i);
    }
    return 0;
}

/// First iteration index whose best cost is strictly below `threshold`;
/// absent when the run never got there.  Index 0 is the initial best.
inline std::optional<int> time_to_threshold(const run_trace& trace, double threshold) {
    const auto& best = trace.best_cost_by_iteration;
    for (std::size_t i = 0; i < best.size(); ++i)
        if (best[i] < threshold) return static_cast<int>(i);
    return std::nullopt;
}

/// Variant multiplications as a percentage of the baseline's, over equal budgets.
inline double relative_computation(const op_counter& variant, const op_counter& baseline) {
    const auto base = baseline.total_mults();
    if (base == 0) throw contract_error("relative computation: baseline counted no multiplications");
    return 100.0 * static_cast<double>(variant.total_mults()) / static_cast<double>(base);
}

/// Aggregate of one (objective, dimension, variant) cell.
struct aggregate_report {
    std::optional<double> mean_final;        ///< over solved runs; absent when none solved
    std::optional<double> convergence_iters; ///< mean convergence iteration over solved runs
    double comp_percent = 0.0;               ///< summed variant mults vs summed baseline mults
    double success_rate = 0.0;               ///< percent of runs solved
    int runs = 0;
};

/*!
 * Fold per-run traces into the cell metrics.  Mean final cost and mean
 * convergence iteration are taken over solved runs only; the computation
 * percentage compares multiplication totals summed over all runs.
 */
inline aggregate_report aggregate(const std::vector<run_trace>& traces, double accept_value,
                                  const op_counter& baseline_total, double rel_tol = 1e-12) {
    if (traces.empty()) throw contract_error("aggregate: no traces");
    aggregate_report report;
    report.runs = static_cast<int>(traces.size());

    op_counter variant_total;
    double sum_final = 0.0;
    double sum_iters = 0.0;
    int solved = 0;
    for (const auto& trace : traces) {
        variant_total += trace.counter;
        if (success_of_run(trace, accept_value)) {
            ++solved;
            sum_final += trace.final_cost();
            sum_iters += convergence_iteration(trace, rel_tol);
        }
    }
    if (solved > 0) {
        report.mean_final = sum_final / solved;
        report.convergence_iters = sum_iters / solved;
    }
    report.success_rate = 100.0 * solved / static_cast<double>(report.runs);
    report.comp_percent = relative_computation(variant_total, baseline_total);
    return report;
}

} // namespace psokit
