#pragma once

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "psokit/errors.hpp"
#include "psokit/metrics.hpp"
#include "psokit/objective.hpp"
#include "psokit/variant.hpp"

namespace psokit {

enum class report_format { csv, markdown };

inline const char* report_format_name(report_format f) {
    return f == report_format::csv ? "csv" : "markdown";
}

inline report_format parse_report_format(const std::string& name) {
    if (name == "csv") return report_format::csv;
    if (name == "markdown") return report_format::markdown;
    throw config_error("unknown format '" + name + "' (expected csv or markdown)");
}

/// One benchmark cell: a variant on an objective at one dimension.
struct grid_row {
    objective_id objective = objective_id::sphere;
    int dim = 0;
    variant_key variant;
    aggregate_report report;
    std::uint64_t seed0 = 0; ///< seed of the first run; run i uses seed0 + i
};

/// Iterations needed to first cross a cost threshold, per cell.
struct threshold_row {
    objective_id objective = objective_id::sphere;
    int dim = 0;
    variant_key variant;
    double threshold = 0.0;
    std::optional<double> mean_iters; ///< over runs that crossed; absent when none did
    int reached = 0;
    int runs = 0;
};

/// Full round-trip precision, for CSV cells.
inline std::string fmt_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Three significant digits, for human-facing markdown cells.
inline std::string fmt_sig3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

namespace detail {
inline std::string csv_cell(const std::optional<double>& v) {
    return v ? fmt_full(*v) : std::string{};
}
// Absent values render as a multiplication sign in tables.
inline std::string md_cell(const std::optional<double>& v) {
    return v ? fmt_sig3(*v) : std::string{"×"};
}
} // namespace detail

inline std::string emit_grid_csv(const std::vector<grid_row>& rows) {
    std::string out = "function,dim,variant,mean,iters,comp_pct,sr,runs,seed0\n";
    for (const auto& r : rows) {
        out += objective_name(r.objective);
        out += ',' + std::to_string(r.dim);
        out += ',' + variant_name(r.variant);
        out += ',' + detail::csv_cell(r.report.mean_final);
        out += ',' + detail::csv_cell(r.report.convergence_iters);
        out += ',' + fmt_full(r.report.comp_percent);
        out += ',' + fmt_full(r.report.success_rate);
        out += ',' + std::to_string(r.report.runs);
        out += ',' + std::to_string(r.seed0);
        out += '\n';
    }
    return out;
}

inline std::string emit_grid_markdown(const std::vector<grid_row>& rows) {
    std::string out = "| function | dim | variant | mean | iters | comp | sr | runs | seed0 |\n"
                      "|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& r : rows) {
        out += "| ";
        out += objective_name(r.objective);
        out += " | " + std::to_string(r.dim);
        out += " | " + variant_name(r.variant);
        out += " | " + detail::md_cell(r.report.mean_final);
        out += " | " + detail::md_cell(r.report.convergence_iters);
        out += " | " + fmt_sig3(r.report.comp_percent) + "%";
        out += " | " + fmt_sig3(r.report.success_rate) + "%";
        out += " | " + std::to_string(r.report.runs);
        out += " | " + std::to_string(r.seed0);
        out += " |\n";
    }
    return out;
}

inline std::string emit_grid_report(const std::vector<grid_row>& rows, report_format format) {
    return format == report_format::csv ? emit_grid_csv(rows) : emit_grid_markdown(rows);
}

inline std::string emit_threshold_csv(const std::vector<threshold_row>& rows) {
    std::string out = "function,dim,variant,threshold,mean_iters,reached,runs\n";
    for (const auto& r : rows) {
        out += objective_name(r.objective);
        out += ',' + std::to_string(r.dim);
        out += ',' + variant_name(r.variant);
        out += ',' + fmt_full(r.threshold);
        out += ',' + detail::csv_cell(r.mean_iters);
        out += ',' + std::to_string(r.reached);
        out += ',' + std::to_string(r.runs);
        out += '\n';
    }
    return out;
}

inline std::string emit_threshold_markdown(const std::vector<threshold_row>& rows) {
    std::string out = "| function | dim | variant | threshold | mean iters | reached | runs |\n"
                      "|---|---|---|---|---|---|---|\n";
    for (const auto& r : rows) {
        out += "| ";
        out += objective_name(r.objective);
        out += " | " + std::to_string(r.dim);
        out += " | " + variant_name(r.variant);
        out += " | " + fmt_sig3(r.threshold);
        out += " | " + detail::md_cell(r.mean_iters);
        out += " | " + std::to_string(r.reached);
        out += " | " + std::to_string(r.runs);
        out += " |\n";
    }
    return out;
}

inline std::string emit_threshold_report(const std::vector<threshold_row>& rows,
                                         report_format format) {
    return format == report_format::csv ? emit_threshold_csv(rows)
                                        : emit_threshold_markdown(rows);
}

/// One point of a dimension sweep: a variant's mean solved cost at one dimension.
struct sweep_row {
    objective_id objective = objective_id::sphere;
    int dim = 0;
    variant_key variant;
    std::optional<double> mean; ///< over solved runs; absent when none solved
    double success_rate = 0.0;
    int runs = 0;
};

inline std::string emit_sweep_csv(const std::vector<sweep_row>& rows) {
    std::string out = "function,dim,variant,mean,sr,runs\n";
    for (const auto& r : rows) {
        out += objective_name(r.objective);
        out += ',' + std::to_string(r.dim);
        out += ',' + variant_name(r.variant);
        out += ',' + detail::csv_cell(r.mean);
        out += ',' + fmt_full(r.success_rate);
        out += ',' + std::to_string(r.runs);
        out += '\n';
    }
    return out;
}

inline std::string emit_sweep_markdown(const std::vector<sweep_row>& rows) {
    std::string out = "| function | dim | variant | mean | sr | runs |\n"
                      "|---|---|---|---|---|---|\n";
    for (const auto& r : rows) {
        out += "| ";
        out += objective_name(r.objective);
        out += " | " + std::to_string(r.dim);
        out += " | " + variant_name(r.variant);
        out += " | " + detail::md_cell(r.mean);
        out += " | " + fmt_sig3(r.success_rate) + "%";
        out += " | " + std::to_string(r.runs);
        out += " |\n";
    }
    return out;
}

inline std::string emit_sweep_report(const std::vector<sweep_row>& rows, report_format format) {
    return format == report_format::csv ? emit_sweep_csv(rows) : emit_sweep_markdown(rows);
}

} // namespace psokit
