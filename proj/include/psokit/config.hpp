#pragma once

#include <cctype>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "psokit/errors.hpp"
#include "psokit/objective.hpp"
#include "psokit/report.hpp"
#include "psokit/variant.hpp"

namespace psokit {

/*!
 * One experiment: a cross product of objectives, dimensions and variants,
 * each cell run `runs` times with consecutive seeds.
 *
 * Text form is `key = value` lines; `#` starts a comment line, blank lines
 * are ignored, list values are comma-separated.  Keys:
 *
 *   objective   required; one or more of sphere, rosenbrock, rastrigin,
 *               michalewicz, sum_of_powers
 *   dim         dimensions (default 30)
 *   variant     variant names like pso, pso-de, hpso-de2 (default pso)
 *   particles   swarm size (default 40)
 *   iterations  iterations per run (default 5000)
 *   runs        runs per cell (default 50)
 *   gamma       event-trigger threshold; one value, or one per dimension
 *               (default 1e-7; used by -e/-de/-de2 variants only)
 *   base_seed   seed of the first run; run i uses base_seed + i (default 1)
 *   thresholds  optional cost thresholds for the time-to-threshold table
 *   out         output path (default: stdout)
 *   format      csv or markdown (default csv)
 *
 * Unknown and duplicate keys are rejected with the offending line number.
 */
struct experiment_config {
    std::vector<objective_id> objectives;
    std::vector<int> dims{30};
    std::vector<variant_key> variants{variant_key{}};
    int n_particles = 40;
    int iterations = 5000;
    int runs = 50;
    double gamma = 1e-7;
    std::vector<double> gamma_per_dimension; // empty = scalar gamma everywhere
    std::uint64_t base_seed = 1;
    std::vector<double> thresholds;
    std::string out;
    report_format format = report_format::csv;

    friend bool operator==(const experiment_config&, const experiment_config&) = default;

    void validate() const {
        if (objectives.empty()) throw config_error("config needs at least one objective");
        if (dims.empty()) throw config_error("config needs at least one dimension");
        if (variants.empty()) throw config_error("config needs at least one variant");
        for (int d : dims)
            if (d < 1) throw config_error("dimensions must be >= 1");
        if (n_particles < 1) throw config_error("particles must be >= 1");
        if (iterations < 1) throw config_error("iterations must be >= 1");
        if (runs < 1) throw config_error("runs must be >= 1");
        if (!(gamma >= 0.0)) throw config_error("gamma must be >= 0");
        if (gamma_per_dimension.size() == 1)
            throw config_error("per-dimension gamma needs one value per dimension; "
                               "use the scalar form for a single shared value");
        for (double g : gamma_per_dimension)
            if (!(g >= 0.0)) throw config_error("gamma must be >= 0");
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> items;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t comma = s.find(',', start);
        const std::size_t end = comma == std::string::npos ? s.size() : comma;
        items.push_back(trim(s.substr(start, end - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return items;
}

inline int parse_int(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw parse_error(line, "expected an integer, got '" + s + "'");
    }
}

inline double parse_double(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw parse_error(line, "expected a number, got '" + s + "'");
    }
}

inline std::uint64_t parse_u64(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw parse_error(line, "expected a non-negative integer, got '" + s + "'");
    }
}

} // namespace detail

/// Parse config text.  Throws parse_error with a 1-based line number on bad
/// syntax and config_error on semantically invalid values.
inline experiment_config parse_config(const std::string& text) {
    experiment_config cfg;
    std::set<std::string> seen;
    bool saw_objective = false;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string raw =
            text.substr(pos, (nl == std::string::npos ? text.size() : nl) - pos);
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        const std::string line = detail::trim(raw);
        if (line.empty() || line[0] == '#') continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error(line_no, "expected 'key = value'");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = detail::trim(line.substr(eq + 1));
        if (key.empty()) throw parse_error(line_no, "empty key");
        if (value.empty()) throw parse_error(line_no, "empty value for key '" + key + "'");
        if (!seen.insert(key).second)
            throw parse_error(line_no, "duplicate key '" + key + "'");

        try {
            if (key == "objective") {
                cfg.objectives.clear();
                for (const auto& item : detail::split_list(value))
                    cfg.objectives.push_back(parse_objective(item));
                saw_objective = true;
            } else if (key == "dim") {
                cfg.dims.clear();
                for (const auto& item : detail::split_list(value))
                    cfg.dims.push_back(detail::parse_int(item, line_no));
            } else if (key == "variant") {
                cfg.variants.clear();
                for (const auto& item : detail::split_list(value))
                    cfg.variants.push_back(parse_variant(item));
            } else if (key == "particles") {
                cfg.n_particles = detail::parse_int(value, line_no);
            } else if (key == "iterations") {
                cfg.iterations = detail::parse_int(value, line_no);
            } else if (key == "runs") {
                cfg.runs = detail::parse_int(value, line_no);
            } else if (key == "gamma") {
                const auto items = detail::split_list(value);
                if (items.size() == 1) {
                    cfg.gamma = detail::parse_double(items[0], line_no);
                    cfg.gamma_per_dimension.clear();
                } else {
                    cfg.gamma_per_dimension.clear();
                    for (const auto& item : items)
                        cfg.gamma_per_dimension.push_back(detail::parse_double(item, line_no));
                }
            } else if (key == "base_seed") {
                cfg.base_seed = detail::parse_u64(value, line_no);
            } else if (key == "thresholds") {
                cfg.thresholds.clear();
                for (const auto& item : detail::split_list(value))
                    cfg.thresholds.push_back(detail::parse_double(item, line_no));
            } else if (key == "out") {
                cfg.out = value;
            } else if (key == "format") {
                cfg.format = parse_report_format(value);
            } else {
                throw parse_error(line_no, "unknown key '" + key + "'");
            }
        } catch (const config_error& e) {
            throw parse_error(line_no, e.what());
        }
    }

    if (!saw_objective) throw config_error("config needs at least one objective");
    cfg.validate();
    return cfg;
}

/// Canonical text form; parse_config(serialize_config(c)) == c.
inline std::string serialize_config(const experiment_config& cfg) {
    auto join = [](const std::vector<std::string>& items) {
        std::string s;
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (i) s += ", ";
            s += items[i];
        }
        return s;
    };

    std::vector<std::string> objectives, dims, variants, thresholds;
    for (auto id : cfg.objectives) objectives.emplace_back(objective_name(id));
    for (int d : cfg.dims) dims.push_back(std::to_string(d));
    for (const auto& v : cfg.variants) variants.push_back(variant_name(v));
    for (double t : cfg.thresholds) thresholds.push_back(fmt_full(t));

    std::string out;
    out += "objective = " + join(objectives) + "\n";
    out += "dim = " + join(dims) + "\n";
    out += "variant = " + join(variants) + "\n";
    out += "particles = " + std::to_string(cfg.n_particles) + "\n";
    out += "iterations = " + std::to_string(cfg.iterations) + "\n";
    out += "runs = " + std::to_string(cfg.runs) + "\n";
    if (cfg.gamma_per_dimension.empty()) {
        out += "gamma = " + fmt_full(cfg.gamma) + "\n";
    } else {
        std::vector<std::string> gammas;
        for (double g : cfg.gamma_per_dimension) gammas.push_back(fmt_full(g));
        out += "gamma = " + join(gammas) + "\n";
    }
    out += "base_seed = " + std::to_string(cfg.base_seed) + "\n";
    if (!cfg.thresholds.empty()) out += "thresholds = " + join(thresholds) + "\n";
    if (!cfg.out.empty()) out += "out = " + cfg.out + "\n";
    out += std::string("format = ") + report_format_name(cfg.format) + "\n";
    return out;
}

} // namespace psokit
