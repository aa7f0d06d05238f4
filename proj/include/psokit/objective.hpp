#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "psokit/bounds.hpp"
#include "psokit/errors.hpp"

namespace psokit {

enum class objective_id { sphere, rosenbrock, rastrigin, michalewicz, sum_of_powers };

inline const char* objective_name(objective_id id) {
    switch (id) {
    case objective_id::sphere: return "sphere";
    case objective_id::rosenbrock: return "rosenbrock";
    case objective_id::rastrigin: return "rastrigin";
    case objective_id::michalewicz: return "michalewicz";
    case objective_id::sum_of_powers: return "sum_of_powers";
    }
    throw contract_error("unknown objective id");
}

inline objective_id parse_objective(const std::string& name) {
    for (auto id : {objective_id::sphere, objective_id::rosenbrock, objective_id::rastrigin,
                    objective_id::michalewicz, objective_id::sum_of_powers})
        if (name == objective_name(id)) return id;
    throw config_error("unknown objective '" + name + "'");
}

/// How faithfully per-dimension cost components add up to the true total.
enum class separability {
    exact,      ///< total == sum of components for every x
    approximate ///< components couple neighbouring dimensions; sums drift from the truth
};

/*!
 * A benchmark function together with its search box, initialization box and
 * the cost value below which a run counts as solved.
 *
 * Every objective assigns a scalar cost component to each dimension so that
 * bests can be selected per dimension.  For the exactly separable functions
 * the components sum to the function value; rosenbrock's chained terms are
 * assigned to their leading dimension instead (the last dimension carries 0),
 * which makes per-dimension selection a deliberate greedy approximation.
 */
struct objective_spec {
    objective_id id = objective_id::sphere;
    int dimension = 0;
    bounds search_range;
    bounds init_range;     // initial positions are drawn here; may differ from search_range
    double accept_value = 0.0;
    separability separable = separability::exact;
    int mults_per_dim = 0; // evaluation price per dimension, transcendentals priced as 1

    void validate() const {
        if (dimension < 1) throw config_error("objective dimension must be >= 1");
        search_range.validate();
        init_range.validate();
    }
};

/// Per-dimension cost components plus the true function value at the same point.
struct component_costs {
    std::vector<double> components;
    double total = 0.0;
};

/*!
 * Acceptance threshold as a function of dimension.
 *
 * The anchors are (D=30, D=60): sphere/michalewicz/sum_of_powers stay at 1,
 * rosenbrock at 200/500 and rastrigin at 100/200.  Dimensions above 30
 * interpolate (and extrapolate) linearly through the anchors; dimensions
 * below 30 keep the D=30 anchor so the threshold never collapses to zero.
 */
inline double accept_value_for(objective_id id, int dimension) {
    auto anchored = [dimension](double at30, double at60) {
        if (dimension <= 30) return at30;
        return at30 + (at60 - at30) * (dimension - 30) / 30.0;
    };
    switch (id) {
    case objective_id::sphere: return 1.0;
    case objective_id::rosenbrock: return anchored(200.0, 500.0);
    case objective_id::rastrigin: return anchored(100.0, 200.0);
    case objective_id::michalewicz: return 1.0;
    case objective_id::sum_of_powers: return 1.0;
    }
    throw contract_error("unknown objective id");
}

/// Benchmark factory; the five standard functions with their boxes and prices.
inline objective_spec make_objective(objective_id id, int dimension) {
    objective_spec spec;
    spec.id = id;
    spec.dimension = dimension;
    spec.accept_value = accept_value_for(id, dimension);
    switch (id) {
    case objective_id::sphere:
        spec.search_range = {-100.0, 100.0};
        spec.init_range = {-100.0, 50.0};
        spec.separable = separability::exact;
        spec.mults_per_dim = 1;
        break;
    case objective_id::rosenbrock:
        spec.search_range = {-10.0, 10.0};
        spec.init_range = {-10.0, 10.0};
        spec.separable = separability::approximate;
        spec.mults_per_dim = 4;
        break;
    case objective_id::rastrigin:
        spec.search_range = {-5.12, 5.12};
        spec.init_range = {-5.12, 2.0};
        spec.separable = separability::exact;
        spec.mults_per_dim = 2;
        break;
    case objective_id::michalewicz:
        spec.search_range = {-10.0, 10.0};
        spec.init_range = {-10.0, 10.0};
        spec.separable = separability::exact;
        spec.mults_per_dim = 4;
        break;
    case objective_id::sum_of_powers:
        spec.search_range = {-10.0, 10.0};
        spec.init_range = {-10.0, 10.0};
        spec.separable = separability::exact;
        spec.mults_per_dim = 2;
        break;
    }
    spec.validate();
    return spec;
}

/*!
 * Evaluate the per-dimension components into `out` and return the true total.
 * `out` must already have size D.  This is the one place objective math lives;
 * everything else goes through it.
 */
inline double component_costs_into(const objective_spec& spec, std::span<const double> x,
                                   std::span<double> out) {
    const auto d = static_cast<std::size_t>(spec.dimension);
    if (x.size() != d || out.size() != d)
        throw contract_error("component_costs: dimension mismatch");
    for (double v : x)
        if (!std::isfinite(v)) throw numeric_error("component_costs: non-finite coordinate");

    double total = 0.0;
    switch (spec.id) {
    case objective_id::sphere:
        for (std::size_t i = 0; i < d; ++i) {
            out[i] = x[i] * x[i];
            total += out[i];
        }
        break;
    case objective_id::rosenbrock:
        // Term i (0-based, i < D-1) couples x[i] and x[i+1]; it is assigned
        // wholly to dimension i, so the trailing dimension carries no cost.
        for (std::size_t i = 0; i + 1 < d; ++i) {
            const double a = x[i] * x[i] - x[i + 1];
            const double b = x[i] - 1.0;
            out[i] = 100.0 * a * a + b * b;
            total += out[i];
        }
        out[d - 1] = 0.0;
        break;
    case objective_id::rastrigin:
        for (std::size_t i = 0; i < d; ++i) {
            out[i] = x[i] * x[i] - 10.0 * std::cos(2.0 * std::numbers::pi * x[i]) + 10.0;
            total += out[i];
        }
        break;
    case objective_id::michalewicz:
        // m = 10; the sine exponent is 2m.  Dimension index is 1-based in the
        // inner sine argument.
        for (std::size_t i = 0; i < d; ++i) {
            const double s = std::sin(static_cast<double>(i + 1) * x[i] * x[i] / std::numbers::pi);
            out[i] = -std::sin(x[i]) * std::pow(s, 20.0);
            total += out[i];
        }
        break;
    case objective_id::sum_of_powers:
        // |x_i|^(i+1) with i 1-based, i.e. exponents 2, 3, ..., D+1.
        for (std::size_t i = 0; i < d; ++i) {
            out[i] = std::pow(std::abs(x[i]), static_cast<double>(i + 2));
            total += out[i];
        }
        break;
    }
    return total;
}

inline component_costs compute_component_costs(const objective_spec& spec,
                                               std::span<const double> x) {
    component_costs c;
    c.components.resize(static_cast<std::size_t>(spec.dimension));
    c.total = component_costs_into(spec, x, c.components);
    return c;
}

/// True function value at x.
inline double total_cost(const objective_spec& spec, std::span<const double> x) {
    std::vector<double> scratch(static_cast<std::size_t>(spec.dimension));
    return component_costs_into(spec, x, scratch);
}

/// Multiplications charged for one evaluation of one particle.
inline std::uint64_t evaluation_mult_count(const objective_spec& spec) {
    return static_cast<std::uint64_t>(spec.mults_per_dim) *
           static_cast<std::uint64_t>(spec.dimension);
}

} // namespace psokit
