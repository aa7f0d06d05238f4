#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "psokit/counter.hpp"
#include "psokit/objective.hpp"
#include "psokit/rng.hpp"
#include "psokit/swarm.hpp"
#include "psokit/trigger.hpp"

namespace psokit {

/// Linear ramp from `start` (step 0) to `end` (step n_steps - 1).
inline double linear_schedule(double start, double end, int step, int n_steps) {
    if (n_steps <= 1) return start;
    return start + (end - start) * static_cast<double>(step) / static_cast<double>(n_steps - 1);
}

/*!
 * Two-term velocity update
 *
 *   v' = w v + c1 r1 (pbest - x) + c2 r2 (gbest - x)
 *
 * with the cognitive and social terms gated by the trigger mask.  r1 and r2
 * are ALWAYS drawn, dimension-ascending, r1 before r2, whether or not the
 * terms survive the mask: the draw sequence is part of the reproducibility
 * contract and must not depend on trigger state.
 *
 * Multiplication pricing: the inertia product costs 1 (only when the host's
 * update actually has an inertia term), each surviving cognitive or social
 * term costs 2.  A fully active update with inertia therefore costs 5 per
 * dimension.  Suppressed terms are tallied in the skip counters.
 */
inline void velocity_update_into(const particle_state& p, std::span<const double> attr_personal,
                                 std::span<const double> attr_social, double w, double c1,
                                 double c2, bool has_inertia_term, const trigger_mask& mask,
                                 rng_stream& rng, op_counter& counter, std::span<double> out) {
    const std::size_t d = p.position.size();
    if (attr_personal.size() != d || attr_social.size() != d || out.size() != d)
        throw contract_error("velocity update: size mismatch");
    for (std::size_t i = 0; i < d; ++i) {
        const double r1 = rng.uniform01();
        const double r2 = rng.uniform01();
        double v = 0.0;
        if (has_inertia_term) {
            v = w * p.velocity[i];
            counter.update_mults += 1;
        }
        if (mask.cognitive_active[i]) {
            v += c1 * r1 * (attr_personal[i] - p.position[i]);
            counter.update_mults += 2;
        } else {
            counter.cognitive_skips += 1;
        }
        if (mask.social_active[i]) {
            v += c2 * r2 * (attr_social[i] - p.position[i]);
            counter.update_mults += 2;
        } else {
            counter.social_skips += 1;
        }
        out[i] = v;
    }
}

/// Vector-returning convenience wrapper around velocity_update_into.
inline std::vector<double> velocity_update(const particle_state& p,
                                           std::span<const double> attr_personal,
                                           std::span<const double> attr_social, double w,
                                           double c1, double c2, bool has_inertia_term,
                                           const trigger_mask& mask, rng_stream& rng,
                                           op_counter& counter) {
    std::vector<double> out(p.position.size());
    velocity_update_into(p, attr_personal, attr_social, w, c1, c2, has_inertia_term, mask, rng,
                         counter, out);
    return out;
}

/*!
 * Single-term velocity update used by the comprehensive-learning host:
 *
 *   v' = w v + c r1 (exemplar - x), clamped to [-vmax, vmax].
 *
 * Two uniforms are still drawn per dimension (r2 is discarded) so that every
 * host consumes the identical 2 draws per dimension per particle.  Pricing:
 * 1 for the inertia product, 2 for a surviving learning term.
 */
inline void single_term_velocity_update_into(const particle_state& p,
                                             std::span<const double> exemplar, double w, double c,
                                             double vmax, const trigger_mask& mask,
                                             rng_stream& rng, op_counter& counter,
                                             std::span<double> out) {
    const std::size_t d = p.position.size();
    if (exemplar.size() != d || out.size() != d)
        throw contract_error("velocity update: size mismatch");
    for (std::size_t i = 0; i < d; ++i) {
        const double r1 = rng.uniform01();
        rng.uniform01(); // keep the 2-per-dimension draw contract
        double v = w * p.velocity[i];
        counter.update_mults += 1;
        if (mask.cognitive_active[i]) {
            v += c * r1 * (exemplar[i] - p.position[i]);
            counter.update_mults += 2;
        } else {
            counter.cognitive_skips += 1;
        }
        if (v > vmax) v = vmax;
        if (v < -vmax) v = -vmax;
        out[i] = v;
    }
}

/*!
 * Whole-vector pbest replacement: the candidate takes over only when its true
 * total is strictly better, so ties keep the incumbent.
 */
inline void conventional_best_update(particle_state& p, std::span<const double> candidate_position,
                                     const component_costs& candidate) {
    if (candidate.total < p.pbest_total) {
        p.pbest_position.assign(candidate_position.begin(), candidate_position.end());
        p.pbest_components = candidate.components;
        p.pbest_total = candidate.total;
    }
}

/*!
 * Per-dimension pbest selection.  Each dimension adopts the candidate's
 * coordinate exactly when the candidate's component is strictly better; the
 * stored pbest becomes a mixture of the best coordinates seen so far.  For
 * exactly separable objectives the total is the component sum.  Otherwise the
 * components are a greedy guide (they refer to the vectors they came from)
 * and the mixture's true total is re-evaluated for reporting; that bookkeeping
 * evaluation is not priced.
 */
inline void dimension_wise_best_update(particle_state& p, std::span<const double> candidate_position,
                                       const component_costs& candidate,
                                       const objective_spec& spec) {
    const std::size_t d = p.pbest_position.size();
    bool adopted = false;
    for (std::size_t i = 0; i < d; ++i) {
        if (candidate.components[i] < p.pbest_components[i]) {
            p.pbest_components[i] = candidate.components[i];
            p.pbest_position[i] = candidate_position[i];
            adopted = true;
        }
    }
    if (spec.separable == separability::exact) {
        double sum = 0.0;
        for (double c : p.pbest_components) sum += c;
        p.pbest_total = sum;
    } else if (adopted) {
        p.pbest_total = total_cost(spec, p.pbest_position);
    }
}

/// Self-tuning host coefficient schedule: no inertia, c1 ramps down, c2 ramps up.
struct hpso_coefficient_set {
    double w = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
};

inline hpso_coefficient_set hpso_coefficients(int iteration, int max_iterations, double c1_start,
                                              double c1_end, double c2_start, double c2_end) {
    return {0.0, linear_schedule(c1_start, c1_end, iteration, max_iterations),
            linear_schedule(c2_start, c2_end, iteration, max_iterations)};
}

/*!
 * Restart rule for the self-tuning host: a velocity component that lands on
 * exactly zero is redrawn uniformly from [-v_r, v_r], where v_r shrinks
 * linearly over the run.  When `de2_gating` is set, a zero that the event
 * trigger itself forced (both terms masked, no inertia contribution) is left
 * alone: a particle silenced by the trigger stays silenced, only particles
 * that stalled on their own get a kick.
 */
inline double hpso_velocity_reinit(double new_velocity_value, bool forced_zero_by_trigger,
                                   bool de2_gating, int iteration, int max_iterations,
                                   double reinit_fraction_start, double reinit_fraction_end,
                                   double range_width, rng_stream& rng) {
    if (new_velocity_value != 0.0) return new_velocity_value;
    if (de2_gating && forced_zero_by_trigger) return 0.0;
    const double fraction = linear_schedule(reinit_fraction_start, reinit_fraction_end, iteration,
                                            max_iterations);
    const double v_r = fraction * range_width;
    return rng.uniform(-v_r, v_r);
}

} // namespace psokit
