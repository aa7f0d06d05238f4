#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "psokit/counter.hpp"
#include "psokit/hosts.hpp"
#include "psokit/metrics.hpp"
#include "psokit/objective.hpp"
#include "psokit/rng.hpp"
#include "psokit/swarm.hpp"
#include "psokit/trigger.hpp"
#include "psokit/update.hpp"
#include "psokit/variant.hpp"

namespace psokit {

/*!
 * One seeded run of a variant on an objective, advanced an iteration at a time.
 *
 * Updates are synchronous: every particle moves against the bests from the
 * previous iteration, then all evaluations and best updates happen, then the
 * global best.  Two independent random streams keep reproducibility simple:
 *
 *   - the velocity stream feeds initialization and the velocity updates and
 *     advances by exactly 2 draws per particle per dimension per iteration,
 *     whatever the host or trigger state;
 *   - the bookkeeping stream feeds host internals (regrouping, exemplar
 *     choices, restart kicks), whose draw counts legitimately vary.
 *
 * A particle whose position did not change (all velocity components zero or
 * absorbed by rounding) skips its objective evaluation: the candidate is the
 * value the bests already saw, so re-scoring it is pure waste.  Skipped
 * evaluations are not priced, which is what lets a fully stalled swarm's
 * multiplication count drop to (almost) nothing.
 */
class swarm_engine {
public:
    swarm_engine(const objective_spec& spec, const variant_config& cfg, std::uint64_t seed)
        : spec_(spec), cfg_(cfg), seed_(seed), rng_(seed), aux_(seed ^ aux_stream_salt) {
        cfg_.validate(spec_.dimension);
        swarm_ = initialize_swarm(spec_, cfg_.n_particles, rng_, cfg_.key.dimension_wise);
        counter_.cost_mults +=
            evaluation_mult_count(spec_) * static_cast<std::uint64_t>(cfg_.n_particles);

        const auto d = static_cast<std::size_t>(spec_.dimension);
        const auto n = static_cast<std::size_t>(cfg_.n_particles);
        all_active_ = trigger_mask::all_active(d);
        new_velocity_.resize(d);
        attractor_.resize(d);
        candidate_.components.resize(d);
        moved_.assign(n, 0);
        improved_.assign(n, 0);
        if (cfg_.key.host == host_kind::clpso) {
            pc_ = clpso_learning_probabilities(cfg_.n_particles);
            exemplar_of_.assign(n, std::vector<int>(d, 0));
            stall_.assign(n, 0);
            vmax_ = cfg_.hyper.clpso_vmax_fraction * spec_.search_range.width();
        }
    }

    const swarm_state& swarm() const { return swarm_; }
    const op_counter& counter() const { return counter_; }
    const objective_spec& objective() const { return spec_; }
    const variant_config& config() const { return cfg_; }
    std::uint64_t seed() const { return seed_; }
    std::uint64_t velocity_draws() const { return rng_.draw_count(); }
    std::uint64_t bookkeeping_draws() const { return aux_.draw_count(); }

    /// Advance the swarm by one iteration.
    void step() {
        const int iter = swarm_.iteration;
        const int n = swarm_.size();
        const bool triggered = cfg_.event_gamma.has_value();
        const bool hpso = cfg_.key.host == host_kind::hpso;

        host_prologue(iter);

        double w = 0.0, c1 = 0.0, c2 = 0.0;
        switch (cfg_.key.host) {
        case host_kind::pso:
        case host_kind::dms:
            w = linear_schedule(cfg_.hyper.w_start, cfg_.hyper.w_end, iter, cfg_.iterations);
            c1 = cfg_.hyper.c1;
            c2 = cfg_.hyper.c2;
            break;
        case host_kind::clpso:
            w = linear_schedule(cfg_.hyper.w_start, cfg_.hyper.w_end, iter, cfg_.iterations);
            c1 = cfg_.hyper.clpso_c;
            break;
        case host_kind::hpso: {
            const auto cs = hpso_coefficients(iter, cfg_.iterations, cfg_.hyper.hpso_c1_start,
                                              cfg_.hyper.hpso_c1_end, cfg_.hyper.hpso_c2_start,
                                              cfg_.hyper.hpso_c2_end);
            w = cs.w;
            c1 = cs.c1;
            c2 = cs.c2;
            break;
        }
        }

        // Movement pass: masks, velocities, positions; bests stay frozen.
        for (int k = 0; k < n; ++k) {
            auto& p = swarm_.particles[static_cast<std::size_t>(k)];
            const trigger_mask* mask = &all_active_;

            if (cfg_.key.host == host_kind::clpso) {
                clpso_exemplar_position(swarm_, exemplar_of_[static_cast<std::size_t>(k)],
                                        attractor_);
                if (triggered) {
                    compute_single_term_mask_into(p, attractor_, *cfg_.event_gamma, mask_);
                    mask = &mask_;
                    for (auto active : mask_.cognitive_active)
                        counter_.cognitive_skips += active ? 0 : 1;
                }
                single_term_velocity_update_into(p, attractor_, w, c1, vmax_, *mask, rng_,
                                                 counter_, new_velocity_);
            } else {
                std::span<const double> social;
                if (cfg_.key.host == host_kind::dms) {
                    const auto& members =
                        dms_.groups[static_cast<std::size_t>(
                            dms_.group_of[static_cast<std::size_t>(k)])];
                    if (cfg_.key.dimension_wise) {
                        subswarm_dimension_attractor(swarm_, members, attractor_);
                        social = attractor_;
                    } else {
                        social = swarm_.particles[static_cast<std::size_t>(
                                                      subswarm_best_member(swarm_, members))]
                                     .pbest_position;
                    }
                } else {
                    social = swarm_.gbest_position;
                }
                if (triggered) {
                    compute_trigger_mask_into(p, social, *cfg_.event_gamma, mask_);
                    mask = &mask_;
                    for (std::size_t i = 0; i < mask_.cognitive_active.size(); ++i) {
                        counter_.cognitive_skips += mask_.cognitive_active[i] ? 0 : 1;
                        counter_.social_skips += mask_.social_active[i] ? 0 : 1;
                    }
                }
                velocity_update_into(p, p.pbest_position, social, w, c1, c2,
                                     /*has_inertia_term=*/!hpso, *mask, rng_, counter_,
                                     new_velocity_);
            }

            if (hpso) {
                for (std::size_t i = 0; i < new_velocity_.size(); ++i) {
                    const bool forced = !mask->cognitive_active[i] && !mask->social_active[i];
                    new_velocity_[i] = hpso_velocity_reinit(
                        new_velocity_[i], forced, cfg_.key.de2_gating, iter, cfg_.iterations,
                        cfg_.hyper.hpso_reinit_fraction_start, cfg_.hyper.hpso_reinit_fraction_end,
                        spec_.search_range.width(), aux_);
                }
            }

            p.velocity = new_velocity_;
            moved_[static_cast<std::size_t>(k)] = apply_position_update(p, spec_.search_range);
        }

        // Evaluation pass: only particles that actually moved get re-scored.
        for (int k = 0; k < n; ++k) {
            improved_[static_cast<std::size_t>(k)] = 0;
            if (!moved_[static_cast<std::size_t>(k)]) continue;
            auto& p = swarm_.particles[static_cast<std::size_t>(k)];
            candidate_.total = component_costs_into(spec_, p.position, candidate_.components);
            counter_.cost_mults += evaluation_mult_count(spec_);
            const double before = p.pbest_total;
            if (cfg_.key.dimension_wise)
                dimension_wise_best_update(p, p.position, candidate_, spec_);
            else
                conventional_best_update(p, p.position, candidate_);
            improved_[static_cast<std::size_t>(k)] = p.pbest_total < before ? 1 : 0;
        }

        if (cfg_.key.dimension_wise)
            dimension_wise_global_update(swarm_, spec_);
        else
            conventional_global_update(swarm_);

        if (cfg_.key.host == host_kind::clpso) {
            for (int k = 0; k < n; ++k) {
                auto& stall = stall_[static_cast<std::size_t>(k)];
                stall = improved_[static_cast<std::size_t>(k)] ? 0 : stall + 1;
            }
        }

        swarm_.iteration = iter + 1;
    }

private:
    void host_prologue(int iter) {
        if (cfg_.key.host == host_kind::dms) {
            if (iter % cfg_.hyper.dms_regroup_period == 0)
                dms_ = dms_regroup(cfg_.n_particles, cfg_.hyper.dms_subswarm_size, aux_);
        } else if (cfg_.key.host == host_kind::clpso) {
            for (int k = 0; k < cfg_.n_particles; ++k) {
                auto& stall = stall_[static_cast<std::size_t>(k)];
                if (iter == 0 || stall >= cfg_.hyper.clpso_refresh_gap) {
                    clpso_assign_exemplar(swarm_, k, pc_[static_cast<std::size_t>(k)], aux_,
                                          exemplar_of_[static_cast<std::size_t>(k)]);
                    stall = 0;
                }
            }
        }
    }

    objective_spec spec_;
    variant_config cfg_;
    std::uint64_t seed_;
    rng_stream rng_; ///< velocity stream: init + exactly 2ND draws per iteration
    rng_stream aux_; ///< bookkeeping stream: grouping, exemplars, restart kicks
    swarm_state swarm_;
    op_counter counter_;

    dms_grouping dms_;
    std::vector<std::vector<int>> exemplar_of_;
    std::vector<int> stall_;
    std::vector<double> pc_;
    double vmax_ = 0.0;

    trigger_mask all_active_;
    trigger_mask mask_;
    std::vector<double> new_velocity_;
    std::vector<double> attractor_;
    component_costs candidate_;
    std::vector<std::uint8_t> moved_;
    std::vector<std::uint8_t> improved_;
};

/// Run a variant to completion and collect its trace.
inline run_trace run(const objective_spec& spec, const variant_config& cfg, std::uint64_t seed) {
    swarm_engine engine(spec, cfg, seed);
    run_trace trace;
    trace.seed = seed;
    trace.best_cost_by_iteration.reserve(static_cast<std::size_t>(cfg.iterations) + 1);
    trace.best_cost_by_iteration.push_back(engine.swarm().gbest_total);
    for (int i = 0; i < cfg.iterations; ++i) {
        engine.step();
        trace.best_cost_by_iteration.push_back(engine.swarm().gbest_total);
    }
    trace.counter = engine.counter();
    trace.final_position = engine.swarm().gbest_position;
    return trace;
}

} // namespace psokit
