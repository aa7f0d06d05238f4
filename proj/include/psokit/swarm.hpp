#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "psokit/errors.hpp"
#include "psokit/objective.hpp"
#include "psokit/rng.hpp"

namespace psokit {

/// One particle: where it is, where it is going, and the best it has found.
struct particle_state {
    std::vector<double> position;
    std::vector<double> velocity;
    std::vector<double> pbest_position;
    std::vector<double> pbest_components; ///< per-dimension cost of pbest_position (possibly mixed)
    double pbest_total = 0.0;             ///< true cost of pbest_position
};

/// Whole-swarm state; gbest mirrors the active best-selection rule.
struct swarm_state {
    std::vector<particle_state> particles;
    std::vector<double> gbest_position;
    std::vector<double> gbest_components;
    double gbest_total = 0.0;
    int iteration = 0;

    int dimension() const { return static_cast<int>(gbest_position.size()); }
    int size() const { return static_cast<int>(particles.size()); }
};

/*!
 * Move a particle by its velocity, in place.  Positions are clamped to the
 * search box; a clamped dimension has its velocity zeroed so the particle does
 * not keep pushing into the wall.  Returns true when any coordinate actually
 * changed (tiny velocities can be absorbed by rounding, leaving the position
 * bit-identical).
 */
inline bool apply_position_update(particle_state& p, const bounds& search_range) {
    bool moved = false;
    const std::size_t d = p.position.size();
    if (p.velocity.size() != d) throw contract_error("position update: velocity size mismatch");
    for (std::size_t i = 0; i < d; ++i) {
        if (!std::isfinite(p.velocity[i]))
            throw numeric_error("position update: non-finite velocity component");
        const double before = p.position[i];
        double after = before + p.velocity[i];
        if (after < search_range.lo) {
            after = search_range.lo;
            p.velocity[i] = 0.0;
        } else if (after > search_range.hi) {
            after = search_range.hi;
            p.velocity[i] = 0.0;
        }
        p.position[i] = after;
        moved |= after != before;
    }
    return moved;
}

/// Pure flavour of apply_position_update: adopts new_velocity, returns the moved particle.
inline particle_state position_update(const particle_state& p, std::span<const double> new_velocity,
                                      const bounds& search_range) {
    particle_state out = p;
    out.velocity.assign(new_velocity.begin(), new_velocity.end());
    apply_position_update(out, search_range);
    return out;
}

/// Replace gbest with the lowest pbest total; strict improvement only, so
/// ties keep the incumbent (and the lowest particle index on a fresh scan).
inline void conventional_global_update(swarm_state& swarm) {
    for (const auto& p : swarm.particles) {
        if (p.pbest_total < swarm.gbest_total) {
            swarm.gbest_total = p.pbest_total;
            swarm.gbest_position = p.pbest_position;
            swarm.gbest_components = p.pbest_components;
        }
    }
}

/*!
 * Per-dimension gbest selection: every dimension independently adopts the
 * lowest pbest component in the swarm (strict improvement over the incumbent,
 * lowest particle index on ties).  The total is re-derived afterwards: a
 * component sum for exactly separable objectives, a full re-evaluation of the
 * mixed vector otherwise.  The re-evaluation is bookkeeping, not a priced
 * objective call.
 */
inline void dimension_wise_global_update(swarm_state& swarm, const objective_spec& spec) {
    const std::size_t d = swarm.gbest_position.size();
    for (std::size_t i = 0; i < d; ++i) {
        for (const auto& p : swarm.particles) {
            if (p.pbest_components[i] < swarm.gbest_components[i]) {
                swarm.gbest_components[i] = p.pbest_components[i];
                swarm.gbest_position[i] = p.pbest_position[i];
            }
        }
    }
    if (spec.separable == separability::exact) {
        double sum = 0.0;
        for (double c : swarm.gbest_components) sum += c;
        swarm.gbest_total = sum;
    } else {
        swarm.gbest_total = total_cost(spec, swarm.gbest_position);
    }
}

/*!
 * Build a swarm from explicit positions: velocities zero, pbest at the start
 * position, gbest derived by the requested best rule.  Used by tests and by
 * initialize_swarm after it has drawn the positions.
 */
inline swarm_state make_swarm(const objective_spec& spec,
                              const std::vector<std::vector<double>>& positions,
                              bool dimension_wise) {
    spec.validate();
    if (positions.empty()) throw config_error("swarm needs at least one particle");
    const auto d = static_cast<std::size_t>(spec.dimension);

    swarm_state swarm;
    swarm.particles.reserve(positions.size());
    for (const auto& pos : positions) {
        if (pos.size() != d) throw contract_error("make_swarm: position size mismatch");
        particle_state p;
        p.position = pos;
        p.velocity.assign(d, 0.0);
        p.pbest_position = pos;
        auto costs = compute_component_costs(spec, pos);
        p.pbest_components = std::move(costs.components);
        p.pbest_total = costs.total;
        swarm.particles.push_back(std::move(p));
    }
    // Seed gbest with particle 0, then let the active rule improve on it; a
    // strict-improvement ascending scan leaves the lowest index on ties.
    swarm.gbest_position = swarm.particles[0].pbest_position;
    swarm.gbest_components = swarm.particles[0].pbest_components;
    swarm.gbest_total = swarm.particles[0].pbest_total;
    if (dimension_wise)
        dimension_wise_global_update(swarm, spec);
    else
        conventional_global_update(swarm);
    swarm.iteration = 0;
    return swarm;
}

/*!
 * Draw initial positions uniformly from the init box and assemble the swarm.
 * Draw order: particle-major, dimension-minor, one uniform per coordinate.
 */
inline swarm_state initialize_swarm(const objective_spec& spec, int n_particles, rng_stream& rng,
                                    bool dimension_wise) {
    spec.validate();
    if (n_particles < 1) throw config_error("swarm needs at least one particle");
    std::vector<std::vector<double>> positions(static_cast<std::size_t>(n_particles));
    for (auto& pos : positions) {
        pos.resize(static_cast<std::size_t>(spec.dimension));
        for (auto& x : pos) x = rng.uniform(spec.init_range.lo, spec.init_range.hi);
    }
    return make_swarm(spec, positions, dimension_wise);
}

} // namespace psokit
