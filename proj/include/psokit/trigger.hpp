#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "psokit/errors.hpp"
#include "psokit/swarm.hpp"

namespace psokit {

/*!
 * Per-dimension activity mask for the two velocity terms.
 *
 * A term is active when the particle is at least gamma away from the
 * attractor feeding that term; inside the gamma band the pull is treated as
 * noise and the term is skipped.  The comparison is `distance >= gamma`, so
 * gamma = 0 keeps every term active (distance 0 included) and a run with the
 * trigger at 0 is bit-identical to one without the trigger.
 */
struct trigger_mask {
    std::vector<std::uint8_t> cognitive_active;
    std::vector<std::uint8_t> social_active;

    static trigger_mask all_active(std::size_t dimension) {
        trigger_mask m;
        m.cognitive_active.assign(dimension, 1);
        m.social_active.assign(dimension, 1);
        return m;
    }
};

/// Threshold per dimension: either one shared gamma or a full vector.
struct trigger_threshold {
    double scalar = 0.0;
    std::vector<double> per_dimension; // empty means "use scalar everywhere"

    double at(std::size_t d) const { return per_dimension.empty() ? scalar : per_dimension[d]; }

    void validate(int dimension) const {
        if (!(scalar >= 0.0)) throw config_error("trigger threshold must be >= 0");
        if (!per_dimension.empty() &&
            per_dimension.size() != static_cast<std::size_t>(dimension))
            throw config_error("per-dimension trigger threshold has wrong length");
        for (double g : per_dimension)
            if (!(g >= 0.0)) throw config_error("trigger threshold must be >= 0");
    }
};

/// Mask both terms of one particle against its personal and social attractors.
inline void compute_trigger_mask_into(const particle_state& p,
                                      std::span<const double> social_position,
                                      const trigger_threshold& gamma, trigger_mask& m) {
    const std::size_t d = p.position.size();
    if (social_position.size() != d)
        throw contract_error("trigger mask: attractor size mismatch");
    m.cognitive_active.resize(d);
    m.social_active.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        const double g = gamma.at(i);
        m.cognitive_active[i] = std::abs(p.pbest_position[i] - p.position[i]) >= g ? 1 : 0;
        m.social_active[i] = std::abs(social_position[i] - p.position[i]) >= g ? 1 : 0;
    }
}

inline trigger_mask compute_trigger_mask(const particle_state& p,
                                         std::span<const double> social_position,
                                         const trigger_threshold& gamma) {
    trigger_mask m;
    compute_trigger_mask_into(p, social_position, gamma, m);
    return m;
}

/// Single-term flavour for hosts whose update has one learning attractor; the
/// mask lands in the cognitive slot and the social slot stays active/unused.
inline void compute_single_term_mask_into(const particle_state& p,
                                          std::span<const double> attractor,
                                          const trigger_threshold& gamma, trigger_mask& m) {
    const std::size_t d = p.position.size();
    if (attractor.size() != d) throw contract_error("trigger mask: attractor size mismatch");
    m.cognitive_active.resize(d);
    m.social_active.assign(d, 1);
    for (std::size_t i = 0; i < d; ++i)
        m.cognitive_active[i] = std::abs(attractor[i] - p.position[i]) >= gamma.at(i) ? 1 : 0;
}

inline trigger_mask compute_single_term_mask(const particle_state& p,
                                             std::span<const double> attractor,
                                             const trigger_threshold& gamma) {
    trigger_mask m;
    compute_single_term_mask_into(p, attractor, gamma, m);
    return m;
}

} // namespace psokit
