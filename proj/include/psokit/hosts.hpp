#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "psokit/errors.hpp"
#include "psokit/rng.hpp"
#include "psokit/swarm.hpp"

namespace psokit {

/// Sub-swarm layout for the multi-swarm host.
struct dms_grouping {
    std::vector<std::vector<int>> groups; ///< particle indices per sub-swarm
    std::vector<int> group_of;            ///< sub-swarm index per particle
};

/*!
 * Randomly permute the swarm into n/size sub-swarms.  Fisher-Yates on the
 * index vector, groups cut as consecutive chunks of the shuffle; assignments
 * stay fixed until the next regroup.
 */
inline dms_grouping dms_regroup(int n_particles, int subswarm_size, rng_stream& rng) {
    if (subswarm_size < 1 || n_particles % subswarm_size != 0)
        throw config_error("dms sub-swarm size must divide the swarm size");
    std::vector<int> order(static_cast<std::size_t>(n_particles));
    for (int i = 0; i < n_particles; ++i) order[static_cast<std::size_t>(i)] = i;
    for (int i = n_particles - 1; i > 0; --i) {
        const auto j = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(i) + 1));
        std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
    }
    dms_grouping g;
    g.group_of.assign(static_cast<std::size_t>(n_particles), 0);
    const int n_groups = n_particles / subswarm_size;
    g.groups.resize(static_cast<std::size_t>(n_groups));
    for (int gi = 0; gi < n_groups; ++gi) {
        auto& members = g.groups[static_cast<std::size_t>(gi)];
        members.assign(order.begin() + static_cast<std::ptrdiff_t>(gi) * subswarm_size,
                       order.begin() + static_cast<std::ptrdiff_t>(gi + 1) * subswarm_size);
        for (int m : members) g.group_of[static_cast<std::size_t>(m)] = gi;
    }
    return g;
}

/// Member with the lowest pbest total; ascending scan keeps the lowest index on ties.
inline int subswarm_best_member(const swarm_state& swarm, const std::vector<int>& members) {
    if (members.empty()) throw contract_error("sub-swarm has no members");
    int best = members.front();
    for (int m : members)
        if (swarm.particles[static_cast<std::size_t>(m)].pbest_total <
            swarm.particles[static_cast<std::size_t>(best)].pbest_total)
            best = m;
    return best;
}

/// Per-dimension sub-swarm attractor: each dimension takes the member with the
/// lowest pbest component (lowest index on ties), mirroring the global rule.
inline void subswarm_dimension_attractor(const swarm_state& swarm, const std::vector<int>& members,
                                         std::span<double> out_position) {
    if (members.empty()) throw contract_error("sub-swarm has no members");
    const std::size_t d = out_position.size();
    for (std::size_t i = 0; i < d; ++i) {
        int best = members.front();
        for (int m : members)
            if (swarm.particles[static_cast<std::size_t>(m)].pbest_components[i] <
                swarm.particles[static_cast<std::size_t>(best)].pbest_components[i])
                best = m;
        out_position[i] = swarm.particles[static_cast<std::size_t>(best)].pbest_position[i];
    }
}

/*!
 * Learning probability ladder for the comprehensive-learning host: particle 0
 * learns from others rarely (0.05), the last particle often (0.5), with an
 * exponential ramp in between.
 */
inline std::vector<double> clpso_learning_probabilities(int n_particles) {
    std::vector<double> pc(static_cast<std::size_t>(n_particles));
    const double denom = std::exp(10.0) - 1.0;
    for (int k = 0; k < n_particles; ++k) {
        const double t = n_particles > 1
                             ? static_cast<double>(k) / static_cast<double>(n_particles - 1)
                             : 0.0;
        pc[static_cast<std::size_t>(k)] = 0.05 + 0.45 * (std::exp(10.0 * t) - 1.0) / denom;
    }
    return pc;
}

/*!
 * Assign exemplar source particles for one particle, dimension by dimension.
 * With probability pc a dimension learns from the winner (lower pbest total,
 * lower index on ties) of two distinct other particles; otherwise it learns
 * from the particle's own pbest.  If every dimension self-selected, one random
 * dimension is forced through the same tournament so the particle never
 * learns purely from itself.
 *
 * `exemplar_of[d]` receives the source particle index (possibly `self`).
 * Needs at least 3 particles so two distinct others exist.
 */
inline void clpso_assign_exemplar(const swarm_state& swarm, int self, double pc, rng_stream& rng,
                                  std::span<int> exemplar_of) {
    const int n = swarm.size();
    if (n < 3) throw config_error("clpso needs at least 3 particles");

    auto pick_other = [&](int excluded_a, int excluded_b) {
        // Draw an index over the remaining particles, then map past the holes.
        int slots = n - 1 - (excluded_b >= 0 ? 1 : 0);
        auto idx = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(slots)));
        for (int candidate = 0;; ++candidate) {
            if (candidate == excluded_a || candidate == excluded_b) continue;
            if (idx == 0) return candidate;
            --idx;
        }
    };
    auto tournament = [&]() {
        const int a = pick_other(self, -1);
        const int b = pick_other(self, a);
        const auto& pa = swarm.particles[static_cast<std::size_t>(a)];
        const auto& pb = swarm.particles[static_cast<std::size_t>(b)];
        if (pb.pbest_total < pa.pbest_total) return b;
        if (pa.pbest_total < pb.pbest_total) return a;
        return a < b ? a : b;
    };

    bool any_other = false;
    for (std::size_t d = 0; d < exemplar_of.size(); ++d) {
        if (rng.uniform01() < pc) {
            exemplar_of[d] = tournament();
            any_other = true;
        } else {
            exemplar_of[d] = self;
        }
    }
    if (!any_other) {
        const auto forced = rng.uniform_index(exemplar_of.size());
        exemplar_of[forced] = tournament();
    }
}

/// Materialize the exemplar position vector from its per-dimension sources.
inline void clpso_exemplar_position(const swarm_state& swarm, std::span<const int> exemplar_of,
                                    std::span<double> out_position) {
    for (std::size_t d = 0; d < out_position.size(); ++d)
        out_position[d] =
            swarm.particles[static_cast<std::size_t>(exemplar_of[d])].pbest_position[d];
}

} // namespace psokit
