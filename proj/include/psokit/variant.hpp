#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psokit/errors.hpp"
#include "psokit/trigger.hpp"

namespace psokit {

/// Host update rules the two techniques are layered onto.
enum class host_kind {
    pso,   ///< global-best swarm, linearly cooled inertia
    dms,   ///< small sub-swarms, periodically regrouped
    clpso, ///< per-dimension exemplar learning
    hpso   ///< no inertia, ramped coefficients, restart on stalled velocity
};

inline const char* host_name(host_kind h) {
    switch (h) {
    case host_kind::pso: return "pso";
    case host_kind::dms: return "dms";
    case host_kind::clpso: return "clpso";
    case host_kind::hpso: return "hpso";
    }
    throw contract_error("unknown host");
}

/*!
 * Which techniques a run layers onto its host:
 *   -d   per-dimension best selection
 *   -e   event-triggered velocity terms
 *   -de  both
 *   -de2 both plus restart gating (self-tuning host only)
 */
struct variant_key {
    host_kind host = host_kind::pso;
    bool dimension_wise = false;
    bool event_triggered = false;
    bool de2_gating = false;

    friend bool operator==(const variant_key&, const variant_key&) = default;
};

inline std::string variant_name(const variant_key& v) {
    std::string name = host_name(v.host);
    if (v.de2_gating) return name + "-de2";
    if (v.dimension_wise && v.event_triggered) return name + "-de";
    if (v.dimension_wise) return name + "-d";
    if (v.event_triggered) return name + "-e";
    return name;
}

inline variant_key parse_variant(const std::string& name) {
    for (auto host : {host_kind::pso, host_kind::dms, host_kind::clpso, host_kind::hpso}) {
        const std::string base = host_name(host);
        if (name == base) return {host, false, false, false};
        if (name == base + "-d") return {host, true, false, false};
        if (name == base + "-e") return {host, false, true, false};
        if (name == base + "-de") return {host, true, true, false};
        if (name == base + "-de2") {
            if (host != host_kind::hpso)
                throw config_error("variant '" + name + "': restart gating needs the hpso host");
            return {host, true, true, true};
        }
    }
    throw config_error("unknown variant '" + name + "'");
}

/*!
 * Host hyperparameters.  Defaults follow the usual published settings for
 * each host; every value can be overridden per run.
 */
struct host_hyperparams {
    // inertia hosts (pso, dms, clpso)
    double w_start = 0.9;
    double w_end = 0.4;
    // pso / dms acceleration
    double c1 = 2.0;
    double c2 = 2.0;
    // dms grouping
    int dms_subswarm_size = 4;
    int dms_regroup_period = 5;
    // clpso learning
    double clpso_c = 1.49445;
    int clpso_refresh_gap = 7;
    double clpso_vmax_fraction = 0.2; ///< velocity clamp as a fraction of range width
    // hpso ramps and restarts
    double hpso_c1_start = 2.5;
    double hpso_c1_end = 0.5;
    double hpso_c2_start = 0.5;
    double hpso_c2_end = 2.5;
    double hpso_reinit_fraction_start = 0.5; ///< restart kick bound, fraction of range width
    double hpso_reinit_fraction_end = 0.1;
};

/// Everything needed to run one variant on one objective.
struct variant_config {
    variant_key key;
    host_hyperparams hyper;
    int n_particles = 40;
    int iterations = 5000;
    /// absent = no event trigger; present only for -e / -de / -de2 variants
    std::optional<trigger_threshold> event_gamma;

    void validate(int dimension) const {
        if (n_particles < 1) throw config_error("n_particles must be >= 1");
        if (iterations < 0) throw config_error("iterations must be >= 0");
        if (key.de2_gating && key.host != host_kind::hpso)
            throw config_error("restart gating needs the hpso host");
        if (key.event_triggered != event_gamma.has_value())
            throw config_error("event-triggered variants need a gamma, plain variants must not set one");
        if (event_gamma) event_gamma->validate(dimension);
        if (key.host == host_kind::dms) {
            if (hyper.dms_subswarm_size < 1 || n_particles % hyper.dms_subswarm_size != 0)
                throw config_error("dms sub-swarm size must divide the swarm size");
            if (hyper.dms_regroup_period < 1)
                throw config_error("dms regroup period must be >= 1");
        }
        if (key.host == host_kind::clpso && n_particles < 3)
            throw config_error("clpso needs at least 3 particles");
    }
};

/// Assemble a variant_config from a key, applying gamma only where it belongs.
inline variant_config make_variant_config(const variant_key& key, int n_particles, int iterations,
                                          double gamma,
                                          const std::vector<double>& gamma_per_dimension = {}) {
    variant_config cfg;
    cfg.key = key;
    cfg.n_particles = n_particles;
    cfg.iterations = iterations;
    if (key.event_triggered) {
        trigger_threshold t;
        t.scalar = gamma;
        t.per_dimension = gamma_per_dimension;
        cfg.event_gamma = std::move(t);
    }
    return cfg;
}

} // namespace psokit
