#pragma once

#include <cstdint>

namespace psokit {

/*!
 * Multiplication ledger for one run.
 *
 * Only floating-point multiplications are counted; additions, comparisons and
 * RNG draws are free.  Transcendental calls inside objective evaluations are
 * priced as one multiplication each, which is folded into the per-objective
 * evaluation cost (see objective.hpp).  The skip counters record how many
 * velocity terms the event trigger suppressed; they are bookkeeping only and
 * never feed back into the multiplication totals.
 */
struct op_counter {
    std::uint64_t update_mults = 0;   ///< velocity-update multiplications
    std::uint64_t cost_mults = 0;     ///< objective-evaluation multiplications
    std::uint64_t cognitive_skips = 0;///< cognitive/learning terms suppressed by the trigger
    std::uint64_t social_skips = 0;   ///< social terms suppressed by the trigger

    std::uint64_t total_mults() const { return update_mults + cost_mults; }

    op_counter& operator+=(const op_counter& o) {
        update_mults += o.update_mults;
        cost_mults += o.cost_mults;
        cognitive_skips += o.cognitive_skips;
        social_skips += o.social_skips;
        return *this;
    }

    friend bool operator==(const op_counter&, const op_counter&) = default;
};

} // namespace psokit
