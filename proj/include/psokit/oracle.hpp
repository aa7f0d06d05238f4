#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <vector>

#include "psokit/errors.hpp"
#include "psokit/objective.hpp"
#include "psokit/rng.hpp"
#include "psokit/swarm.hpp"

namespace psokit {

/*!
 * Exhaustive reference for per-dimension best selection.
 *
 * Enumerates every way of combining one coordinate per dimension from the
 * given source vectors and returns the combination with the lowest true cost.
 * Ties go to the lexicographically smallest source-index tuple, which for
 * exactly separable objectives coincides with "lowest particle index per
 * dimension".  Only exactly separable specs are meaningful here, and the
 * combination count is capped at 1e6.
 */
inline std::vector<double> brute_force_best_oracle(
    const std::vector<std::vector<double>>& source_positions, const objective_spec& spec) {
    if (spec.separable != separability::exact)
        throw contract_error("oracle needs an exactly separable objective");
    if (source_positions.empty()) throw contract_error("oracle needs at least one source");
    const auto d = static_cast<std::size_t>(spec.dimension);
    const std::size_t n = source_positions.size();
    for (const auto& pos : source_positions)
        if (pos.size() != d) throw contract_error("oracle: source size mismatch");

    double combinations = 1.0;
    for (std::size_t i = 0; i < d; ++i) combinations *= static_cast<double>(n);
    if (combinations > 1e6) throw contract_error("oracle: combination count exceeds 1e6");

    std::vector<std::size_t> index(d, 0); // current tuple, most significant digit first
    std::vector<double> candidate(d), best_position;
    double best_cost = 0.0;
    bool first = true;
    while (true) {
        for (std::size_t i = 0; i < d; ++i) candidate[i] = source_positions[index[i]][i];
        const double cost = total_cost(spec, candidate);
        // Lexicographic enumeration + strict improvement = smallest tuple wins ties.
        if (first || cost < best_cost) {
            best_cost = cost;
            best_position = candidate;
            first = false;
        }
        std::size_t digit = d;
        while (digit-- > 0) {
            if (++index[digit] < n) break;
            index[digit] = 0;
            if (digit == 0) return best_position;
        }
    }
}

/*!
 * Randomized cross-check of per-dimension selection against the oracle.
 * Builds `instances` small integer-coordinate swarms, derives the
 * per-dimension global best, and compares it coordinate-for-coordinate with
 * the exhaustive answer.  Returns the number of mismatches (0 = pass).
 */
inline int oracle_check(int instances, std::uint64_t seed, std::ostream* log = nullptr) {
    rng_stream rng(seed);
    const objective_id exact_ids[] = {objective_id::sphere, objective_id::rastrigin,
                                      objective_id::michalewicz, objective_id::sum_of_powers};
    int mismatches = 0;
    for (int i = 0; i < instances; ++i) {
        const auto id = exact_ids[rng.uniform_index(4)];
        const int dim = 1 + static_cast<int>(rng.uniform_index(4));  // 1..4
        const int n = 2 + static_cast<int>(rng.uniform_index(4));    // 2..5
        objective_spec spec = make_objective(id, dim);

        std::vector<std::vector<double>> positions(static_cast<std::size_t>(n));
        for (auto& pos : positions) {
            pos.resize(static_cast<std::size_t>(dim));
            for (auto& x : pos)
                x = static_cast<double>(rng.uniform_index(7)) - 3.0; // integers in [-3, 3]
        }

        const auto swarm = make_swarm(spec, positions, /*dimension_wise=*/true);
        const auto expected = brute_force_best_oracle(positions, spec);

        bool equal = swarm.gbest_position.size() == expected.size();
        for (std::size_t k = 0; equal && k < expected.size(); ++k)
            equal = swarm.gbest_position[k] == expected[k];
        if (!equal) {
            ++mismatches;
            if (log)
                *log << "mismatch on instance " << i << " (" << objective_name(id) << ", dim "
                     << dim << ", " << n << " sources)\n";
        }
    }
    return mismatches;
}

} // namespace psokit
