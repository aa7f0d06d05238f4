#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <psokit/psokit.hpp>

using namespace psokit;

namespace {

swarm_state swarm_with_totals(const std::vector<double>& totals) {
    swarm_state s;
    for (std::size_t k = 0; k < totals.size(); ++k) {
        particle_state p;
        p.position = p.pbest_position = {static_cast<double>(k), static_cast<double>(k)};
        p.velocity = {0.0, 0.0};
        p.pbest_components = {totals[k], 0.0};
        p.pbest_total = totals[k];
        s.particles.push_back(std::move(p));
    }
    return s;
}

} // namespace

TEST_CASE("regrouping cuts a permutation into equal sub-swarms") {
    rng_stream rng(9);
    const auto g = dms_regroup(40, 4, rng);
    REQUIRE(g.groups.size() == 10);

    std::vector<int> all;
    for (const auto& members : g.groups) {
        REQUIRE(members.size() == 4);
        all.insert(all.end(), members.begin(), members.end());
    }
    std::sort(all.begin(), all.end());
    std::vector<int> iota(40);
    std::iota(iota.begin(), iota.end(), 0);
    CHECK(all == iota); // every particle in exactly one group

    for (std::size_t gi = 0; gi < g.groups.size(); ++gi)
        for (int m : g.groups[gi])
            CHECK(g.group_of[static_cast<std::size_t>(m)] == static_cast<int>(gi));
}

TEST_CASE("regrouping is deterministic per stream state") {
    rng_stream a(5), b(5);
    const auto ga = dms_regroup(12, 3, a);
    const auto gb = dms_regroup(12, 3, b);
    CHECK(ga.groups == gb.groups);

    // consuming the stream changes the next grouping
    const auto gc = dms_regroup(12, 3, a);
    CHECK(ga.groups != gc.groups);
}

TEST_CASE("swarm sizes that do not divide evenly are rejected") {
    rng_stream rng(1);
    CHECK_THROWS_AS(dms_regroup(39, 4, rng), config_error);
    CHECK_THROWS_AS(dms_regroup(10, 0, rng), config_error);
}

TEST_CASE("sub-swarm attractor picks the lowest total, first index on ties") {
    const auto s = swarm_with_totals({5.0, 3.0, 3.0, 7.0});
    CHECK(subswarm_best_member(s, {0, 1, 2, 3}) == 1);
    CHECK(subswarm_best_member(s, {3, 0}) == 0);
    CHECK(subswarm_best_member(s, {3}) == 3);
    CHECK_THROWS_AS(subswarm_best_member(s, {}), contract_error);
}

TEST_CASE("per-dimension sub-swarm attractor mixes members") {
    swarm_state s;
    particle_state a;
    a.pbest_position = {10.0, 20.0};
    a.pbest_components = {1.0, 9.0};
    particle_state b;
    b.pbest_position = {30.0, 40.0};
    b.pbest_components = {4.0, 2.0};
    s.particles = {a, b};

    std::vector<double> out(2);
    subswarm_dimension_attractor(s, {0, 1}, out);
    CHECK(out == std::vector<double>{10.0, 40.0});

    // ties take the first listed member
    s.particles[1].pbest_components = {1.0, 9.0};
    subswarm_dimension_attractor(s, {0, 1}, out);
    CHECK(out == std::vector<double>{10.0, 20.0});
}

TEST_CASE("learning probability ladder spans 0.05 to 0.5") {
    const auto pc = clpso_learning_probabilities(40);
    REQUIRE(pc.size() == 40);
    CHECK(pc.front() == 0.05);
    CHECK(std::abs(pc.back() - 0.5) < 1e-12);
    for (std::size_t k = 1; k < pc.size(); ++k) CHECK(pc[k] > pc[k - 1]);

    const auto single = clpso_learning_probabilities(1);
    CHECK(single == std::vector<double>{0.05});
}

TEST_CASE("exemplar assignment at probability zero forces exactly one foreign dimension") {
    const auto spec = make_objective(objective_id::sphere, 6);
    rng_stream init(3);
    const auto swarm = initialize_swarm(spec, 5, init, false);

    rng_stream rng(21);
    std::vector<int> exemplar(6);
    for (int trial = 0; trial < 50; ++trial) {
        clpso_assign_exemplar(swarm, 2, 0.0, rng, exemplar);
        int foreign = 0;
        for (int e : exemplar) {
            REQUIRE(e >= 0);
            REQUIRE(e < 5);
            if (e != 2) ++foreign;
        }
        CHECK(foreign == 1); // a particle never learns purely from itself
    }
}

TEST_CASE("exemplar assignment at probability one never self-selects") {
    const auto spec = make_objective(objective_id::sphere, 4);
    rng_stream init(3);
    const auto swarm = initialize_swarm(spec, 6, init, false);

    rng_stream rng(22);
    std::vector<int> exemplar(4);
    for (int trial = 0; trial < 50; ++trial) {
        clpso_assign_exemplar(swarm, 1, 1.0, rng, exemplar);
        for (int e : exemplar) CHECK(e != 1);
    }
}

TEST_CASE("tournaments favour the lower pbest total") {
    // with 3 particles the tournament always compares the two non-self ones
    auto s = swarm_with_totals({9.0, 1.0, 5.0});
    rng_stream rng(4);
    std::vector<int> exemplar(3);
    for (int trial = 0; trial < 20; ++trial) {
        clpso_assign_exemplar(s, 2, 1.0, rng, exemplar);
        for (int e : exemplar) CHECK(e == 1); // total 1 beats total 9 every time
    }

    // equal totals: the lower index wins
    auto tied = swarm_with_totals({3.0, 3.0, 3.0});
    for (int trial = 0; trial < 20; ++trial) {
        clpso_assign_exemplar(tied, 2, 1.0, rng, exemplar);
        for (int e : exemplar) CHECK(e == 0);
    }
}

TEST_CASE("exemplar assignment needs at least three particles") {
    const auto spec = make_objective(objective_id::sphere, 2);
    rng_stream init(3), rng(1);
    const auto swarm = initialize_swarm(spec, 2, init, false);
    std::vector<int> exemplar(2);
    CHECK_THROWS_AS(clpso_assign_exemplar(swarm, 0, 0.5, rng, exemplar), config_error);
}

TEST_CASE("exemplar positions are assembled coordinate by coordinate") {
    swarm_state s;
    for (int k = 0; k < 3; ++k) {
        particle_state p;
        p.pbest_position = {10.0 * k, 10.0 * k + 1.0, 10.0 * k + 2.0};
        s.particles.push_back(std::move(p));
    }
    const std::vector<int> sources{2, 0, 1};
    std::vector<double> out(3);
    clpso_exemplar_position(s, sources, out);
    CHECK(out == std::vector<double>{20.0, 1.0, 12.0});
}
