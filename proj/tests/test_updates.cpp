#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include <psokit/psokit.hpp>

using namespace psokit;

namespace {

particle_state particle_at(std::vector<double> position, std::vector<double> velocity,
                           std::vector<double> pbest) {
    particle_state p;
    p.position = std::move(position);
    p.velocity = std::move(velocity);
    p.pbest_position = std::move(pbest);
    p.pbest_components.assign(p.position.size(), 0.0);
    return p;
}

trigger_threshold gamma_of(double g) {
    trigger_threshold t;
    t.scalar = g;
    return t;
}

} // namespace

TEST_CASE("trigger masks terms inside the gamma band") {
    auto p = particle_at({1.0, 1.0}, {0, 0}, {1.0 + 1e-8, 2.0});
    const std::vector<double> social{1.0 + 2e-7, 1.0};

    const auto m = compute_trigger_mask(p, social, gamma_of(1e-7));
    CHECK(m.cognitive_active == std::vector<std::uint8_t>{0, 1}); // 1e-8 < gamma, 1 >= gamma
    CHECK(m.social_active == std::vector<std::uint8_t>{1, 0});    // 2e-7 >= gamma, 0 < gamma
}

TEST_CASE("gamma zero keeps every term active, distance zero included") {
    auto p = particle_at({1.0, 1.0}, {0, 0}, {1.0, 1.0});
    const std::vector<double> social{1.0, 1.0};
    const auto m = compute_trigger_mask(p, social, gamma_of(0.0));
    CHECK(m.cognitive_active == std::vector<std::uint8_t>{1, 1});
    CHECK(m.social_active == std::vector<std::uint8_t>{1, 1});
}

TEST_CASE("distance exactly gamma stays active") {
    auto p = particle_at({0.0}, {0}, {1e-7});
    const std::vector<double> social{0.0};
    const auto m = compute_trigger_mask(p, social, gamma_of(1e-7));
    CHECK(m.cognitive_active == std::vector<std::uint8_t>{1});
    CHECK(m.social_active == std::vector<std::uint8_t>{0});
}

TEST_CASE("per-dimension thresholds apply dimension by dimension") {
    auto p = particle_at({0.0, 0.0}, {0, 0}, {0.5, 0.5});
    const std::vector<double> social{0.5, 0.5};
    trigger_threshold t;
    t.scalar = 0.0;
    t.per_dimension = {0.4, 0.6};
    const auto m = compute_trigger_mask(p, social, t);
    CHECK(m.cognitive_active == std::vector<std::uint8_t>{1, 0});

    t.per_dimension = {0.4};
    CHECK_THROWS_AS(t.validate(2), config_error);
    trigger_threshold neg;
    neg.scalar = -1.0;
    CHECK_THROWS_AS(neg.validate(2), config_error);
}

TEST_CASE("single-term mask gates the learning slot only") {
    auto p = particle_at({1.0, 1.0}, {0, 0}, {9.0, 9.0});
    const std::vector<double> exemplar{1.0 + 1e-9, 4.0};
    const auto m = compute_single_term_mask(p, exemplar, gamma_of(1e-7));
    CHECK(m.cognitive_active == std::vector<std::uint8_t>{0, 1});
    CHECK(m.social_active == std::vector<std::uint8_t>{1, 1}); // unused slot stays open
}

TEST_CASE("fully active velocity update matches the formula and costs 5 per dimension") {
    auto p = particle_at({1.0, -2.0}, {0.5, 0.25}, {3.0, 0.0});
    const std::vector<double> social{-1.0, 4.0};
    const double w = 0.7, c1 = 1.5, c2 = 2.0;

    rng_stream probe(99);
    std::vector<double> expected(2);
    for (std::size_t i = 0; i < 2; ++i) {
        const double r1 = probe.uniform01();
        const double r2 = probe.uniform01();
        double v = w * p.velocity[i];
        v += c1 * r1 * (p.pbest_position[i] - p.position[i]);
        v += c2 * r2 * (social[i] - p.position[i]);
        expected[i] = v;
    }

    rng_stream rng(99);
    op_counter counter;
    const auto got = velocity_update(p, p.pbest_position, social, w, c1, c2, true,
                                     trigger_mask::all_active(2), rng, counter);
    CHECK(got == expected);
    CHECK(counter.update_mults == 10);
    CHECK(counter.cognitive_skips == 0);
    CHECK(counter.social_skips == 0);
    CHECK(rng.draw_count() == 4);
}

TEST_CASE("masked terms vanish but their uniforms are still drawn") {
    auto p = particle_at({1.0, -2.0}, {0.5, 0.25}, {3.0, 0.0});
    const std::vector<double> social{-1.0, 4.0};
    trigger_mask mask;
    mask.cognitive_active = {0, 0};
    mask.social_active = {0, 0};

    rng_stream rng(123);
    op_counter counter;
    const auto got = velocity_update(p, p.pbest_position, social, 0.7, 1.5, 2.0, true, mask, rng,
                                     counter);
    CHECK(got == std::vector<double>{0.7 * 0.5, 0.7 * 0.25});
    CHECK(counter.update_mults == 2); // one inertia product per dimension
    CHECK(counter.cognitive_skips == 2);
    CHECK(counter.social_skips == 2);
    CHECK(rng.draw_count() == 4); // draw order never depends on the mask
}

TEST_CASE("without an inertia term a fully masked update is free and zero") {
    auto p = particle_at({1.0}, {0.5}, {3.0});
    const std::vector<double> social{-1.0};
    trigger_mask mask;
    mask.cognitive_active = {0};
    mask.social_active = {0};
    rng_stream rng(1);
    op_counter counter;
    const auto got = velocity_update(p, p.pbest_position, social, 0.0, 2.0, 2.0, false, mask, rng,
                                     counter);
    CHECK(got == std::vector<double>{0.0});
    CHECK(counter.update_mults == 0);
}

TEST_CASE("a particle sitting on both attractors with zero velocity stays put") {
    auto p = particle_at({2.0, 3.0}, {0.0, 0.0}, {2.0, 3.0});
    const std::vector<double> social{2.0, 3.0};
    rng_stream rng(7);
    op_counter counter;
    const auto got = velocity_update(p, p.pbest_position, social, 1.0, 2.0, 2.0, true,
                                     trigger_mask::all_active(2), rng, counter);
    CHECK(got == std::vector<double>{0.0, 0.0});
}

TEST_CASE("single-term update clamps to vmax and discards the spare draw") {
    auto p = particle_at({0.0}, {0.0}, {0.0});
    const std::vector<double> exemplar{100.0};
    rng_stream probe(5);
    const double r1 = probe.uniform01();
    double expected = 0.5 * 0.0 + 2.0 * r1 * (100.0 - 0.0);
    if (expected > 1.0) expected = 1.0;

    rng_stream rng(5);
    op_counter counter;
    std::vector<double> out(1);
    single_term_velocity_update_into(p, exemplar, 0.5, 2.0, 1.0, trigger_mask::all_active(1), rng,
                                     counter, out);
    CHECK(out[0] == expected);
    CHECK(out[0] == 1.0); // any r1 above 0.005 hits the clamp
    CHECK(counter.update_mults == 3);
    CHECK(rng.draw_count() == 2);
}

TEST_CASE("single-term update with a masked learning term decays by inertia alone") {
    auto p = particle_at({0.0}, {0.8}, {0.0});
    const std::vector<double> exemplar{0.0};
    trigger_mask mask;
    mask.cognitive_active = {0};
    mask.social_active = {1};
    rng_stream rng(5);
    op_counter counter;
    std::vector<double> out(1);
    single_term_velocity_update_into(p, exemplar, 0.5, 2.0, 10.0, mask, rng, counter, out);
    CHECK(out[0] == 0.4);
    CHECK(counter.update_mults == 1);
    CHECK(counter.cognitive_skips == 1);
    CHECK(rng.draw_count() == 2);
}

TEST_CASE("conventional pbest replacement is whole-vector and strict") {
    const auto spec = make_objective(objective_id::sphere, 3);
    particle_state p;
    p.pbest_position = {0.0, 7.0, 3.0};
    auto costs = compute_component_costs(spec, p.pbest_position);
    p.pbest_components = costs.components;
    p.pbest_total = costs.total; // 58

    const std::vector<double> worse{8.0, 4.0, -1.0}; // 81
    conventional_best_update(p, worse, compute_component_costs(spec, worse));
    CHECK(p.pbest_position == std::vector<double>{0.0, 7.0, 3.0});
    CHECK(p.pbest_total == 58.0);

    const std::vector<double> better{0.0, 4.0, -1.0}; // 17
    conventional_best_update(p, better, compute_component_costs(spec, better));
    CHECK(p.pbest_position == better);
    CHECK(p.pbest_total == 17.0);
}

TEST_CASE("conventional ties keep the incumbent") {
    const auto spec = make_objective(objective_id::sphere, 2);
    particle_state p;
    p.pbest_position = {1.0, 1.0};
    auto costs = compute_component_costs(spec, p.pbest_position);
    p.pbest_components = costs.components;
    p.pbest_total = costs.total; // 2

    const std::vector<double> alias{-1.0, -1.0}; // also 2
    conventional_best_update(p, alias, compute_component_costs(spec, alias));
    CHECK(p.pbest_position == std::vector<double>{1.0, 1.0});
}

TEST_CASE("dimension-wise pbest keeps the best coordinate of each dimension") {
    // Conventional comparison would reject the candidate outright (81 > 58);
    // per-dimension comparison salvages its two good coordinates.
    const auto spec = make_objective(objective_id::sphere, 3);
    particle_state p;
    p.pbest_position = {0.0, 7.0, 3.0};
    auto costs = compute_component_costs(spec, p.pbest_position);
    p.pbest_components = costs.components;
    p.pbest_total = costs.total;

    const std::vector<double> candidate{8.0, 4.0, -1.0};
    dimension_wise_best_update(p, candidate, compute_component_costs(spec, candidate), spec);
    CHECK(p.pbest_position == std::vector<double>{0.0, 4.0, -1.0});
    CHECK(p.pbest_components == std::vector<double>{0.0, 16.0, 1.0});
    CHECK(p.pbest_total == 17.0);
}

TEST_CASE("dimension-wise ties keep the incumbent coordinate") {
    const auto spec = make_objective(objective_id::sphere, 2);
    particle_state p;
    p.pbest_position = {1.0, 1.0};
    auto costs = compute_component_costs(spec, p.pbest_position);
    p.pbest_components = costs.components;
    p.pbest_total = costs.total;

    const std::vector<double> candidate{-1.0, 2.0}; // components {1, 4}: tie, worse
    dimension_wise_best_update(p, candidate, compute_component_costs(spec, candidate), spec);
    CHECK(p.pbest_position == std::vector<double>{1.0, 1.0});
    CHECK(p.pbest_total == 2.0);
}

TEST_CASE("dimension-wise pbest re-evaluates mixtures of coupled objectives") {
    // rosenbrock components only describe the vectors they came from, so the
    // mixed vector's stored total must come from a fresh evaluation.
    const auto spec = make_objective(objective_id::rosenbrock, 3);
    particle_state p;
    p.pbest_position = {1.0, 1.0, 2.0};
    auto costs = compute_component_costs(spec, p.pbest_position);
    p.pbest_components = costs.components; // {0, 100, 0}
    p.pbest_total = costs.total;           // 100

    const std::vector<double> candidate{0.0, 0.0, 0.0}; // components {1, 1, 0}
    dimension_wise_best_update(p, candidate, compute_component_costs(spec, candidate), spec);
    CHECK(p.pbest_position == std::vector<double>{1.0, 0.0, 2.0});
    CHECK(p.pbest_components == std::vector<double>{0.0, 1.0, 0.0});
    CHECK(p.pbest_total == 501.0); // true cost of the mixture, not the component sum
    CHECK(p.pbest_total == total_cost(spec, p.pbest_position));
}

TEST_CASE("dimension-wise gbest merges the swarm's best coordinates") {
    const auto spec = make_objective(objective_id::sphere, 3);
    swarm_state swarm;
    particle_state p;
    p.position = p.pbest_position = {0.0, 4.0, -1.0};
    p.velocity = {0, 0, 0};
    p.pbest_components = {0.0, 16.0, 1.0};
    p.pbest_total = 17.0;
    swarm.particles.push_back(p);
    swarm.gbest_position = {-4.0, 2.0, 6.0};
    swarm.gbest_components = {16.0, 4.0, 36.0};
    swarm.gbest_total = 56.0;

    dimension_wise_global_update(swarm, spec);
    CHECK(swarm.gbest_position == std::vector<double>{0.0, 2.0, -1.0});
    CHECK(swarm.gbest_components == std::vector<double>{0.0, 4.0, 1.0});
    CHECK(swarm.gbest_total == 5.0);

    // running it again changes nothing: every component already minimal
    dimension_wise_global_update(swarm, spec);
    CHECK(swarm.gbest_position == std::vector<double>{0.0, 2.0, -1.0});
    CHECK(swarm.gbest_total == 5.0);
}

TEST_CASE("linear schedule hits both endpoints") {
    CHECK(linear_schedule(0.9, 0.4, 0, 10) == 0.9);
    CHECK(linear_schedule(0.9, 0.4, 9, 10) == 0.4);
    CHECK(linear_schedule(0.9, 0.4, 0, 1) == 0.9); // degenerate budget pins the start
    CHECK(linear_schedule(5.0, 1.0, 0, 0) == 5.0);
    CHECK(linear_schedule(2.5, 0.5, 50, 101) == 1.5); // exact midpoint
}

TEST_CASE("self-tuning coefficients ramp opposite ways with no inertia") {
    const auto start = hpso_coefficients(0, 100, 2.5, 0.5, 0.5, 2.5);
    CHECK(start.w == 0.0);
    CHECK(start.c1 == 2.5);
    CHECK(start.c2 == 0.5);

    const auto end = hpso_coefficients(99, 100, 2.5, 0.5, 0.5, 2.5);
    CHECK(end.c1 == 0.5);
    CHECK(end.c2 == 2.5);

    const auto mid = hpso_coefficients(50, 101, 2.5, 0.5, 0.5, 2.5);
    CHECK(mid.c1 == 1.5);
    CHECK(mid.c2 == 1.5);
}

TEST_CASE("restart kick fires only on self-inflicted zeros") {
    rng_stream rng(77);

    // nonzero velocity passes through untouched and draws nothing
    CHECK(hpso_velocity_reinit(0.25, false, false, 0, 100, 0.5, 0.1, 20.0, rng) == 0.25);
    CHECK(hpso_velocity_reinit(-3.0, true, true, 0, 100, 0.5, 0.1, 20.0, rng) == -3.0);
    CHECK(rng.draw_count() == 0);

    // trigger-forced zero with gating stays down
    CHECK(hpso_velocity_reinit(0.0, true, true, 0, 100, 0.5, 0.1, 20.0, rng) == 0.0);
    CHECK(rng.draw_count() == 0);

    // self-inflicted zero gets a bounded kick; the bound shrinks over the run
    const double early = hpso_velocity_reinit(0.0, false, true, 0, 100, 0.5, 0.1, 20.0, rng);
    CHECK(std::abs(early) <= 0.5 * 20.0);
    CHECK(rng.draw_count() == 1);

    const double late = hpso_velocity_reinit(0.0, false, true, 99, 100, 0.5, 0.1, 20.0, rng);
    CHECK(std::abs(late) <= 0.1 * 20.0);

    // without gating even trigger-forced zeros are kicked
    rng_stream probe(3), fresh(3);
    const double expected = -0.5 * 20.0 + probe.uniform01() * (0.5 * 20.0 - -0.5 * 20.0);
    CHECK(hpso_velocity_reinit(0.0, true, false, 0, 100, 0.5, 0.1, 20.0, fresh) == expected);
}

TEST_CASE("variant names round-trip and illegal combinations are rejected") {
    const char* names[] = {"pso",     "pso-d",   "pso-e",   "pso-de", "dms",      "dms-d",
                           "dms-e",   "dms-de",  "clpso",   "clpso-d", "clpso-e", "clpso-de",
                           "hpso",    "hpso-d",  "hpso-e",  "hpso-de", "hpso-de2"};
    for (const char* name : names) CHECK(variant_name(parse_variant(name)) == name);

    CHECK_THROWS_AS(parse_variant("pso-de2"), config_error);
    CHECK_THROWS_AS(parse_variant("clpso-de2"), config_error);
    CHECK_THROWS_AS(parse_variant("abc"), config_error);

    variant_config bad;
    bad.key = {host_kind::pso, true, true, true};
    bad.event_gamma = gamma_of(1e-7);
    CHECK_THROWS_AS(bad.validate(3), config_error);

    variant_config missing_gamma;
    missing_gamma.key = parse_variant("pso-e");
    CHECK_THROWS_AS(missing_gamma.validate(3), config_error);

    variant_config stray_gamma;
    stray_gamma.key = parse_variant("pso");
    stray_gamma.event_gamma = gamma_of(1e-7);
    CHECK_THROWS_AS(stray_gamma.validate(3), config_error);

    auto ok = make_variant_config(parse_variant("hpso-de2"), 40, 100, 1e-7);
    ok.validate(30);
    CHECK(ok.event_gamma.has_value());
    CHECK(ok.event_gamma->scalar == 1e-7);

    const auto plain = make_variant_config(parse_variant("dms"), 40, 100, 1e-7);
    CHECK_FALSE(plain.event_gamma.has_value()); // gamma only lands on -e variants
    plain.validate(30);
}
