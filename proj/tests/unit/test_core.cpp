#include <doctest.h>

#include <cmath>
#include <random>

#include "derived_values.hpp"
#include "fstdp/datagen.hpp"
#include "fstdp/engine.hpp"
#include "fstdp/error.hpp"
#include "fstdp/neuron.hpp"
#include "reference.hpp"

using namespace fstdp;

namespace {

SpikeRaster random_raster(std::size_t n, std::size_t steps, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution b(p);
    SpikeRaster r(n, steps);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < steps; ++t) r.set(i, t, b(rng));
    return r;
}

ProcessSpec two_group_spec(std::size_t steps, std::uint64_t seed) {
    ProcessSpec ps;
    ps.n_channels = 100;
    ps.dt = 0.1;
    ps.n_steps = steps;
    ps.rates.assign(100, 5.0);
    for (std::size_t i = 0; i < 10; ++i) {
        ps.rates[i] = 1.0;
        ps.correlated_set.push_back(i);
    }
    ps.c = 0.1;
    ps.seed = seed;
    return ps;
}

}  // namespace

TEST_CASE("raster basics") {
    SpikeRaster r(3, 5);
    CHECK(r.n_channels() == 3);
    CHECK(r.n_steps() == 5);
    CHECK(r.total_events() == 0);
    r.set(1, 2, true);
    r.set(1, 4, true);
    CHECK(r.at(1, 2));
    CHECK_FALSE(r.at(0, 2));
    CHECK(r.count(1) == 2);
    CHECK(r.mean(1) == doctest::Approx(0.4));
    const auto s = r.slice(2, 3);
    CHECK(s.n_steps() == 3);
    CHECK(s.at(1, 0));
    CHECK(s.at(1, 2));
    CHECK_THROWS_AS(SpikeRaster(0, 5), InvalidInput);
    CHECK_THROWS_AS(SpikeRaster(2, 0), InvalidInput);
}

TEST_CASE("integrate_step below threshold") {
    NeuronConfig cfg{1.0, 2.0, 0.0};
    const auto out = integrate_step(NeuronState{}, cfg, 0.3);
    CHECK(out.state.v == doctest::Approx(0.3));
    CHECK_FALSE(out.fired);
}

TEST_CASE("integrate_step crossing resets") {
    NeuronConfig cfg{1.0, 2.0, 0.0};
    NeuronState s;
    s.v = 0.9 * std::exp(1.0 / cfg.tau_m);  // leaks to 0.9
    const auto out = integrate_step(s, cfg, 0.2, 7);
    CHECK(out.fired);
    CHECK(out.state.v == 0.0);
    REQUIRE(out.state.last_fire_step);
    CHECK(*out.state.last_fire_step == 7);
}

TEST_CASE("integrate_step leak") {
    NeuronConfig cfg{10.0, 2.0, 0.0};
    NeuronState s;
    s.v = 1.0;
    const auto out = integrate_step(s, cfg, 0.0);
    CHECK(out.state.v == doctest::Approx(oracle::kLeakOneStep).epsilon(1e-14));
    CHECK_FALSE(out.fired);
}

TEST_CASE("integrate_step rejects bad drive") {
    NeuronConfig cfg;
    CHECK_THROWS_AS(integrate_step(NeuronState{}, cfg, std::nan("")), InvalidInput);
    CHECK_THROWS_AS(integrate_step(NeuronState{}, cfg, INFINITY), InvalidInput);
    CHECK_THROWS_AS(integrate_step(NeuronState{}, cfg, -0.1), InvalidInput);
}

TEST_CASE("leak sanity: zero input decays monotonically and never fires") {
    NeuronConfig cfg{1.0, 2.0, 0.0};
    NeuronState s;
    s.v = 0.99;
    for (int t = 0; t < 100; ++t) {
        const auto out = integrate_step(s, cfg, 0.0);
        CHECK_FALSE(out.fired);
        CHECK(out.state.v <= s.v);
        CHECK(out.state.v >= 0.0);
        s = out.state;
    }
}

TEST_CASE("neuron config validation") {
    CHECK_THROWS_AS((NeuronConfig{0.0, 2.0, 0.0}.validate()), InvalidInput);
    CHECK_THROWS_AS((NeuronConfig{1.0, 0.0, 0.0}.validate()), InvalidInput);
    CHECK_THROWS_AS((SimClock{0.0, 0}.validate()), InvalidInput);
}

TEST_CASE("all-zero raster leaves weights untouched") {
    SpikeRaster r(5, 200);
    PlasticityConfig rule;
    rule.initial_weights = std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5};
    const auto res = run_simulation(r, NeuronConfig{}, rule, SimClock{}, 3);
    CHECK(res.final_weights == *rule.initial_weights);
    CHECK(res.output_count() == 0);
    CHECK(res.output_rate == 0.0);
}

TEST_CASE("identical inputs give bit-identical results") {
    const auto r = random_raster(8, 2000, 0.2, 11);
    NeuronConfig n{1.2, 2.0, 0.0};
    PlasticityConfig rule;
    SimulationOptions opt;
    opt.trajectory_stride = 100;
    const auto a = run_simulation(r, n, rule, SimClock{}, 42, opt);
    const auto b = run_simulation(r, n, rule, SimClock{}, 42, opt);
    CHECK(a == b);
    CHECK(a.rng_seed == 42);
}

TEST_CASE("result bookkeeping") {
    const auto r = random_raster(6, 3000, 0.15, 5);
    NeuronConfig n{1.0, 2.0, 0.0};
    SimulationOptions opt;
    opt.trajectory_stride = 250;
    const auto res = run_simulation(r, n, PlasticityConfig{}, SimClock{0.1, 0}, 1, opt);
    CHECK(res.final_weights.size() == 6);
    CHECK(res.output_spikes.size() == 3000);
    CHECK(res.output_rate == doctest::Approx(res.output_count() / (3000 * 0.1)));
    CHECK(res.weight_trajectory.steps.front() == 0);
    CHECK(res.weight_trajectory.steps.back() == 2999);
    for (const auto& row : res.weight_trajectory.weights)
        for (double w : row) CHECK((w >= 0.0 && w <= 1.0));
}

TEST_CASE("initial weight count mismatch is a dimension error") {
    const auto r = random_raster(4, 100, 0.1, 1);
    PlasticityConfig rule;
    rule.initial_weights = std::vector<double>{0.5, 0.5};
    CHECK_THROWS_AS(run_simulation(r, NeuronConfig{}, rule, SimClock{}, 1), DimensionError);
}

TEST_CASE("jump = 0 matches an independent plain STDP engine bit for bit") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto r = random_raster(12, 5000, 0.12, seed);
        const KernelParams k(0.02, 0.03, 2.0, 2.0, 0.002);
        PlasticityConfig rule;
        rule.kernel = k;
        rule = as_stdp(rule);
        const NeuronConfig n{1.3, 2.0, 0.0};
        const auto res = run_simulation(r, n, rule, SimClock{}, seed);
        const auto ref = oracle::plain_stdp(r, n.v_th, n.tau_m, n.v_reset, k, rule.initial_weight);
        CHECK(res.output_spikes == ref.spikes);
        CHECK(res.final_weights == ref.weights);
    }
}

TEST_CASE("calibrate_threshold hits the target band") {
    const auto raster = generate_correlated_binary(two_group_spec(20000, 3));
    PlasticityConfig rule;
    const SimClock clock{0.1, 0};
    const double v_th = calibrate_threshold(raster, NeuronConfig{}, rule, clock, 1.0);
    SimulationOptions pilot;
    pilot.freeze_weights = true;
    NeuronConfig n;
    n.v_th = v_th;
    const double rate = run_simulation(raster, n, rule, clock, 0, pilot).output_rate;
    CHECK(rate >= 0.8);
    CHECK(rate <= 1.2);
}

TEST_CASE("calibrate_threshold errors") {
    const auto raster = random_raster(5, 2000, 0.2, 2);
    PlasticityConfig rule;
    CHECK_THROWS_AS(calibrate_threshold(raster, NeuronConfig{}, rule, SimClock{}, 0.0), InvalidInput);
    CHECK_THROWS_AS(calibrate_threshold(raster.slice(0, 500), NeuronConfig{}, rule, SimClock{}, 1.0),
                    InvalidInput);
    try {
        calibrate_threshold(SpikeRaster(5, 2000), NeuronConfig{}, rule, SimClock{}, 1.0);
        FAIL("expected calibration failure");
    } catch (const CalibrationError& e) {
        CHECK(e.max_rate() == 0.0);
        CHECK(e.min_rate() == 0.0);
    }
}

TEST_CASE("fstdp separates the correlated group on the two-group task") {
    const auto raster = generate_correlated_binary(two_group_spec(100000, 1));
    PlasticityConfig rule;
    const SimClock clock{0.1, 0};
    NeuronConfig n;
    n.v_th = calibrate_threshold(raster.slice(0, 20000), n, rule, clock, 1.5);
    const auto res = run_simulation(raster, n, rule, clock, 1);
    double min_corr = 1.0, max_unc = 0.0;
    for (std::size_t i = 0; i < 10; ++i) min_corr = std::min(min_corr, res.final_weights[i]);
    for (std::size_t i = 10; i < 100; ++i) max_unc = std::max(max_unc, res.final_weights[i]);
    CHECK(min_corr > max_unc);
}
