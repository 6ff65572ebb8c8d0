#include <doctest.h>

#include <cmath>
#include <numeric>

#include "derived_values.hpp"
#include "fstdp/error.hpp"
#include "fstdp/theory.hpp"

using namespace fstdp;

namespace {

TheoryParams two_group(double v_th = 18.0105) {
    TheoryParams p;
    p.rates.assign(100, 5.0);
    for (std::size_t i = 0; i < 10; ++i) {
        p.rates[i] = 1.0;
        p.correlated_set.push_back(i);
    }
    p.weights.assign(100, 0.5);
    p.dt = 0.1;
    p.v_th = v_th;
    p.correlation = 0.1;
    p.mc_steps = 200000;
    return p;
}

TheoryParams simple(std::vector<double> rates, double w, double n, double v_th) {
    TheoryParams p;
    p.rates = std::move(rates);
    p.weights.assign(p.rates.size(), w);
    p.v_th = v_th;
    p.n_coinc = n;
    p.correlated_set = {0};
    return p;
}

}  // namespace

TEST_CASE("q_i") {
    auto p = simple({1.0, 3.0}, 0.5, 0.0, 1.0);
    CHECK(q_i(p, 0) == 0.25);
    CHECK(q_i(two_group(), 0) == doctest::Approx(oracle::kQSlowChannel).epsilon(1e-14));
    for (auto params : {two_group(), simple({0.3, 2.0, 7.7, 1e-3}, 0.5, 0.0, 1.0)}) {
        double sum = 0.0;
        for (std::size_t i = 0; i < params.n_channels(); ++i) sum += q_i(params, i);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("expected fatigue") {
    const FatigueParams f{1.0, 5.0, true};
    CHECK(expected_fatigue(0.0, 0.1, f).monte_carlo == 0.0);
    const auto full = expected_fatigue(10.0, 0.1, f);
    CHECK(full.monte_carlo == doctest::Approx(oracle::kFatigueSaturated).epsilon(1e-12));
    REQUIRE(full.exact);
    CHECK(*full.exact == doctest::Approx(oracle::kFatigueSaturated).epsilon(1e-12));

    const auto five = expected_fatigue(5.0, 0.1, f, 200000, 3);
    CHECK(std::abs(five.monte_carlo - oracle::kFatigue5HzBrute) <= 0.01);
    CHECK(*five.exact == doctest::Approx(oracle::kFatigue5HzExact).epsilon(1e-12));
    CHECK(std::abs(expected_fatigue(1.0, 0.1, f).monte_carlo - oracle::kFatigue1HzExact) <= 0.01);

    // Low rate: the unclamped closed form is close to the simulated value.
    const auto low = expected_fatigue(0.1, 0.1, FatigueParams{0.2, 5.0, true}, 400000, 2);
    CHECK(std::abs(low.monte_carlo - low.closed_form_unclamped) <= 0.002);
    CHECK_FALSE(low.exact);

    CHECK_THROWS_AS(expected_fatigue(20.0, 0.1, f), InvalidInput);
}

TEST_CASE("p_i") {
    CHECK(p_i(simple({1.0, 1.0}, 0.5, 0.5, 1.0), 0, PlasticityMode::stdp) == 1.0);
    for (double r : {0.5, 1.0, 5.0, 9.0}) {
        auto p = simple({r, 1.0}, 0.5, 0.0, 1.0);
        CHECK(p_i(p, 0, PlasticityMode::stdp) == 0.5);
    }
}

TEST_CASE("p_i(FSTDP) is at most p_i(STDP), equal at rate 0") {
    auto p = two_group();
    p.mc_steps = 50000;
    for (double r : {0.0, 0.5, 2.0, 5.0, 10.0}) {
        p.rates[50] = r;
        const double s = p_i(p, 50, PlasticityMode::stdp);
        const double f = p_i(p, 50, PlasticityMode::fstdp);
        CHECK(f <= s);
        if (r == 0.0) CHECK(f == s);
    }
}

TEST_CASE("p_i(FSTDP) approaches p_ic as rate*dt -> 1") {
    auto p = two_group();
    p.rates[0] = 10.0;
    const double pic = p_ic(p, 0, PlasticityMode::fstdp);
    CHECK(std::abs(p_i(p, 0, PlasticityMode::fstdp) - pic) <= 0.02);
    CHECK(pic > 0.0);
}

TEST_CASE("causal_P") {
    auto p = simple({0.0, 1.0}, 0.5, 0.1, 1.0);
    CHECK(causal_P(p, 0, PlasticityMode::stdp) == 0.0);
    CHECK(causal_P(p, 0, PlasticityMode::fstdp) == 0.0);
    auto q = simple({2.0, 1.0}, 0.5, 0.1, 1.0);
    CHECK(causal_P(q, 0, PlasticityMode::stdp) == doctest::Approx(q_i(q, 0) * p_i(q, 0, PlasticityMode::stdp)));
}

TEST_CASE("rate sweep shapes") {
    auto fig = simple({0.25, 0.25, 0.25}, 0.5, 0.1, 1.0);
    fig.correlated_set = {0, 1};
    const auto rows = rate_sweep(fig, 0, 50);
    REQUIRE(rows.size() == 100);
    std::vector<double> stdp, fstdp, p_stdp;
    for (const auto& r : rows) {
        (r.mode == PlasticityMode::stdp ? stdp : fstdp).push_back(r.causal);
        if (r.mode == PlasticityMode::stdp) p_stdp.push_back(r.p);
    }
    CHECK(classify_curve(stdp) == CurveShape::increasing);
    CHECK(classify_curve(fstdp) == CurveShape::unimodal);
    CHECK(classify_curve(p_stdp) == CurveShape::constant);

    const auto big = rate_sweep(two_group(), 0, 50);
    std::vector<double> big_stdp;
    for (const auto& r : big)
        if (r.mode == PlasticityMode::stdp) big_stdp.push_back(r.causal);
    CHECK(classify_curve(big_stdp) == CurveShape::increasing);
}

TEST_CASE("classify_curve") {
    CHECK(classify_curve(std::vector<double>{1, 1, 1}) == CurveShape::constant);
    CHECK(classify_curve(std::vector<double>{1, 2, 2, 3}) == CurveShape::increasing);
    CHECK(classify_curve(std::vector<double>{3, 2, 1}) == CurveShape::decreasing);
    CHECK(classify_curve(std::vector<double>{1, 3, 2}) == CurveShape::unimodal);
    CHECK(classify_curve(std::vector<double>{1, 3, 2, 4}) == CurveShape::other);
    CHECK(classify_curve(std::vector<double>{3, 1, 2}) == CurveShape::other);
}

TEST_CASE("learning condition") {
    auto eq = simple({1.0, 1.0, 1.0}, 0.5, 0.2, 1.0);
    eq.correlated_set = {0, 1};
    CHECK(learning_condition(eq, PlasticityMode::stdp).learns);
    CHECK(learning_condition(eq, PlasticityMode::fstdp).learns);

    eq.n_coinc = 0.0;
    const auto sym = learning_condition(eq, PlasticityMode::stdp);
    CHECK(sym.ratio == 1.0);
    CHECK_FALSE(sym.learns);

    const auto p = two_group();
    const auto s = learning_condition(p, PlasticityMode::stdp);
    const auto f = learning_condition(p, PlasticityMode::fstdp);
    CHECK(s.ratio == doctest::Approx(oracle::kRatioStdp).epsilon(1e-9));
    CHECK(std::abs(f.ratio - oracle::kRatioFstdp) <= 0.01);
    CHECK_FALSE(s.learns);
    CHECK(f.learns);
}

TEST_CASE("learning condition errors") {
    auto one = simple({1.0, 2.0}, 0.5, 0.1, 1.0);
    one.correlated_set = {};
    CHECK_THROWS_AS(learning_condition(one, PlasticityMode::stdp), DegenerateCondition);
    one.correlated_set = {0, 1};
    CHECK_THROWS_AS(learning_condition(one, PlasticityMode::stdp), DegenerateCondition);
    auto zero = simple({0.0, 2.0}, 0.5, 0.1, 1.0);
    CHECK_THROWS_AS(learning_condition(zero, PlasticityMode::stdp), DegenerateCondition);
}

TEST_CASE("coincident boost helper") {
    auto p = two_group();
    CHECK(coincident_boost(p, 0, PlasticityMode::stdp) == doctest::Approx(9 * std::sqrt(0.1) * 0.5));
    CHECK(coincident_boost(p, 50, PlasticityMode::stdp) == 0.0);
    const double f = coincident_boost(p, 0, PlasticityMode::fstdp);
    CHECK(f == doctest::Approx(9 * std::sqrt(0.1) * 0.5 * (1 - oracle::kFatigue1HzExact)).epsilon(0.02));
}
