#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fstdp/plasticity.hpp"

namespace fstdp {

// Inputs to the causal-probability analysis of a single neuron.
struct TheoryParams {
    std::vector<double> rates;    // Hz per channel
    double dt = 0.1;              // seconds per step
    std::vector<double> weights;  // assumed weight per channel
    double v_th = 1.0;
    // Coincident-EPSP boost for correlated channels; estimated when absent.
    std::optional<double> n_coinc;
    double correlation = 0.0;  // pairwise c within the correlated set
    FatigueParams fatigue;
    std::vector<std::size_t> correlated_set;
    std::size_t mc_steps = 200000;
    std::uint64_t seed = 1;

    std::size_t n_channels() const { return rates.size(); }
    bool is_correlated(std::size_t i) const;
    void validate() const;
    friend bool operator==(const TheoryParams&, const TheoryParams&) = default;
};

struct FatigueEstimate {
    double monte_carlo = 0.0;            // time-averaged pre-jump F
    double closed_form_unclamped = 0.0;  // d*jump*x/(1-d), x = rate*dt, d = exp(-1/tau_f)
    // Renewal value x*d/(1-(1-x)d), exact when every spike saturates F (jump >= 1, clamp).
    std::optional<double> exact;
};

FatigueEstimate expected_fatigue(double rate, double dt, const FatigueParams& f,
                                 std::size_t mc_steps = 200000, std::uint64_t seed = 1);

double q_i(const TheoryParams& params, std::size_t i);

// (|C|-1)·√c·w·(1-E[F]) summed over the other correlated channels, or n_coinc when set.
double coincident_boost(const TheoryParams& params, std::size_t i, PlasticityMode mode);

double p_i(const TheoryParams& params, std::size_t i, PlasticityMode mode);

// Minimum p_i reached when fatigue silences the channel's own efficacy: n_i / v_th.
double p_ic(const TheoryParams& params, std::size_t i, PlasticityMode mode);

double causal_P(const TheoryParams& params, std::size_t i, PlasticityMode mode);

struct LearningCondition {
    double ratio = 0.0;  // causal_P(uncorrelated) / causal_P(correlated)
    bool learns = false;
    double causal_correlated = 0.0;
    double causal_uncorrelated = 0.0;
};

// Uses the worst case over each group: max uncorrelated over min correlated.
LearningCondition learning_condition(const TheoryParams& params, PlasticityMode mode);

struct SweepRow {
    double rate = 0.0;
    PlasticityMode mode = PlasticityMode::stdp;
    double q = 0.0;
    double p = 0.0;
    double causal = 0.0;
};

// Sweeps the rate of `channel` over `points` evenly spaced values in
// (0, max_rate], holding the other channels fixed. Rows for STDP then FSTDP.
std::vector<SweepRow> rate_sweep(const TheoryParams& params, std::size_t channel, std::size_t points,
                                 std::optional<double> max_rate = std::nullopt);

enum class CurveShape { constant, increasing, decreasing, unimodal, other };

std::string_view to_string(CurveShape shape);

// Shape from the signs of successive differences; |diff| <= tol counts as flat.
CurveShape classify_curve(std::span<const double> values, double tol = 1e-12);

}  // namespace fstdp
