#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fstdp/raster.hpp"

namespace fstdp {

// Family of binary Poisson processes. Channels in `correlated_set` share one
// rate and have pairwise correlation `c`; the rest are independent.
struct ProcessSpec {
    std::size_t n_channels = 0;
    double dt = 0.1;  // seconds per step
    std::size_t n_steps = 0;
    std::vector<double> rates;  // Hz, one per channel
    std::vector<std::size_t> correlated_set;
    double c = 0.0;
    std::uint64_t seed = 0;

    void validate() const;
    std::vector<bool> labels() const;
    friend bool operator==(const ProcessSpec&, const ProcessSpec&) = default;
};

// Single-mother mixing construction. A channel fires at a step when the
// mother fires and its copy coin (probability √c) succeeds, or when its own
// background coin succeeds.
struct MixingParams {
    double mother = 0.0;
    double copy = 0.0;
    double background = 0.0;
};

// Chosen so the marginal is exactly p and the pairwise correlation exactly c.
MixingParams mixing_parameters(double p, double c);

SpikeRaster generate_correlated_binary(const ProcessSpec& spec);

// Pearson coefficient between two channels.
double empirical_correlation(const SpikeRaster& r, std::size_t i, std::size_t j);

struct WeatherlikeSpec {
    std::size_t n_scarce_correlated = 58;
    std::size_t n_frequent_uncorrelated = 147;
    double p_scarce = 0.03;    // per-step (hourly) event probability
    double p_frequent = 0.12;
    double c = 0.3;
    std::size_t n_steps = 4344;
    std::uint64_t seed = 0;
    double dt = 3600.0;

    // Equivalent process spec; scarce channels come first.
    ProcessSpec process_spec() const;
    friend bool operator==(const WeatherlikeSpec&, const WeatherlikeSpec&) = default;
};

struct LabeledRaster {
    SpikeRaster raster;
    std::vector<bool> labels;  // true = correlated
};

LabeledRaster generate_weatherlike(const WeatherlikeSpec& spec);

}  // namespace fstdp
