#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fstdp/neuron.hpp"
#include "fstdp/plasticity.hpp"
#include "fstdp/raster.hpp"

namespace fstdp {

struct SimulationOptions {
    // Record weights every `trajectory_stride` steps (and after the last step); 0 disables.
    std::size_t trajectory_stride = 0;
    // Pilot mode: synapses keep their initial weights.
    bool freeze_weights = false;
};

struct WeightTrajectory {
    std::vector<std::size_t> steps;
    std::vector<std::vector<double>> weights;  // one row per recorded step

    friend bool operator==(const WeightTrajectory&, const WeightTrajectory&) = default;
};

struct SimResult {
    std::vector<std::uint8_t> output_spikes;
    std::vector<double> final_weights;
    WeightTrajectory weight_trajectory;
    double output_rate = 0.0;  // Hz
    std::uint64_t rng_seed = 0;

    std::size_t output_count() const;
    friend bool operator==(const SimResult&, const SimResult&) = default;
};

// Per step: (1) decay fatigue and traces, (2) read efficacies from pre-jump
// fatigue, (3) deliver spikes, jump fatigue, depress against the post trace,
// (4) integrate and test threshold, (5) potentiate on fire.
SimResult run_simulation(const SpikeRaster& raster, const NeuronConfig& neuron,
                         const PlasticityConfig& rule, const SimClock& clock, std::uint64_t seed,
                         const SimulationOptions& options = {});

// Bisection over v_th so that a frozen-weight pilot run on `sample` fires
// within ±20% of `target_rate` (Hz).
double calibrate_threshold(const SpikeRaster& sample, const NeuronConfig& neuron,
                           const PlasticityConfig& rule, const SimClock& clock,
                           double target_rate);

inline constexpr double kCalibrationTolerance = 0.2;
inline constexpr std::size_t kMinCalibrationSteps = 1000;

}  // namespace fstdp
