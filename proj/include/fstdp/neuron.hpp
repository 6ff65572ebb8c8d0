#pragma once

#include <cstddef>
#include <optional>

namespace fstdp {

struct SimClock {
    double dt = 0.1;     // seconds per step
    std::size_t t = 0;   // current step

    void validate() const;
    friend bool operator==(const SimClock&, const SimClock&) = default;
};

// Discrete-time leaky integrate-and-fire parameters. tau_m is in steps.
struct NeuronConfig {
    double v_th = 1.0;
    double tau_m = 2.0;
    double v_reset = 0.0;

    void validate() const;
    friend bool operator==(const NeuronConfig&, const NeuronConfig&) = default;
};

struct NeuronState {
    double v = 0.0;
    std::optional<std::size_t> last_fire_step;

    friend bool operator==(const NeuronState&, const NeuronState&) = default;
};

struct StepOutcome {
    NeuronState state;
    bool fired = false;
};

// One step: leak, add the (instantaneous) drive, test threshold, reset on fire.
StepOutcome integrate_step(const NeuronState& state, const NeuronConfig& cfg, double drive,
                           std::size_t step = 0);

}  // namespace fstdp
