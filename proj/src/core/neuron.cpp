#include "fstdp/neuron.hpp"

#include <cmath>

#include "fstdp/error.hpp"

namespace fstdp {

void SimClock::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidInput("clock dt must be positive");
}

void NeuronConfig::validate() const {
    if (!std::isfinite(v_th) || !std::isfinite(v_reset)) throw InvalidInput("neuron potentials must be finite");
    if (!(v_th > v_reset)) throw InvalidInput("neuron v_th must exceed v_reset");
    if (!(tau_m > 0.0)) throw InvalidInput("neuron tau_m must be positive");
}

StepOutcome integrate_step(const NeuronState& state, const NeuronConfig& cfg, double drive,
                           std::size_t step) {
    if (!std::isfinite(drive)) throw InvalidInput("drive must be finite");
    if (drive < 0.0) throw InvalidInput("drive must be non-negative");
    if (!std::isfinite(state.v)) throw InvalidInput("membrane potential must be finite");

    StepOutcome out{state, false};
    out.state.v = state.v * std::exp(-1.0 / cfg.tau_m) + drive;
    if (out.state.v >= cfg.v_th) {
        out.fired = true;
        out.state.v = cfg.v_reset;
        out.state.last_fire_step = step;
    }
    return out;
}

}  // namespace fstdp
