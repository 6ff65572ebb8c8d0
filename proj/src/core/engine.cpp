#include "fstdp/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "fstdp/error.hpp"

namespace fstdp {

std::size_t SimResult::output_count() const {
    return std::accumulate(output_spikes.begin(), output_spikes.end(), std::size_t{0});
}

namespace {

std::vector<SynapseState> initial_synapses(const PlasticityConfig& rule, std::size_t n) {
    std::vector<SynapseState> syn(n);
    if (rule.initial_weights) {
        if (rule.initial_weights->size() != n)
            throw DimensionError("rule has " + std::to_string(rule.initial_weights->size()) +
                                 " initial weights but raster has " + std::to_string(n) + " channels");
        for (std::size_t i = 0; i < n; ++i) syn[i].w = (*rule.initial_weights)[i];
    } else {
        for (auto& s : syn) s.w = rule.initial_weight;
    }
    return syn;
}

void record(WeightTrajectory& traj, std::size_t step, const std::vector<SynapseState>& syn) {
    traj.steps.push_back(step);
    auto& row = traj.weights.emplace_back(syn.size());
    std::transform(syn.begin(), syn.end(), row.begin(), [](const SynapseState& s) { return s.w; });
}

}  // namespace

SimResult run_simulation(const SpikeRaster& raster, const NeuronConfig& neuron,
                         const PlasticityConfig& rule, const SimClock& clock, std::uint64_t seed,
                         const SimulationOptions& options) {
    neuron.validate();
    rule.validate();
    clock.validate();

    const std::size_t n = raster.n_channels();
    const std::size_t steps = raster.n_steps();
    std::vector<SynapseState> syn = initial_synapses(rule, n);

    const KernelParams& k = rule.kernel;
    // Same expressions as fatigue_decay(s, p, 1) and the trace decays, so
    // caching the factors does not change results.
    const double fatigue_factor = std::exp(-1.0 / rule.fatigue.tau_f);
    const double pre_factor = std::exp(-1.0 / k.tau_plus());
    const double post_factor = std::exp(-1.0 / k.tau_minus());

    SimResult result;
    result.rng_seed = seed;
    result.output_spikes.assign(steps, 0);

    NeuronState state;
    double post_trace = 0.0;
    const std::size_t stride = options.trajectory_stride;

    for (std::size_t t = 0; t < steps; ++t) {
        post_trace *= post_factor;
        double drive = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            SynapseState& s = syn[i];
            s.f *= fatigue_factor;
            s.pre_trace *= pre_factor;
            if (!raster.at(i, t)) continue;
            drive += efficacy(s);
            s = fatigue_on_pre_spike(s, rule.fatigue);
            if (options.freeze_weights)
                s.pre_trace += 1.0;
            else
                s = on_pre_spike_update(s, post_trace, k);
        }

        const StepOutcome outcome = integrate_step(state, neuron, drive, t);
        state = outcome.state;
        if (outcome.fired) {
            result.output_spikes[t] = 1;
            if (options.freeze_weights)
                post_trace += 1.0;
            else
                post_trace = on_post_spike_update(syn, post_trace, k);
        }

        if (stride > 0 && (t % stride == 0 || t + 1 == steps)) record(result.weight_trajectory, t, syn);
    }

    result.final_weights.resize(n);
    std::transform(syn.begin(), syn.end(), result.final_weights.begin(),
                   [](const SynapseState& s) { return s.w; });
    result.output_rate =
        static_cast<double>(result.output_count()) / (static_cast<double>(steps) * clock.dt);
    return result;
}

double calibrate_threshold(const SpikeRaster& sample, const NeuronConfig& neuron,
                           const PlasticityConfig& rule, const SimClock& clock,
                           double target_rate) {
    if (!(target_rate > 0.0) || !std::isfinite(target_rate))
        throw InvalidInput("calibration target rate must be positive");
    if (sample.n_steps() < kMinCalibrationSteps)
        throw InvalidInput("calibration sample needs at least " + std::to_string(kMinCalibrationSteps) +
                           " steps");
    neuron.validate();
    rule.validate();
    clock.validate();

    SimulationOptions pilot;
    pilot.freeze_weights = true;
    auto rate_at = [&](double v_th) {
        NeuronConfig cfg = neuron;
        cfg.v_th = v_th;
        return run_simulation(sample, cfg, rule, clock, 0, pilot).output_rate;
    };

    double weight_sum = 0.0;
    if (rule.initial_weights)
        weight_sum = std::accumulate(rule.initial_weights->begin(), rule.initial_weights->end(), 0.0);
    else
        weight_sum = rule.initial_weight * static_cast<double>(sample.n_channels());
    // Upper bound on the reachable potential: every synapse fires every step at full efficacy.
    const double v_max = neuron.v_reset + weight_sum / (1.0 - std::exp(-1.0 / neuron.tau_m)) + 1.0;

    double lo = neuron.v_reset + 1e-9 * (v_max - neuron.v_reset);
    double hi = v_max;
    const double max_rate = rate_at(lo);
    const double min_rate = rate_at(hi);
    const double lower = (1.0 - kCalibrationTolerance) * target_rate;
    const double upper = (1.0 + kCalibrationTolerance) * target_rate;

    auto fail = [&](const std::string& why) {
        std::ostringstream msg;
        msg << "cannot reach " << target_rate << " Hz: " << why << " (achievable range [" << min_rate
            << ", " << max_rate << "] Hz)";
        return CalibrationError(msg.str(), min_rate, max_rate);
    };
    if (max_rate < lower) throw fail("drive too weak");
    if (max_rate <= upper) return lo;

    // Rate is non-increasing in v_th: keep rate(lo) > upper, rate(hi) < lower.
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double rate = rate_at(mid);
        if (rate >= lower && rate <= upper) return mid;
        (rate > upper ? lo : hi) = mid;
        if (hi - lo <= 1e-12 * std::max(1.0, std::abs(hi))) break;
    }
    throw fail("rate jumps over the tolerance band");
}

}  // namespace fstdp
