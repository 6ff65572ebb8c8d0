#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fstdp/raster.hpp"

namespace fstdp {

struct SynapseState {
    double w = 0.5;          // long-term weight, [0, 1]
    double f = 0.0;          // short-term fatigue, [0, 1] when clamped
    double pre_trace = 0.0;  // decays with tau_plus

    friend bool operator==(const SynapseState&, const SynapseState&) = default;
};

struct FatigueParams {
    double jump = 1.0;   // increment per presynaptic spike
    double tau_f = 5.0;  // decay constant, steps
    bool clamp = true;   // cap f at 1

    void validate() const;
    friend bool operator==(const FatigueParams&, const FatigueParams&) = default;
};

// Double-exponential STDP kernel over Δt = t_pre − t_post (steps), plus a
// fixed depression of every synapse on each postsynaptic spike. The kernel
// integral must be negative; the constructor rejects anything else.
class KernelParams {
public:
    KernelParams() : KernelParams(0.01, 0.0165, 2.0, 2.0, 0.001) {}
    KernelParams(double a_plus, double a_minus, double tau_plus, double tau_minus,
                 double post_depression = 0.0);

    double a_plus() const { return a_plus_; }
    double a_minus() const { return a_minus_; }
    double tau_plus() const { return tau_plus_; }
    double tau_minus() const { return tau_minus_; }
    double post_depression() const { return post_depression_; }

    friend bool operator==(const KernelParams&, const KernelParams&) = default;

private:
    double a_plus_;
    double a_minus_;
    double tau_plus_;
    double tau_minus_;
    double post_depression_;
};

enum class PlasticityMode { stdp, fstdp };

std::string_view to_string(PlasticityMode mode);
PlasticityMode parse_mode(std::string_view text);

struct PlasticityConfig {
    KernelParams kernel;
    FatigueParams fatigue;
    PlasticityMode mode = PlasticityMode::fstdp;
    double initial_weight = 0.5;
    // Per-channel initial weights; overrides initial_weight when present.
    std::optional<std::vector<double>> initial_weights;

    // STDP requires fatigue.jump == 0, FSTDP requires jump > 0.
    void validate() const;
    friend bool operator==(const PlasticityConfig&, const PlasticityConfig&) = default;
};

// Same config with the fatigue jump forced to zero.
PlasticityConfig as_stdp(PlasticityConfig rule);

double efficacy(const SynapseState& s);
SynapseState fatigue_decay(const SynapseState& s, const FatigueParams& p, std::size_t steps);
SynapseState fatigue_on_pre_spike(const SynapseState& s, const FatigueParams& p);

// Weight change for one pre/post pair. Δt <= 0 (pre not after post) potentiates.
double stdp_kernel(double delta_t, const KernelParams& k);

// Continuous kernel integral a_plus·tau_plus − a_minus·tau_minus.
double kernel_asymmetry(const KernelParams& k);
double kernel_asymmetry(double a_plus, double a_minus, double tau_plus, double tau_minus);

// The same integral as the engine sees it: summed over integer Δt, with
// Δt = 0 on the potentiation side.
double discrete_kernel_sum(const KernelParams& k);

// Unclamped weight changes contributed by a single event.
double depression_delta(double post_trace, const KernelParams& k);
double potentiation_delta(double pre_trace, const KernelParams& k);

SynapseState on_pre_spike_update(const SynapseState& s, double post_trace, const KernelParams& k);

// Potentiates every synapse against its pre trace and applies the fixed
// post-spike depression. Returns the incremented post trace.
double on_post_spike_update(std::span<SynapseState> synapses, double post_trace,
                            const KernelParams& k);

double clamp01(double x);

struct PairwiseUpdate {
    double potentiation = 0.0;
    double depression = 0.0;  // stored as a non-negative magnitude
    double net() const { return potentiation - depression; }
};

// Cumulative pair-based updates per channel produced by the trace machinery
// for a given presynaptic raster and postsynaptic spike train, without
// clamping and without the post-spike depression term.
std::vector<PairwiseUpdate> accumulate_trace_updates(const SpikeRaster& pre,
                                                     std::span<const std::uint8_t> post,
                                                     const KernelParams& k);

}  // namespace fstdp
