#include "fstdp/plasticity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fstdp/error.hpp"

namespace fstdp {

void FatigueParams::validate() const {
    if (!(jump >= 0.0) || !std::isfinite(jump)) throw InvalidInput("fatigue jump must be >= 0");
    if (!(tau_f > 0.0)) throw InvalidInput("fatigue tau_f must be positive");
}

KernelParams::KernelParams(double a_plus, double a_minus, double tau_plus, double tau_minus,
                           double post_depression)
    : a_plus_(a_plus),
      a_minus_(a_minus),
      tau_plus_(tau_plus),
      tau_minus_(tau_minus),
      post_depression_(post_depression) {
    if (!(a_plus > 0.0) || !(a_minus > 0.0)) throw InvalidInput("kernel amplitudes must be positive");
    if (!(tau_plus > 0.0) || !(tau_minus > 0.0)) throw InvalidInput("kernel windows must be positive");
    if (!(post_depression >= 0.0)) throw InvalidInput("post_depression must be >= 0");
    if (!(kernel_asymmetry(a_plus, a_minus, tau_plus, tau_minus) < 0.0))
        throw InvalidInput("kernel must be depression-dominated (a_plus*tau_plus < a_minus*tau_minus)");
}

std::string_view to_string(PlasticityMode mode) {
    return mode == PlasticityMode::stdp ? "stdp" : "fstdp";
}

PlasticityMode parse_mode(std::string_view text) {
    if (text == "stdp" || text == "STDP") return PlasticityMode::stdp;
    if (text == "fstdp" || text == "FSTDP") return PlasticityMode::fstdp;
    throw InvalidInput("unknown plasticity mode '" + std::string(text) + "'");
}

void PlasticityConfig::validate() const {
    fatigue.validate();
    if (mode == PlasticityMode::stdp && fatigue.jump != 0.0)
        throw InvalidInput("STDP mode requires fatigue jump 0");
    if (mode == PlasticityMode::fstdp && !(fatigue.jump > 0.0))
        throw InvalidInput("FSTDP mode requires fatigue jump > 0");
    auto check_weight = [](double w) {
        if (!(w >= 0.0 && w <= 1.0)) throw InvalidInput("initial weights must lie in [0,1]");
    };
    check_weight(initial_weight);
    if (initial_weights)
        std::for_each(initial_weights->begin(), initial_weights->end(), check_weight);
}

PlasticityConfig as_stdp(PlasticityConfig rule) {
    rule.mode = PlasticityMode::stdp;
    rule.fatigue.jump = 0.0;
    return rule;
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

double efficacy(const SynapseState& s) { return s.w * (1.0 - s.f); }

SynapseState fatigue_decay(const SynapseState& s, const FatigueParams& p, std::size_t steps) {
    SynapseState out = s;
    out.f = s.f * std::exp(-static_cast<double>(steps) / p.tau_f);
    return out;
}

SynapseState fatigue_on_pre_spike(const SynapseState& s, const FatigueParams& p) {
    SynapseState out = s;
    out.f = p.clamp ? std::min(1.0, s.f + p.jump) : s.f + p.jump;
    return out;
}

double stdp_kernel(double delta_t, const KernelParams& k) {
    if (delta_t <= 0.0) return k.a_plus() * std::exp(delta_t / k.tau_plus());
    return -k.a_minus() * std::exp(-delta_t / k.tau_minus());
}

double kernel_asymmetry(double a_plus, double a_minus, double tau_plus, double tau_minus) {
    return a_plus * tau_plus - a_minus * tau_minus;
}

double kernel_asymmetry(const KernelParams& k) {
    return kernel_asymmetry(k.a_plus(), k.a_minus(), k.tau_plus(), k.tau_minus());
}

double discrete_kernel_sum(const KernelParams& k) {
    const double dp = std::exp(-1.0 / k.tau_plus());
    const double dm = std::exp(-1.0 / k.tau_minus());
    return k.a_plus() / (1.0 - dp) - k.a_minus() * dm / (1.0 - dm);
}

double depression_delta(double post_trace, const KernelParams& k) { return -k.a_minus() * post_trace; }

double potentiation_delta(double pre_trace, const KernelParams& k) { return k.a_plus() * pre_trace; }

SynapseState on_pre_spike_update(const SynapseState& s, double post_trace, const KernelParams& k) {
    SynapseState out = s;
    out.w = clamp01(s.w + depression_delta(post_trace, k));
    out.pre_trace = s.pre_trace + 1.0;
    return out;
}

double on_post_spike_update(std::span<SynapseState> synapses, double post_trace,
                            const KernelParams& k) {
    const double fixed = k.post_depression();
    for (auto& s : synapses) s.w = clamp01(s.w + potentiation_delta(s.pre_trace, k) - fixed);
    return post_trace + 1.0;
}

std::vector<PairwiseUpdate> accumulate_trace_updates(const SpikeRaster& pre,
                                                     std::span<const std::uint8_t> post,
                                                     const KernelParams& k) {
    if (post.size() != pre.n_steps()) throw DimensionError("post train length differs from raster");
    const std::size_t n = pre.n_channels();
    const double dp = std::exp(-1.0 / k.tau_plus());
    const double dm = std::exp(-1.0 / k.tau_minus());

    std::vector<double> pre_trace(n, 0.0);
    double post_trace = 0.0;
    std::vector<PairwiseUpdate> out(n);
    for (std::size_t t = 0; t < pre.n_steps(); ++t) {
        post_trace *= dm;
        for (std::size_t i = 0; i < n; ++i) {
            pre_trace[i] *= dp;
            if (pre.at(i, t)) {
                out[i].depression -= depression_delta(post_trace, k);
                pre_trace[i] += 1.0;
            }
        }
        if (post[t]) {
            for (std::size_t i = 0; i < n; ++i) out[i].potentiation += potentiation_delta(pre_trace[i], k);
            post_trace += 1.0;
        }
    }
    return out;
}

}  // namespace fstdp
