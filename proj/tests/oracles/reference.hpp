#pragma once

// Slow, straightforward re-implementations used as test oracles.

#include <cmath>
#include <cstdint>
#include <vector>

#include "fstdp/plasticity.hpp"
#include "fstdp/raster.hpp"

namespace oracle {

struct PairSums {
    double potentiation = 0.0;
    double depression = 0.0;  // magnitude
};

// Enumerates every (pre, post) spike pair of each channel and sums the kernel.
inline std::vector<PairSums> all_pairs(const fstdp::SpikeRaster& pre, const std::vector<std::uint8_t>& post,
                                       const fstdp::KernelParams& k) {
    std::vector<PairSums> out(pre.n_channels());
    for (std::size_t i = 0; i < pre.n_channels(); ++i)
        for (std::size_t tp = 0; tp < pre.n_steps(); ++tp) {
            if (!pre.at(i, tp)) continue;
            for (std::size_t tq = 0; tq < post.size(); ++tq) {
                if (!post[tq]) continue;
                const double dt = static_cast<double>(tp) - static_cast<double>(tq);
                const double v = fstdp::stdp_kernel(dt, k);
                if (dt <= 0) out[i].potentiation += v;
                else out[i].depression -= v;
            }
        }
    return out;
}

struct PlainRun {
    std::vector<std::uint8_t> spikes;
    std::vector<double> weights;
};

// Plain trace STDP with no fatigue state at all.
inline PlainRun plain_stdp(const fstdp::SpikeRaster& r, double v_th, double tau_m, double v_reset,
                           const fstdp::KernelParams& k, double w0) {
    const std::size_t n = r.n_channels();
    std::vector<double> w(n, w0), x(n, 0.0);
    double y = 0.0, v = 0.0;
    PlainRun out;
    out.spikes.assign(r.n_steps(), 0);
    for (std::size_t t = 0; t < r.n_steps(); ++t) {
        y *= std::exp(-1.0 / k.tau_minus());
        double drive = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] *= std::exp(-1.0 / k.tau_plus());
            if (!r.at(i, t)) continue;
            drive += w[i];
            w[i] = std::fmin(1.0, std::fmax(0.0, w[i] + -k.a_minus() * y));
            x[i] += 1.0;
        }
        v = v * std::exp(-1.0 / tau_m) + drive;
        if (v >= v_th) {
            v = v_reset;
            out.spikes[t] = 1;
            for (std::size_t i = 0; i < n; ++i)
                w[i] = std::fmin(1.0, std::fmax(0.0, w[i] + k.a_plus() * x[i] - k.post_depression()));
            y += 1.0;
        }
    }
    out.weights = w;
    return out;
}

}  // namespace oracle
