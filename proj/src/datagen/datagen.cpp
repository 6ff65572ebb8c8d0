#include "fstdp/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "fstdp/error.hpp"
#include "fstdp/random.hpp"

namespace fstdp {

namespace {

constexpr std::uint64_t kMotherStream = 0;

std::uint64_t channel_stream(std::size_t channel) { return static_cast<std::uint64_t>(channel) + 1; }

}  // namespace

MixingParams mixing_parameters(double p, double c) {
    if (!(p > 0.0 && p < 1.0)) throw InvalidInput("per-step probability must be in (0,1) for mixing");
    if (!(c >= 0.0 && c < 1.0)) throw InvalidInput("correlation c must be in [0,1)");
    if (c == 0.0) return {0.0, 0.0, p};

    const double copy = std::sqrt(c);
    // (1-pb)(1-pm*copy) = 1-p and (1-pb)^2 pm(1-pm) = p(1-p) reduce to a
    // quadratic in pm; the smaller root keeps pb >= 0.
    const double a = (1.0 - p) + p * c;
    const double b = (1.0 - p) + 2.0 * p * copy;
    const double disc = b * b - 4.0 * a * p;
    if (disc < 0.0) throw InvalidInput("no mixing construction for this rate and correlation");
    const double mother = (b - std::sqrt(disc)) / (2.0 * a);
    const double background = 1.0 - (1.0 - p) / (1.0 - mother * copy);
    if (!(mother > 0.0 && mother <= 1.0) || !(background >= -1e-15 && background < 1.0))
        throw InvalidInput("mixing probabilities out of range for p=" + std::to_string(p) +
                           ", c=" + std::to_string(c));
    return {mother, copy, std::max(0.0, background)};
}

void ProcessSpec::validate() const {
    if (n_channels == 0 || n_steps == 0) throw InvalidInput("process spec needs channels and steps");
    if (!(dt > 0.0)) throw InvalidInput("dt must be positive");
    if (rates.size() != n_channels) throw InvalidInput("one rate per channel required");
    for (double r : rates) {
        if (!(r > 0.0) || !std::isfinite(r)) throw InvalidInput("rates must be positive");
        if (r * dt > 1.0) throw InvalidInput("rate*dt exceeds 1 (not a Bernoulli probability)");
    }
    if (!(c >= 0.0 && c < 1.0)) throw InvalidInput("correlation c must be in [0,1)");
    std::vector<bool> seen(n_channels, false);
    for (std::size_t ch : correlated_set) {
        if (ch >= n_channels) throw InvalidInput("correlated channel index out of range");
        if (seen[ch]) throw InvalidInput("duplicate correlated channel");
        seen[ch] = true;
        if (rates[ch] != rates[correlated_set.front()])
            throw InvalidInput("correlated channels must share one rate");
    }
    if (!correlated_set.empty() && c > 0.0) {
        const double p = rates[correlated_set.front()] * dt;
        if (p >= 1.0) throw InvalidInput("correlated rate*dt must be below 1");
        mixing_parameters(p, c);
    }
}

std::vector<bool> ProcessSpec::labels() const {
    std::vector<bool> out(n_channels, false);
    for (std::size_t ch : correlated_set) out[ch] = true;
    return out;
}

SpikeRaster generate_correlated_binary(const ProcessSpec& spec) {
    spec.validate();
    SpikeRaster raster(spec.n_channels, spec.n_steps);
    const std::vector<bool> correlated = spec.labels();

    MixingParams mix{0.0, 0.0, 0.0};
    std::vector<std::uint8_t> mother;
    if (!spec.correlated_set.empty()) {
        mix = mixing_parameters(spec.rates[spec.correlated_set.front()] * spec.dt, spec.c);
        mother.assign(spec.n_steps, 0);
        auto rng = make_stream(spec.seed, kMotherStream);
        for (auto& m : mother) m = uniform01(rng) < mix.mother ? 1 : 0;
    }

    for (std::size_t ch = 0; ch < spec.n_channels; ++ch) {
        auto rng = make_stream(spec.seed, channel_stream(ch));
        auto row = raster.channel(ch);
        if (correlated[ch]) {
            // Both coins are drawn every step so the stream layout is fixed.
            for (std::size_t t = 0; t < spec.n_steps; ++t) {
                const bool copied = uniform01(rng) < mix.copy;
                const bool background = uniform01(rng) < mix.background;
                row[t] = ((mother[t] && copied) || background) ? 1 : 0;
            }
        } else {
            const double p = spec.rates[ch] * spec.dt;
            for (auto& e : row) e = uniform01(rng) < p ? 1 : 0;
        }
    }
    return raster;
}

double empirical_correlation(const SpikeRaster& r, std::size_t i, std::size_t j) {
    if (i >= r.n_channels() || j >= r.n_channels()) throw DimensionError("channel index out of range");
    const auto a = r.channel(i);
    const auto b = r.channel(j);
    const double n = static_cast<double>(r.n_steps());
    const double ca = static_cast<double>(r.count(i));
    const double cb = static_cast<double>(r.count(j));
    std::size_t both = 0;
    for (std::size_t t = 0; t < a.size(); ++t) both += a[t] & b[t];

    // Binary data: var = m(1-m), cov = E[ab] - m_a m_b.
    const double ma = ca / n;
    const double mb = cb / n;
    const double va = ma * (1.0 - ma);
    const double vb = mb * (1.0 - mb);
    if (va <= 0.0 || vb <= 0.0)
        throw UndefinedCorrelation("channel with zero variance (" + std::to_string(va <= 0.0 ? i : j) + ")");
    const double cov = static_cast<double>(both) / n - ma * mb;
    return cov / std::sqrt(va * vb);
}

ProcessSpec WeatherlikeSpec::process_spec() const {
    if (!(p_scarce > 0.0 && p_scarce < 1.0) || !(p_frequent > 0.0 && p_frequent <= 1.0))
        throw InvalidInput("weather-like probabilities must be valid");
    if (!(p_scarce < p_frequent)) throw InvalidInput("p_scarce must be below p_frequent");
    ProcessSpec spec;
    spec.n_channels = n_scarce_correlated + n_frequent_uncorrelated;
    spec.dt = dt;
    spec.n_steps = n_steps;
    spec.rates.assign(spec.n_channels, p_frequent / dt);
    std::fill_n(spec.rates.begin(), n_scarce_correlated, p_scarce / dt);
    spec.correlated_set.resize(n_scarce_correlated);
    std::iota(spec.correlated_set.begin(), spec.correlated_set.end(), std::size_t{0});
    spec.c = c;
    spec.seed = seed;
    return spec;
}

LabeledRaster generate_weatherlike(const WeatherlikeSpec& spec) {
    const ProcessSpec ps = spec.process_spec();
    return {generate_correlated_binary(ps), ps.labels()};
}

}  // namespace fstdp
