#include "fstdp/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "fstdp/error.hpp"
#include "fstdp/random.hpp"

namespace fstdp {

bool TheoryParams::is_correlated(std::size_t i) const {
    return std::find(correlated_set.begin(), correlated_set.end(), i) != correlated_set.end();
}

void TheoryParams::validate() const {
    if (rates.empty()) throw InvalidInput("theory needs at least one channel");
    if (weights.size() != rates.size()) throw InvalidInput("one weight per channel required");
    if (!(dt > 0.0)) throw InvalidInput("dt must be positive");
    if (!(v_th > 0.0)) throw InvalidInput("v_th must be positive");
    if (n_coinc && !(*n_coinc >= 0.0)) throw InvalidInput("n_coinc must be >= 0");
    if (!(correlation >= 0.0 && correlation < 1.0)) throw InvalidInput("correlation must be in [0,1)");
    for (double r : rates)
        if (!(r >= 0.0) || r * dt > 1.0) throw InvalidInput("rates must satisfy 0 <= rate*dt <= 1");
    for (std::size_t c : correlated_set)
        if (c >= rates.size()) throw InvalidInput("correlated channel index out of range");
    fatigue.validate();
}

FatigueEstimate expected_fatigue(double rate, double dt, const FatigueParams& f,
                                 std::size_t mc_steps, std::uint64_t seed) {
    f.validate();
    const double x = rate * dt;
    if (!(x >= 0.0) || x > 1.0) throw InvalidInput("expected_fatigue needs 0 <= rate*dt <= 1");
    if (mc_steps == 0) throw InvalidInput("expected_fatigue needs mc_steps > 0");

    const double d = std::exp(-1.0 / f.tau_f);
    FatigueEstimate est;
    est.closed_form_unclamped = d * f.jump * x / (1.0 - d);
    if (f.jump >= 1.0 && f.clamp) est.exact = x * d / (1.0 - (1.0 - x) * d);
    if (x == 0.0 || f.jump == 0.0) {
        est.monte_carlo = 0.0;
        return est;
    }

    // Common random numbers: the same uniforms for every rate, so the
    // estimate is monotone in the rate.
    auto rng = make_stream(seed, 0);
    const std::size_t burn_in = static_cast<std::size_t>(std::ceil(20.0 * f.tau_f));
    double level = 0.0;
    double acc = 0.0;
    for (std::size_t t = 0; t < burn_in + mc_steps; ++t) {
        level *= d;
        if (t >= burn_in) acc += level;
        if (uniform01(rng) < x) level = f.clamp ? std::min(1.0, level + f.jump) : level + f.jump;
    }
    est.monte_carlo = acc / static_cast<double>(mc_steps);
    return est;
}

double q_i(const TheoryParams& params, std::size_t i) {
    if (i >= params.n_channels()) throw DimensionError("channel index out of range");
    const double total = std::accumulate(params.rates.begin(), params.rates.end(), 0.0);
    if (!(total > 0.0)) throw InvalidInput("sum of rates must be positive");
    return params.rates[i] / total;
}

namespace {

// Memoizes expected fatigue per distinct rate within one computation.
class FatigueTable {
public:
    explicit FatigueTable(const TheoryParams& p) : params_(p) {}

    double mean(double rate, PlasticityMode mode) {
        if (mode == PlasticityMode::stdp) return 0.0;
        auto it = cache_.find(rate);
        if (it != cache_.end()) return it->second;
        const double v =
            expected_fatigue(rate, params_.dt, params_.fatigue, params_.mc_steps, params_.seed).monte_carlo;
        cache_.emplace(rate, v);
        return v;
    }

private:
    const TheoryParams& params_;
    std::map<double, double> cache_;
};

double boost(const TheoryParams& params, std::size_t i, PlasticityMode mode, FatigueTable& table) {
    if (!params.is_correlated(i)) return 0.0;
    if (params.n_coinc) return *params.n_coinc;
    const double copy = std::sqrt(params.correlation);
    double n = 0.0;
    for (std::size_t j : params.correlated_set) {
        if (j == i) continue;
        n += copy * params.weights[j] * (1.0 - table.mean(params.rates[j], mode));
    }
    return n;
}

double p_with(const TheoryParams& params, std::size_t i, PlasticityMode mode, FatigueTable& table) {
    const double g = params.weights[i] * (1.0 - table.mean(params.rates[i], mode));
    return std::clamp((g + boost(params, i, mode, table)) / params.v_th, 0.0, 1.0);
}

double causal_with(const TheoryParams& params, std::size_t i, PlasticityMode mode, FatigueTable& table) {
    return q_i(params, i) * p_with(params, i, mode, table);
}

}  // namespace

double coincident_boost(const TheoryParams& params, std::size_t i, PlasticityMode mode) {
    params.validate();
    FatigueTable table(params);
    return boost(params, i, mode, table);
}

double p_i(const TheoryParams& params, std::size_t i, PlasticityMode mode) {
    params.validate();
    if (i >= params.n_channels()) throw DimensionError("channel index out of range");
    FatigueTable table(params);
    return p_with(params, i, mode, table);
}

double p_ic(const TheoryParams& params, std::size_t i, PlasticityMode mode) {
    return std::clamp(coincident_boost(params, i, mode) / params.v_th, 0.0, 1.0);
}

double causal_P(const TheoryParams& params, std::size_t i, PlasticityMode mode) {
    params.validate();
    if (i >= params.n_channels()) throw DimensionError("channel index out of range");
    FatigueTable table(params);
    return causal_with(params, i, mode, table);
}

LearningCondition learning_condition(const TheoryParams& params, PlasticityMode mode) {
    params.validate();
    const std::size_t n = params.n_channels();
    const std::size_t n_cor = static_cast<std::size_t>(
        std::count_if(params.correlated_set.begin(), params.correlated_set.end(),
                      [n](std::size_t c) { return c < n; }));
    if (n_cor == 0 || n_cor == n)
        throw DegenerateCondition("learning condition needs correlated and uncorrelated channels");

    FatigueTable table(params);
    LearningCondition out;
    out.causal_correlated = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double cp = causal_with(params, i, mode, table);
        if (params.is_correlated(i))
            out.causal_correlated = std::min(out.causal_correlated, cp);
        else
            out.causal_uncorrelated = std::max(out.causal_uncorrelated, cp);
    }
    if (!(out.causal_correlated > 0.0))
        throw DegenerateCondition("causal probability of the correlated group is zero");
    out.ratio = out.causal_uncorrelated / out.causal_correlated;
    out.learns = out.ratio < 1.0;
    return out;
}

std::vector<SweepRow> rate_sweep(const TheoryParams& params, std::size_t channel, std::size_t points,
                                 std::optional<double> max_rate) {
    params.validate();
    if (channel >= params.n_channels()) throw DimensionError("sweep channel out of range");
    if (points == 0) throw InvalidInput("sweep needs at least one point");
    const double top = max_rate.value_or(1.0 / params.dt);
    if (!(top > 0.0) || top * params.dt > 1.0) throw InvalidInput("sweep max rate must satisfy 0 < rate*dt <= 1");

    std::vector<SweepRow> rows;
    rows.reserve(2 * points);
    for (PlasticityMode mode : {PlasticityMode::stdp, PlasticityMode::fstdp}) {
        TheoryParams p = params;
        FatigueTable table(p);
        for (std::size_t k = 1; k <= points; ++k) {
            p.rates[channel] = top * static_cast<double>(k) / static_cast<double>(points);
            SweepRow row;
            row.rate = p.rates[channel];
            row.mode = mode;
            row.q = q_i(p, channel);
            row.p = p_with(p, channel, mode, table);
            row.causal = row.q * row.p;
            rows.push_back(row);
        }
    }
    return rows;
}

std::string_view to_string(CurveShape shape) {
    switch (shape) {
        case CurveShape::constant: return "constant";
        case CurveShape::increasing: return "increasing";
        case CurveShape::decreasing: return "decreasing";
        case CurveShape::unimodal: return "unimodal";
        case CurveShape::other: break;
    }
    return "other";
}

CurveShape classify_curve(std::span<const double> values, double tol) {
    int changes = 0;
    int last = 0;
    int first = 0;
    for (std::size_t k = 1; k < values.size(); ++k) {
        const double d = values[k] - values[k - 1];
        const int sign = d > tol ? 1 : (d < -tol ? -1 : 0);
        if (sign == 0) continue;
        if (first == 0) first = sign;
        if (last != 0 && sign != last) ++changes;
        last = sign;
    }
    if (first == 0) return CurveShape::constant;
    if (changes == 0) return first > 0 ? CurveShape::increasing : CurveShape::decreasing;
    if (changes == 1 && first > 0) return CurveShape::unimodal;
    return CurveShape::other;
}

}  // namespace fstdp
