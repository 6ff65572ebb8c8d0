#include "fstdp/analytics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>

#include "fstdp/error.hpp"

namespace fstdp {

std::string_view to_string(CovKind kind) {
    return kind == CovKind::uncentered ? "uncentered" : "normalized";
}

namespace {

using Words = std::vector<std::uint64_t>;

std::vector<Words> pack(const SpikeRaster& r) {
    const std::size_t words = (r.n_steps() + 63) / 64;
    std::vector<Words> packed(r.n_channels(), Words(words, 0));
    for (std::size_t c = 0; c < r.n_channels(); ++c) {
        auto row = r.channel(c);
        for (std::size_t t = 0; t < row.size(); ++t)
            if (row[t]) packed[c][t / 64] |= std::uint64_t{1} << (t % 64);
    }
    return packed;
}

// Coincidence counts for every channel pair.
std::vector<std::size_t> coincidences(const SpikeRaster& r) {
    const auto packed = pack(r);
    const std::size_t n = r.n_channels();
    std::vector<std::size_t> counts(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            std::size_t total = 0;
            for (std::size_t w = 0; w < packed[i].size(); ++w)
                total += static_cast<std::size_t>(std::popcount(packed[i][w] & packed[j][w]));
            counts[i * n + j] = counts[j * n + i] = total;
        }
    }
    return counts;
}

std::vector<std::size_t> silent_channels(const SpikeRaster& r) {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < r.n_channels(); ++c)
        if (r.count(c) == 0) out.push_back(c);
    return out;
}

}  // namespace

CovMatrix uncentered_cov(const SpikeRaster& r) {
    const auto counts = coincidences(r);
    CovMatrix m{r.n_channels(), r.n_steps(), CovKind::uncentered, {}, silent_channels(r)};
    m.values.resize(counts.size());
    const double steps = static_cast<double>(r.n_steps());
    std::transform(counts.begin(), counts.end(), m.values.begin(),
                   [steps](std::size_t c) { return static_cast<double>(c) / steps; });
    return m;
}

CovMatrix normalized_cov(const SpikeRaster& r, std::optional<double> epsilon_rate) {
    const double steps = static_cast<double>(r.n_steps());
    const double eps = epsilon_rate.value_or(1.0 / steps);
    if (!(eps > 0.0)) throw InvalidInput("epsilon_rate must be positive");

    CovMatrix m = uncentered_cov(r);
    m.kind = CovKind::normalized;
    std::vector<double> scale(m.n);
    for (std::size_t i = 0; i < m.n; ++i) scale[i] = 1.0 / std::max(r.mean(i), eps);
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j) m.values[i * m.n + j] *= scale[i] * scale[j];
    return m;
}

std::vector<double> cov_with_mean_input(const SpikeRaster& r, bool normalized) {
    const std::size_t n = r.n_channels();
    if (n < 2) throw InvalidInput("mean-input covariance needs at least two channels");
    const std::size_t steps = r.n_steps();

    std::vector<double> mean_input(steps, 0.0);
    for (std::size_t c = 0; c < n; ++c) {
        auto row = r.channel(c);
        for (std::size_t t = 0; t < steps; ++t) mean_input[t] += row[t];
    }
    for (double& x : mean_input) x /= static_cast<double>(n);
    const double input_mean = std::accumulate(mean_input.begin(), mean_input.end(), 0.0) / static_cast<double>(steps);

    std::vector<double> scores(n, 0.0);
    for (std::size_t c = 0; c < n; ++c) {
        auto row = r.channel(c);
        double acc = 0.0;
        for (std::size_t t = 0; t < steps; ++t)
            if (row[t]) acc += mean_input[t];
        double score = acc / static_cast<double>(steps);
        if (normalized) {
            const double denom = r.mean(c) * input_mean;
            score = denom > 0.0 ? score / denom : 0.0;
        }
        scores[c] = score;
    }
    return scores;
}

SeparationReport separation_metrics(std::span<const double> weights, const std::vector<bool>& labels) {
    if (weights.size() != labels.size()) throw InvalidInput("weights and labels differ in length");
    std::vector<double> pos;
    std::vector<double> neg;
    for (std::size_t i = 0; i < weights.size(); ++i) (labels[i] ? pos : neg).push_back(weights[i]);
    if (pos.empty() || neg.empty()) throw InvalidInput("separation needs both label classes");

    SeparationReport rep;
    rep.gap = *std::min_element(pos.begin(), pos.end()) - *std::max_element(neg.begin(), neg.end());
    rep.mean_correlated = std::accumulate(pos.begin(), pos.end(), 0.0) / static_cast<double>(pos.size());
    rep.mean_uncorrelated = std::accumulate(neg.begin(), neg.end(), 0.0) / static_cast<double>(neg.size());

    // Mann-Whitney rank statistic with average ranks for ties.
    std::vector<std::pair<double, bool>> all;
    all.reserve(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) all.emplace_back(weights[i], labels[i]);
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    double rank_sum = 0.0;
    for (std::size_t i = 0; i < all.size();) {
        std::size_t j = i;
        while (j < all.size() && all[j].first == all[i].first) ++j;
        const double avg_rank = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t k = i; k < j; ++k)
            if (all[k].second) rank_sum += avg_rank;
        i = j;
    }
    const double np = static_cast<double>(pos.size());
    const double nn = static_cast<double>(neg.size());
    rep.auc = (rank_sum - np * (np + 1.0) / 2.0) / (np * nn);
    return rep;
}

double block_mean(const CovMatrix& m, const std::vector<bool>& labels, bool row_label, bool col_label) {
    if (labels.size() != m.n) throw DimensionError("labels do not match matrix size");
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < m.n; ++i) {
        if (labels[i] != row_label) continue;
        for (std::size_t j = 0; j < m.n; ++j) {
            if (i == j || labels[j] != col_label) continue;
            sum += m.at(i, j);
            ++count;
        }
    }
    return count ? sum / static_cast<double>(count) : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace fstdp
