#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fstdp/raster.hpp"

namespace fstdp {

enum class CovKind { uncentered, normalized };

std::string_view to_string(CovKind kind);

struct CovMatrix {
    std::size_t n = 0;
    std::size_t n_steps = 0;
    CovKind kind = CovKind::uncentered;
    std::vector<double> values;  // row-major n x n
    // Channels without events; their rows and columns are zero.
    std::vector<std::size_t> zero_rate_channels;

    double at(std::size_t i, std::size_t j) const { return values[i * n + j]; }
    bool has_zero_rate_channels() const { return !zero_rate_channels.empty(); }
};

// E[X_i X_j] with plug-in sample means.
CovMatrix uncentered_cov(const SpikeRaster& r);

// E[(X_i / max(m_i, eps)) (X_j / max(m_j, eps))]; eps defaults to 1/n_steps.
CovMatrix normalized_cov(const SpikeRaster& r, std::optional<double> epsilon_rate = std::nullopt);

// Each channel scored against the across-channel mean signal, raw or rate-normalized.
std::vector<double> cov_with_mean_input(const SpikeRaster& r, bool normalized);

struct SeparationReport {
    double gap = 0.0;  // min(correlated) - max(uncorrelated)
    double auc = 0.0;
    double mean_correlated = 0.0;
    double mean_uncorrelated = 0.0;
};

SeparationReport separation_metrics(std::span<const double> weights, const std::vector<bool>& labels);

// Mean of the off-diagonal entries whose endpoints satisfy the two label predicates.
double block_mean(const CovMatrix& m, const std::vector<bool>& labels, bool row_label, bool col_label);

}  // namespace fstdp
