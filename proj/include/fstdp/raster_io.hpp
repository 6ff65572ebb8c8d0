#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "fstdp/analytics.hpp"
#include "fstdp/raster.hpp"

namespace fstdp {

// Sparse raster CSV:
//   # <n_channels>,<n_steps>
//   channel,step,value
//   <one row per event>
void write_raster_csv(const std::filesystem::path& path, const SpikeRaster& raster);
SpikeRaster read_raster_csv(const std::filesystem::path& path);
SpikeRaster parse_raster_csv(const std::string& text);

// `channel,correlated` with 0/1 flags.
void write_labels_csv(const std::filesystem::path& path, const std::vector<bool>& labels);
std::vector<bool> read_labels_csv(const std::filesystem::path& path);

// `# kind=<kind>,n=<n>,n_steps=<steps>` then n rows of n values.
void write_matrix_csv(const std::filesystem::path& path, const CovMatrix& m);

std::string slurp(const std::filesystem::path& path);

}  // namespace fstdp
