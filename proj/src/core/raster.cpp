#include "fstdp/raster.hpp"

#include <numeric>

#include "fstdp/error.hpp"

namespace fstdp {

SpikeRaster::SpikeRaster(std::size_t n_channels, std::size_t n_steps)
    : n_channels_(n_channels), n_steps_(n_steps) {
    if (n_channels == 0 || n_steps == 0)
        throw InvalidInput("raster dimensions must be positive");
    events_.assign(n_channels * n_steps, 0);
}

std::span<const std::uint8_t> SpikeRaster::channel(std::size_t channel) const {
    if (channel >= n_channels_) throw DimensionError("channel index out of range");
    return {events_.data() + channel * n_steps_, n_steps_};
}

std::span<std::uint8_t> SpikeRaster::channel(std::size_t channel) {
    if (channel >= n_channels_) throw DimensionError("channel index out of range");
    return {events_.data() + channel * n_steps_, n_steps_};
}

std::size_t SpikeRaster::count(std::size_t ch) const {
    auto row = channel(ch);
    return std::accumulate(row.begin(), row.end(), std::size_t{0});
}

std::size_t SpikeRaster::total_events() const {
    return std::accumulate(events_.begin(), events_.end(), std::size_t{0});
}

double SpikeRaster::mean(std::size_t ch) const {
    return static_cast<double>(count(ch)) / static_cast<double>(n_steps_);
}

SpikeRaster SpikeRaster::slice(std::size_t first, std::size_t length) const {
    if (first + length > n_steps_) throw DimensionError("slice exceeds raster length");
    SpikeRaster out(n_channels_, length);
    for (std::size_t c = 0; c < n_channels_; ++c) {
        auto src = channel(c).subspan(first, length);
        std::copy(src.begin(), src.end(), out.channel(c).begin());
    }
    return out;
}

}  // namespace fstdp
