#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fstdp {

// Binary event matrix, channel-major: events for one channel are contiguous.
class SpikeRaster {
public:
    SpikeRaster(std::size_t n_channels, std::size_t n_steps);

    std::size_t n_channels() const { return n_channels_; }
    std::size_t n_steps() const { return n_steps_; }

    bool at(std::size_t channel, std::size_t step) const {
        return events_[channel * n_steps_ + step] != 0;
    }
    void set(std::size_t channel, std::size_t step, bool value) {
        events_[channel * n_steps_ + step] = value ? 1 : 0;
    }

    std::span<const std::uint8_t> channel(std::size_t channel) const;
    std::span<std::uint8_t> channel(std::size_t channel);

    std::size_t count(std::size_t channel) const;
    std::size_t total_events() const;
    // Per-step event probability of one channel.
    double mean(std::size_t channel) const;

    // Copy of steps [first, first + length).
    SpikeRaster slice(std::size_t first, std::size_t length) const;

    friend bool operator==(const SpikeRaster&, const SpikeRaster&) = default;

private:
    std::size_t n_channels_;
    std::size_t n_steps_;
    std::vector<std::uint8_t> events_;
};

}  // namespace fstdp
