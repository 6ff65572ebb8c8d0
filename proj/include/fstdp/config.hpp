#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "fstdp/datagen.hpp"
#include "fstdp/neuron.hpp"
#include "fstdp/plasticity.hpp"

namespace fstdp {

struct SyntheticSource {
    std::size_t n_channels = 100;
    std::size_t n_steps = 100000;
    std::vector<double> rates_hz;  // one per channel
    std::vector<std::size_t> correlated_channels;
    double c = 0.1;

    friend bool operator==(const SyntheticSource&, const SyntheticSource&) = default;
};

struct CsvSource {
    std::string raster_path;
    std::optional<std::string> labels_path;

    friend bool operator==(const CsvSource&, const CsvSource&) = default;
};

struct WeatherlikeSource {
    std::size_t n_scarce_correlated = 58;
    std::size_t n_frequent_uncorrelated = 147;
    double p_scarce = 0.03;
    double p_frequent = 0.12;
    double c = 0.3;
    std::size_t n_steps = 4344;

    friend bool operator==(const WeatherlikeSource&, const WeatherlikeSource&) = default;
};

using DatasetSource = std::variant<SyntheticSource, CsvSource, WeatherlikeSource>;

struct CalibrationSpec {
    double target_rate_hz = 1.5;
    std::size_t sample_steps = 20000;
    // Calibrate with fatigue active even when the run itself is plain STDP,
    // so both modes share one threshold.
    bool with_fatigue = true;

    friend bool operator==(const CalibrationSpec&, const CalibrationSpec&) = default;
};

struct NeuronSection {
    std::optional<double> v_th;  // absent = calibrate
    double tau_m = 2.0;
    double v_reset = 0.0;
    CalibrationSpec calibration;

    friend bool operator==(const NeuronSection&, const NeuronSection&) = default;
};

struct PlasticitySection {
    PlasticityMode mode = PlasticityMode::fstdp;
    KernelParams kernel;
    FatigueParams fatigue;  // jump ignored in STDP mode
    double initial_weight = 0.5;

    // Effective rule for `mode`.
    PlasticityConfig rule() const;
    // Rule with fatigue active regardless of mode.
    PlasticityConfig fatigue_rule() const;
    friend bool operator==(const PlasticitySection&, const PlasticitySection&) = default;
};

struct ReportOptions {
    std::size_t trajectory_stride = 0;  // 0 = no trajectory file
    bool emit_uncentered = true;
    bool emit_normalized = true;
    bool emit_scores = true;

    friend bool operator==(const ReportOptions&, const ReportOptions&) = default;
};

struct ExperimentConfig {
    std::string name = "experiment";
    DatasetSource dataset = SyntheticSource{};
    NeuronSection neuron;
    PlasticitySection plasticity;
    SimClock clock;
    std::uint64_t seed = 1;
    std::string output_dir = "out";
    ReportOptions report;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

// Throws ValidationError naming the offending field path.
ExperimentConfig parse_config(const nlohmann::ordered_json& j);
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);
nlohmann::ordered_json emit_config(const ExperimentConfig& cfg);

void validate(const ExperimentConfig& cfg);

// Synthetic source as a generator spec under `clock` and `seed`.
ProcessSpec process_spec(const SyntheticSource& src, double dt, std::uint64_t seed);
WeatherlikeSpec weatherlike_spec(const WeatherlikeSource& src, double dt, std::uint64_t seed);

}  // namespace fstdp
