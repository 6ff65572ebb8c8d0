#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <optional>
#include <ostream>
#include <vector>

#include <json.hpp>

#include "fstdp/config.hpp"
#include "fstdp/raster.hpp"
#include "fstdp/theory.hpp"

namespace fstdp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitRuntime = 3;

int exit_code_for(const std::exception& e);

struct GlobalOptions {
    std::optional<std::filesystem::path> config;
    std::optional<std::filesystem::path> out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<PlasticityMode> mode;
    bool quiet = false;
};

// Config file with the command-line overrides applied.
ExperimentConfig resolve_config(const GlobalOptions& g);
std::filesystem::path resolve_out_dir(const GlobalOptions& g, const ExperimentConfig& cfg);

struct Dataset {
    SpikeRaster raster;
    std::optional<std::vector<bool>> labels;
    std::vector<double> rates_hz;     // nominal when generated, empirical when loaded
    std::optional<double> correlation;  // within the labelled group
};

// Relative CSV paths resolve against `base_dir`.
Dataset load_dataset(const ExperimentConfig& cfg, const std::filesystem::path& base_dir = {});

// Runs one experiment, writes its artifacts into `out_dir` and returns the
// report that was written to `out_dir/report.json`.
nlohmann::ordered_json run_experiment(const ExperimentConfig& cfg, const std::filesystem::path& out_dir,
                                      const std::filesystem::path& base_dir = {});

// Same report with the timing field removed.
nlohmann::ordered_json report_body(nlohmann::ordered_json report);

struct TheoryJob {
    TheoryParams params;
    std::size_t sweep_channel = 0;
    std::size_t sweep_points = 50;
    std::optional<double> sweep_max_rate;
};

TheoryJob parse_theory_job(const nlohmann::ordered_json& j);
nlohmann::ordered_json theory_verdicts(const TheoryParams& params);

struct RunFanout {
    std::optional<std::size_t> runs;
    std::vector<std::uint64_t> seeds;
};

struct AnalyzeOptions {
    std::filesystem::path raster;
    std::optional<std::filesystem::path> labels;
    bool normcov = false;
    bool uncov = false;
    bool scores = false;  // none selected = all
};

struct IngestOptions {
    std::filesystem::path csv;
    double threshold = 0.0;
    std::optional<std::size_t> clusters;
};

int cmd_generate(const GlobalOptions& g, std::ostream& log);
int cmd_run(const GlobalOptions& g, const RunFanout& fan, std::ostream& log);
int cmd_analyze(const GlobalOptions& g, const AnalyzeOptions& a, std::ostream& log);
int cmd_theory(const GlobalOptions& g, std::ostream& log);
int cmd_ingest(const GlobalOptions& g, const IngestOptions& opt, std::ostream& log);

}  // namespace fstdp
