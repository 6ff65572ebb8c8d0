#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fstdp/raster.hpp"

namespace fstdp {

// Dense station x hour table; hour h of the table is dataset hour first_hour + h.
struct StationTable {
    std::vector<std::string> ids;
    std::vector<std::optional<std::pair<double, double>>> coords;  // (lat, lon), pass-through
    std::int64_t first_hour = 0;
    std::size_t n_hours = 0;
    std::vector<double> values;  // row-major, station-major

    std::size_t n_stations() const { return ids.size(); }
    double at(std::size_t station, std::size_t hour) const { return values[station * n_hours + hour]; }
    void validate() const;
    friend bool operator==(const StationTable&, const StationTable&) = default;
};

struct CsvSchema {
    std::string id_column = "station";
    std::string time_column = "hour";
    std::string value_column = "value";
    std::string lat_column = "lat";  // optional in the file
    std::string lon_column = "lon";  // optional in the file
};

struct LoadedTable {
    StationTable table;
    std::vector<std::size_t> missing_hours;  // per station, filled with 0
};

LoadedTable load_event_csv(const std::filesystem::path& path, const CsvSchema& schema = {});
LoadedTable parse_event_csv(const std::string& text, const CsvSchema& schema = {});

// One row per (station, hour), including zeros.
void write_event_csv(const std::filesystem::path& path, const StationTable& table);

// Entry is 1 iff value > threshold.
SpikeRaster binarize_hourly(const StationTable& table, double threshold = 0.0);

// Inverse view of a raster as a 0/1 table; stations are named by channel index.
StationTable table_from_raster(const SpikeRaster& raster);

// Default clustering features per channel, z-scored: (mean rate, mean
// off-diagonal normalized covariance to all other channels).
std::vector<std::vector<double>> station_features(const SpikeRaster& raster);

struct KMeansResult {
    std::vector<int> labels;
    std::vector<std::vector<double>> centroids;
    std::vector<double> inertia_history;  // within-cluster sum of squares after each iteration
    std::size_t iterations = 0;
    bool converged = false;
};

inline constexpr std::size_t kKMeansMaxIterations = 100;

// k-means++ seeding then Lloyd iterations; deterministic given seed.
KMeansResult cluster_stations(const std::vector<std::vector<double>>& features, std::size_t k,
                              std::uint64_t seed);

// Fraction of items whose two-way clustering matches the labels, best over the label swap.
double cluster_agreement(const std::vector<int>& clusters, const std::vector<bool>& labels);

}  // namespace fstdp
