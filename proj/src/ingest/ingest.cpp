#include "fstdp/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include "fstdp/analytics.hpp"
#include "fstdp/error.hpp"

namespace fstdp {

void StationTable::validate() const {
    if (coords.size() != ids.size()) throw DimensionError("station coords do not match ids");
    if (values.size() != ids.size() * n_hours) throw DimensionError("station table values have wrong size");
}

namespace {

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(',', start);
        out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    for (auto& f : out) {
        while (!f.empty() && (f.front() == ' ' || f.front() == '\t')) f.remove_prefix(1);
        while (!f.empty() && (f.back() == ' ' || f.back() == '\t' || f.back() == '\r')) f.remove_suffix(1);
    }
    return out;
}

template <typename T>
T parse_number(std::string_view field, std::size_t line, const char* what) {
    T value{};
    const auto* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc() || ptr != end || field.empty())
        throw ParseError(std::string("malformed ") + what + " '" + std::string(field) + "'", line);
    return value;
}

std::optional<std::size_t> column(const std::vector<std::string_view>& header, const std::string& name) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) return std::nullopt;
    return static_cast<std::size_t>(it - header.begin());
}

}  // namespace

LoadedTable parse_event_csv(const std::string& text, const CsvSchema& schema) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;

    std::vector<std::string_view> header;
    std::string header_line;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        header_line = line;
        header = split(header_line);
        break;
    }
    if (header.empty()) throw ParseError("missing header row", std::max<std::size_t>(line_no, 1));

    const auto id_col = column(header, schema.id_column);
    const auto time_col = column(header, schema.time_column);
    const auto value_col = column(header, schema.value_column);
    if (!id_col || !time_col || !value_col)
        throw ParseError("header must contain columns '" + schema.id_column + "', '" + schema.time_column +
                             "', '" + schema.value_column + "'",
                         line_no);
    const auto lat_col = column(header, schema.lat_column);
    const auto lon_col = column(header, schema.lon_column);

    struct Row {
        std::size_t station;
        std::int64_t hour;
        double value;
    };
    std::vector<Row> rows;
    std::vector<std::string> ids;
    std::vector<std::optional<std::pair<double, double>>> coords;
    std::unordered_map<std::string, std::size_t> index;
    std::map<std::pair<std::size_t, std::int64_t>, std::size_t> seen;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto fields = split(line);
        if (fields.size() != header.size())
            throw ParseError("expected " + std::to_string(header.size()) + " fields, got " +
                                 std::to_string(fields.size()),
                             line_no);
        const std::string id(fields[*id_col]);
        if (id.empty()) throw ParseError("empty station id", line_no);
        const auto hour = parse_number<std::int64_t>(fields[*time_col], line_no, "hour");
        const auto value = parse_number<double>(fields[*value_col], line_no, "value");
        if (!std::isfinite(value)) throw ParseError("non-finite value", line_no);

        auto [it, inserted] = index.emplace(id, ids.size());
        if (inserted) {
            ids.push_back(id);
            coords.emplace_back();
        }
        const std::size_t station = it->second;
        if (lat_col && lon_col && !coords[station] && !fields[*lat_col].empty() && !fields[*lon_col].empty())
            coords[station] = std::make_pair(parse_number<double>(fields[*lat_col], line_no, "latitude"),
                                             parse_number<double>(fields[*lon_col], line_no, "longitude"));

        auto [dup, fresh] = seen.emplace(std::make_pair(station, hour), line_no);
        if (!fresh)
            throw ConflictError("duplicate entry for station '" + id + "' hour " + std::to_string(hour) +
                                " (lines " + std::to_string(dup->second) + " and " + std::to_string(line_no) + ")");
        rows.push_back({station, hour, value});
    }
    if (rows.empty()) throw ParseError("no data rows", line_no);

    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    std::int64_t hi = std::numeric_limits<std::int64_t>::min();
    for (const auto& r : rows) {
        lo = std::min(lo, r.hour);
        hi = std::max(hi, r.hour);
    }

    LoadedTable out;
    StationTable& t = out.table;
    t.ids = std::move(ids);
    t.coords = std::move(coords);
    t.first_hour = lo;
    t.n_hours = static_cast<std::size_t>(hi - lo + 1);
    t.values.assign(t.ids.size() * t.n_hours, 0.0);
    std::vector<std::size_t> present(t.ids.size(), 0);
    for (const auto& r : rows) {
        t.values[r.station * t.n_hours + static_cast<std::size_t>(r.hour - lo)] = r.value;
        ++present[r.station];
    }
    out.missing_hours.resize(t.ids.size());
    for (std::size_t s = 0; s < t.ids.size(); ++s) out.missing_hours[s] = t.n_hours - present[s];
    return out;
}

LoadedTable load_event_csv(const std::filesystem::path& path, const CsvSchema& schema) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open event CSV '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_event_csv(buf.str(), schema);
}

void write_event_csv(const std::filesystem::path& path, const StationTable& table) {
    table.validate();
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write '" + path.string() + "'");
    const bool with_coords = std::any_of(table.coords.begin(), table.coords.end(),
                                         [](const auto& c) { return c.has_value(); });
    out << "station,hour,value" << (with_coords ? ",lat,lon" : "") << '\n';
    out.precision(17);
    for (std::size_t s = 0; s < table.n_stations(); ++s) {
        for (std::size_t h = 0; h < table.n_hours; ++h) {
            out << table.ids[s] << ',' << table.first_hour + static_cast<std::int64_t>(h) << ','
                << table.at(s, h);
            if (with_coords) {
                if (table.coords[s])
                    out << ',' << table.coords[s]->first << ',' << table.coords[s]->second;
                else
                    out << ",,";
            }
            out << '\n';
        }
    }
}

SpikeRaster binarize_hourly(const StationTable& table, double threshold) {
    table.validate();
    if (!(threshold >= 0.0)) throw InvalidInput("binarization threshold must be >= 0");
    SpikeRaster r(table.n_stations(), table.n_hours);
    for (std::size_t s = 0; s < table.n_stations(); ++s)
        for (std::size_t h = 0; h < table.n_hours; ++h) r.set(s, h, table.at(s, h) > threshold);
    return r;
}

StationTable table_from_raster(const SpikeRaster& raster) {
    StationTable t;
    t.n_hours = raster.n_steps();
    t.values.resize(raster.n_channels() * raster.n_steps());
    for (std::size_t c = 0; c < raster.n_channels(); ++c) {
        t.ids.push_back(std::to_string(c));
        t.coords.emplace_back();
        auto row = raster.channel(c);
        std::copy(row.begin(), row.end(), t.values.begin() + static_cast<std::ptrdiff_t>(c * t.n_hours));
    }
    return t;
}

std::vector<std::vector<double>> station_features(const SpikeRaster& raster) {
    const std::size_t n = raster.n_channels();
    if (n < 2) throw InvalidInput("features need at least two channels");
    const CovMatrix norm = normalized_cov(raster);

    std::vector<std::vector<double>> features(n, std::vector<double>(2, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) sum += norm.at(i, j);
        features[i][0] = raster.mean(i);
        features[i][1] = sum / static_cast<double>(n - 1);
    }
    for (std::size_t f = 0; f < 2; ++f) {
        double mean = 0.0;
        for (const auto& row : features) mean += row[f];
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (const auto& row : features) var += (row[f] - mean) * (row[f] - mean);
        const double sd = std::sqrt(var / static_cast<double>(n));
        for (auto& row : features) row[f] = sd > 0.0 ? (row[f] - mean) / sd : 0.0;
    }
    return features;
}

double cluster_agreement(const std::vector<int>& clusters, const std::vector<bool>& labels) {
    if (clusters.size() != labels.size() || clusters.empty())
        throw InvalidInput("clusters and labels must have equal, non-zero length");
    std::size_t match = 0;
    for (std::size_t i = 0; i < clusters.size(); ++i) match += (clusters[i] == 1) == labels[i];
    const double frac = static_cast<double>(match) / static_cast<double>(clusters.size());
    return std::max(frac, 1.0 - frac);
}

}  // namespace fstdp
