#include "fstdp/raster_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

#include "fstdp/error.hpp"

namespace fstdp {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write '" + path.string() + "'");
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

// Parses exactly `n` comma-separated unsigned integers.
std::vector<std::size_t> parse_uints(std::string_view line, std::size_t n, std::size_t line_no) {
    std::vector<std::size_t> out;
    std::size_t start = 0;
    while (start <= line.size()) {
        const auto pos = line.find(',', start);
        const auto field = trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
            throw ParseError("expected unsigned integer, got '" + std::string(field) + "'", line_no);
        out.push_back(v);
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    if (out.size() != n)
        throw ParseError("expected " + std::to_string(n) + " fields, got " + std::to_string(out.size()), line_no);
    return out;
}

}  // namespace

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_raster_csv(const std::filesystem::path& path, const SpikeRaster& raster) {
    auto out = open_out(path);
    out << "# " << raster.n_channels() << ',' << raster.n_steps() << '\n';
    out << "channel,step,value\n";
    for (std::size_t c = 0; c < raster.n_channels(); ++c) {
        auto row = raster.channel(c);
        for (std::size_t t = 0; t < row.size(); ++t)
            if (row[t]) out << c << ',' << t << ",1\n";
    }
}

SpikeRaster parse_raster_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    auto next = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (!trim(line).empty()) return true;
        }
        return false;
    };

    if (!next()) throw ParseError("empty raster file", 1);
    std::string_view pre = trim(line);
    if (pre.empty() || pre.front() != '#') throw ParseError("missing '# n_channels,n_steps' preamble", line_no);
    pre.remove_prefix(1);
    const auto dims = parse_uints(trim(pre), 2, line_no);
    if (dims[0] == 0 || dims[1] == 0) throw ParseError("raster dimensions must be positive", line_no);
    if (!next() || trim(line) != "channel,step,value") throw ParseError("expected header 'channel,step,value'", line_no);

    SpikeRaster raster(dims[0], dims[1]);
    while (next()) {
        const auto f = parse_uints(trim(line), 3, line_no);
        if (f[0] >= dims[0] || f[1] >= dims[1]) throw ParseError("event outside raster bounds", line_no);
        if (f[2] > 1) throw ParseError("raster values must be 0 or 1", line_no);
        raster.set(f[0], f[1], f[2] == 1);
    }
    return raster;
}

SpikeRaster read_raster_csv(const std::filesystem::path& path) { return parse_raster_csv(slurp(path)); }

void write_labels_csv(const std::filesystem::path& path, const std::vector<bool>& labels) {
    auto out = open_out(path);
    out << "channel,correlated\n";
    for (std::size_t i = 0; i < labels.size(); ++i) out << i << ',' << (labels[i] ? 1 : 0) << '\n';
}

std::vector<bool> read_labels_csv(const std::filesystem::path& path) {
    std::istringstream in(slurp(path));
    std::string line;
    std::size_t line_no = 0;
    std::vector<bool> labels;
    bool header = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        if (header) {
            if (trim(line) != "channel,correlated") throw ParseError("expected header 'channel,correlated'", line_no);
            header = false;
            continue;
        }
        const auto f = parse_uints(trim(line), 2, line_no);
        if (f[0] != labels.size()) throw ParseError("channels must be listed in order", line_no);
        if (f[1] > 1) throw ParseError("label must be 0 or 1", line_no);
        labels.push_back(f[1] == 1);
    }
    if (labels.empty()) throw ParseError("labels file has no rows", std::max<std::size_t>(line_no, 1));
    return labels;
}

void write_matrix_csv(const std::filesystem::path& path, const CovMatrix& m) {
    auto out = open_out(path);
    out.precision(17);
    out << "# kind=" << to_string(m.kind) << ",n=" << m.n << ",n_steps=" << m.n_steps << '\n';
    for (std::size_t i = 0; i < m.n; ++i) {
        for (std::size_t j = 0; j < m.n; ++j) out << (j ? "," : "") << m.at(i, j);
        out << '\n';
    }
}

}  // namespace fstdp
