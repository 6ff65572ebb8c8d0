#include "fstdp/config.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "fstdp/engine.hpp"
#include "fstdp/error.hpp"
#include "fstdp/raster_io.hpp"

namespace fstdp {

using nlohmann::ordered_json;

namespace {

std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

// Object reader that tracks the field path and rejects unknown keys.
class Reader {
public:
    Reader(const ordered_json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) throw ValidationError(path_.empty() ? "<root>" : path_, "expected an object");
    }

    const ordered_json* find(const std::string& key) {
        seen_.insert(key);
        auto it = j_.find(key);
        return it == j_.end() ? nullptr : &*it;
    }

    std::string at(const std::string& key) const { return join(path_, key); }

    double number(const std::string& key, double def) {
        const auto* v = find(key);
        if (!v) return def;
        return as_number(*v, at(key));
    }

    std::size_t count(const std::string& key, std::size_t def) {
        const auto* v = find(key);
        if (!v) return def;
        return as_count(*v, at(key));
    }

    bool flag(const std::string& key, bool def) {
        const auto* v = find(key);
        if (!v) return def;
        if (!v->is_boolean()) throw ValidationError(at(key), "expected true or false");
        return v->get<bool>();
    }

    std::string text(const std::string& key, const std::string& def) {
        const auto* v = find(key);
        if (!v) return def;
        if (!v->is_string()) throw ValidationError(at(key), "expected a string");
        return v->get<std::string>();
    }

    Reader child(const std::string& key) {
        const auto* v = find(key);
        static const ordered_json empty = ordered_json::object();
        return Reader(v ? *v : empty, at(key));
    }

    void finish() const {
        for (const auto& [k, v] : j_.items())
            if (!seen_.count(k)) throw ValidationError(at(k), "unknown field");
    }

    static double as_number(const ordered_json& v, const std::string& path) {
        if (!v.is_number()) throw ValidationError(path, "expected a number");
        const double x = v.get<double>();
        if (!std::isfinite(x)) throw ValidationError(path, "must be finite");
        return x;
    }

    static std::size_t as_count(const ordered_json& v, const std::string& path) {
        if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return v.get<std::size_t>();
        throw ValidationError(path, "expected a non-negative integer");
    }

private:
    const ordered_json& j_;
    std::string path_;
    std::set<std::string> seen_;
};

std::vector<std::size_t> parse_channels(const ordered_json& v, const std::string& path) {
    std::vector<std::size_t> out;
    if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) out.push_back(Reader::as_count(v[i], path + "[" + std::to_string(i) + "]"));
        return out;
    }
    // {"first": a, "count": n} shorthand for a contiguous block.
    Reader r(v, path);
    const auto first = r.count("first", 0);
    const auto n = r.count("count", 0);
    r.finish();
    for (std::size_t i = 0; i < n; ++i) out.push_back(first + i);
    return out;
}

SyntheticSource parse_synthetic(Reader r) {
    SyntheticSource s;
    s.n_channels = r.count("n_channels", s.n_channels);
    s.n_steps = r.count("n_steps", s.n_steps);
    s.c = r.number("c", s.c);
    if (const auto* v = r.find("correlated_channels")) s.correlated_channels = parse_channels(*v, r.at("correlated_channels"));
    const auto* rates = r.find("rates_hz");
    if (!rates) throw ValidationError(r.at("rates_hz"), "required");
    if (rates->is_array()) {
        for (std::size_t i = 0; i < rates->size(); ++i)
            s.rates_hz.push_back(Reader::as_number((*rates)[i], r.at("rates_hz") + "[" + std::to_string(i) + "]"));
    } else {
        // {"correlated": a, "uncorrelated": b}
        Reader g(*rates, r.at("rates_hz"));
        const double rc = g.number("correlated", 0.0);
        const double ru = g.number("uncorrelated", 0.0);
        g.finish();
        s.rates_hz.assign(s.n_channels, ru);
        for (auto ch : s.correlated_channels)
            if (ch < s.n_channels) s.rates_hz[ch] = rc;
    }
    r.finish();
    return s;
}

CsvSource parse_csv(Reader r) {
    CsvSource s;
    s.raster_path = r.text("raster_path", "");
    if (const auto* v = r.find("labels_path"); v && !v->is_null()) {
        if (!v->is_string()) throw ValidationError(r.at("labels_path"), "expected a string");
        s.labels_path = v->get<std::string>();
    }
    r.finish();
    return s;
}

WeatherlikeSource parse_weatherlike(Reader r) {
    WeatherlikeSource s;
    s.n_scarce_correlated = r.count("n_scarce_correlated", s.n_scarce_correlated);
    s.n_frequent_uncorrelated = r.count("n_frequent_uncorrelated", s.n_frequent_uncorrelated);
    s.p_scarce = r.number("p_scarce", s.p_scarce);
    s.p_frequent = r.number("p_frequent", s.p_frequent);
    s.c = r.number("c", s.c);
    s.n_steps = r.count("n_steps", s.n_steps);
    r.finish();
    return s;
}

DatasetSource parse_dataset(const ordered_json& j) {
    if (!j.is_object() || j.size() != 1)
        throw ValidationError("dataset", "exactly one of synthetic, csv, weatherlike is required");
    const std::string key = j.begin().key();
    const auto& value = j.begin().value();
    const std::string path = "dataset." + key;
    if (key == "synthetic") return parse_synthetic(Reader(value, path));
    if (key == "csv") return parse_csv(Reader(value, path));
    if (key == "weatherlike") return parse_weatherlike(Reader(value, path));
    throw ValidationError(path, "unknown dataset source");
}

NeuronSection parse_neuron(Reader r, double dt) {
    NeuronSection n;
    if (const auto* v = r.find("v_th"); v && !v->is_null()) {
        if (v->is_string()) {
            if (v->get<std::string>() != "auto") throw ValidationError(r.at("v_th"), "expected a number or \"auto\"");
        } else {
            n.v_th = Reader::as_number(*v, r.at("v_th"));
        }
    }
    n.tau_m = r.number("tau_m", n.tau_m);
    n.v_reset = r.number("v_reset", n.v_reset);
    auto c = r.child("calibration");
    const bool has_hz = c.find("target_rate_hz") != nullptr;
    const bool has_step = c.find("target_rate_per_step") != nullptr;
    if (has_hz && has_step)
        throw ValidationError(c.at("target_rate_hz"), "give either target_rate_hz or target_rate_per_step");
    n.calibration.target_rate_hz = c.number("target_rate_hz", n.calibration.target_rate_hz);
    if (has_step) n.calibration.target_rate_hz = c.number("target_rate_per_step", 0.0) / dt;
    n.calibration.sample_steps = c.count("sample_steps", n.calibration.sample_steps);
    n.calibration.with_fatigue = c.flag("with_fatigue", n.calibration.with_fatigue);
    c.finish();
    r.finish();
    return n;
}

PlasticitySection parse_plasticity(Reader r) {
    PlasticitySection p;
    const auto mode_text = r.text("mode", std::string(to_string(p.mode)));
    try {
        p.mode = parse_mode(mode_text);
    } catch (const Error&) {
        throw ValidationError(r.at("mode"), "expected \"stdp\" or \"fstdp\"");
    }
    p.initial_weight = r.number("initial_weight", p.initial_weight);

    auto k = r.child("kernel");
    const KernelParams d;
    const double ap = k.number("a_plus", d.a_plus());
    const double am = k.number("a_minus", d.a_minus());
    const double tp = k.number("tau_plus", d.tau_plus());
    const double tm = k.number("tau_minus", d.tau_minus());
    const double pd = k.number("post_depression", d.post_depression());
    k.finish();
    try {
        p.kernel = KernelParams(ap, am, tp, tm, pd);
    } catch (const Error& e) {
        throw ValidationError(r.at("kernel"), e.what());
    }

    auto f = r.child("fatigue");
    p.fatigue.jump = f.number("jump", p.fatigue.jump);
    p.fatigue.tau_f = f.number("tau_f", p.fatigue.tau_f);
    p.fatigue.clamp = f.flag("clamp", p.fatigue.clamp);
    f.finish();
    r.finish();
    return p;
}

bool in_unit(double x) { return x >= 0.0 && x <= 1.0; }

}  // namespace

PlasticityConfig PlasticitySection::rule() const {
    PlasticityConfig r;
    r.kernel = kernel;
    r.fatigue = fatigue;
    r.mode = mode;
    r.initial_weight = initial_weight;
    return mode == PlasticityMode::stdp ? as_stdp(r) : r;
}

PlasticityConfig PlasticitySection::fatigue_rule() const {
    PlasticityConfig r = rule();
    r.mode = PlasticityMode::fstdp;
    r.fatigue = fatigue;
    return r;
}

ProcessSpec process_spec(const SyntheticSource& src, double dt, std::uint64_t seed) {
    ProcessSpec ps;
    ps.n_channels = src.n_channels;
    ps.dt = dt;
    ps.n_steps = src.n_steps;
    ps.rates = src.rates_hz;
    ps.correlated_set = src.correlated_channels;
    ps.c = src.c;
    ps.seed = seed;
    return ps;
}

WeatherlikeSpec weatherlike_spec(const WeatherlikeSource& src, double dt, std::uint64_t seed) {
    WeatherlikeSpec w;
    w.n_scarce_correlated = src.n_scarce_correlated;
    w.n_frequent_uncorrelated = src.n_frequent_uncorrelated;
    w.p_scarce = src.p_scarce;
    w.p_frequent = src.p_frequent;
    w.c = src.c;
    w.n_steps = src.n_steps;
    w.seed = seed;
    w.dt = dt;
    return w;
}

void validate(const ExperimentConfig& cfg) {
    if (!(cfg.clock.dt > 0.0)) throw ValidationError("clock.dt", "must be positive");

    if (const auto* s = std::get_if<SyntheticSource>(&cfg.dataset)) {
        const std::string p = "dataset.synthetic";
        if (s->n_channels == 0) throw ValidationError(p + ".n_channels", "must be positive");
        if (s->n_steps == 0) throw ValidationError(p + ".n_steps", "must be positive");
        if (!(s->c >= 0.0 && s->c < 1.0)) throw ValidationError(p + ".c", "must lie in [0, 1)");
        if (s->rates_hz.size() != s->n_channels)
            throw ValidationError(p + ".rates_hz", "expected " + std::to_string(s->n_channels) + " rates");
        for (std::size_t i = 0; i < s->rates_hz.size(); ++i)
            if (!in_unit(s->rates_hz[i] * cfg.clock.dt))
                throw ValidationError(p + ".rates_hz[" + std::to_string(i) + "]", "rate*dt must lie in [0, 1]");
        std::set<std::size_t> uniq;
        for (auto ch : s->correlated_channels) {
            if (ch >= s->n_channels) throw ValidationError(p + ".correlated_channels", "channel out of range");
            if (!uniq.insert(ch).second) throw ValidationError(p + ".correlated_channels", "duplicate channel");
        }
        try {
            process_spec(*s, cfg.clock.dt, cfg.seed).validate();
        } catch (const Error& e) {
            throw ValidationError(p, e.what());
        }
    } else if (const auto* c = std::get_if<CsvSource>(&cfg.dataset)) {
        if (c->raster_path.empty()) throw ValidationError("dataset.csv.raster_path", "required");
    } else {
        const auto& w = std::get<WeatherlikeSource>(cfg.dataset);
        const std::string p = "dataset.weatherlike";
        if (!(w.c >= 0.0 && w.c < 1.0)) throw ValidationError(p + ".c", "must lie in [0, 1)");
        if (!(w.p_scarce > 0.0 && w.p_scarce < 1.0)) throw ValidationError(p + ".p_scarce", "must lie in (0, 1)");
        if (!(w.p_frequent > 0.0 && w.p_frequent < 1.0)) throw ValidationError(p + ".p_frequent", "must lie in (0, 1)");
        if (w.n_steps == 0) throw ValidationError(p + ".n_steps", "must be positive");
        if (w.n_scarce_correlated + w.n_frequent_uncorrelated == 0)
            throw ValidationError(p + ".n_scarce_correlated", "no channels");
    }

    const auto& n = cfg.neuron;
    if (!(n.tau_m > 0.0)) throw ValidationError("neuron.tau_m", "must be positive");
    if (n.v_th && !(*n.v_th > n.v_reset)) throw ValidationError("neuron.v_th", "must exceed v_reset");
    if (!(n.calibration.target_rate_hz > 0.0))
        throw ValidationError("neuron.calibration.target_rate_hz", "must be positive");
    if (n.calibration.sample_steps < kMinCalibrationSteps)
        throw ValidationError("neuron.calibration.sample_steps",
                              "must be at least " + std::to_string(kMinCalibrationSteps));

    const auto& pl = cfg.plasticity;
    if (!in_unit(pl.initial_weight)) throw ValidationError("plasticity.initial_weight", "must lie in [0, 1]");
    if (!(pl.fatigue.tau_f > 0.0)) throw ValidationError("plasticity.fatigue.tau_f", "must be positive");
    if (!(pl.fatigue.jump >= 0.0)) throw ValidationError("plasticity.fatigue.jump", "must be non-negative");
    if (pl.mode == PlasticityMode::fstdp && !(pl.fatigue.jump > 0.0))
        throw ValidationError("plasticity.fatigue.jump", "must be positive in fstdp mode");
    if (n.calibration.with_fatigue && !n.v_th && !(pl.fatigue.jump > 0.0))
        throw ValidationError("neuron.calibration.with_fatigue", "needs a positive fatigue jump");
}

ExperimentConfig parse_config(const ordered_json& j) {
    Reader r(j, "");
    ExperimentConfig cfg;
    cfg.name = r.text("name", cfg.name);
    const auto* ds = r.find("dataset");
    if (!ds) throw ValidationError("dataset", "required");
    cfg.dataset = parse_dataset(*ds);
    auto clock = r.child("clock");
    cfg.clock.dt = clock.number("dt", cfg.clock.dt);
    clock.finish();
    if (!(cfg.clock.dt > 0.0)) throw ValidationError("clock.dt", "must be positive");
    cfg.neuron = parse_neuron(r.child("neuron"), cfg.clock.dt);
    cfg.plasticity = parse_plasticity(r.child("plasticity"));
    if (const auto* s = r.find("seed")) cfg.seed = Reader::as_count(*s, "seed");
    cfg.output_dir = r.text("output_dir", cfg.output_dir);
    auto rep = r.child("report");
    cfg.report.trajectory_stride = rep.count("trajectory_stride", cfg.report.trajectory_stride);
    cfg.report.emit_uncentered = rep.flag("emit_uncentered", cfg.report.emit_uncentered);
    cfg.report.emit_normalized = rep.flag("emit_normalized", cfg.report.emit_normalized);
    cfg.report.emit_scores = rep.flag("emit_scores", cfg.report.emit_scores);
    rep.finish();
    r.finish();
    validate(cfg);
    return cfg;
}

ExperimentConfig parse_config_text(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("<root>", std::string("malformed JSON: ") + e.what());
    }
    return parse_config(j);
}

ExperimentConfig load_config(const std::filesystem::path& path) { return parse_config_text(slurp(path)); }

ordered_json emit_config(const ExperimentConfig& cfg) {
    ordered_json j;
    j["name"] = cfg.name;
    ordered_json ds;
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SyntheticSource>) {
                ds["synthetic"] = {{"n_channels", s.n_channels},
                                   {"n_steps", s.n_steps},
                                   {"rates_hz", s.rates_hz},
                                   {"correlated_channels", s.correlated_channels},
                                   {"c", s.c}};
            } else if constexpr (std::is_same_v<T, CsvSource>) {
                ds["csv"] = {{"raster_path", s.raster_path},
                             {"labels_path", s.labels_path ? ordered_json(*s.labels_path) : ordered_json()}};
            } else {
                ds["weatherlike"] = {{"n_scarce_correlated", s.n_scarce_correlated},
                                     {"n_frequent_uncorrelated", s.n_frequent_uncorrelated},
                                     {"p_scarce", s.p_scarce},
                                     {"p_frequent", s.p_frequent},
                                     {"c", s.c},
                                     {"n_steps", s.n_steps}};
            }
        },
        cfg.dataset);
    j["dataset"] = ds;
    j["clock"] = {{"dt", cfg.clock.dt}};
    const auto& n = cfg.neuron;
    j["neuron"] = {{"v_th", n.v_th ? ordered_json(*n.v_th) : ordered_json("auto")},
                   {"tau_m", n.tau_m},
                   {"v_reset", n.v_reset},
                   {"calibration",
                    {{"target_rate_hz", n.calibration.target_rate_hz},
                     {"sample_steps", n.calibration.sample_steps},
                     {"with_fatigue", n.calibration.with_fatigue}}}};
    const auto& p = cfg.plasticity;
    j["plasticity"] = {{"mode", std::string(to_string(p.mode))},
                       {"initial_weight", p.initial_weight},
                       {"kernel",
                        {{"a_plus", p.kernel.a_plus()},
                         {"a_minus", p.kernel.a_minus()},
                         {"tau_plus", p.kernel.tau_plus()},
                         {"tau_minus", p.kernel.tau_minus()},
                         {"post_depression", p.kernel.post_depression()}}},
                       {"fatigue", {{"jump", p.fatigue.jump}, {"tau_f", p.fatigue.tau_f}, {"clamp", p.fatigue.clamp}}}};
    j["seed"] = cfg.seed;
    j["output_dir"] = cfg.output_dir;
    j["report"] = {{"trajectory_stride", cfg.report.trajectory_stride},
                   {"emit_uncentered", cfg.report.emit_uncentered},
                   {"emit_normalized", cfg.report.emit_normalized},
                   {"emit_scores", cfg.report.emit_scores}};
    return j;
}

}  // namespace fstdp
