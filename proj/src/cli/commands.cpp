#include "fstdp/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <future>
#include <map>
#include <set>

#include "fstdp/analytics.hpp"
#include "fstdp/datagen.hpp"
#include "fstdp/engine.hpp"
#include "fstdp/error.hpp"
#include "fstdp/ingest.hpp"
#include "fstdp/raster_io.hpp"

namespace fstdp {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

constexpr std::size_t kRunTheoryMcSteps = 100000;

std::ofstream open_out(const fs::path& path) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out.precision(17);
    return out;
}

void write_json(const fs::path& path, const ordered_json& j) {
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

ordered_json read_json(const fs::path& path) {
    try {
        return ordered_json::parse(slurp(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("<root>", std::string("malformed JSON: ") + e.what());
    }
}

fs::path base_dir_of(const GlobalOptions& g) {
    return g.config ? g.config->parent_path() : fs::path{};
}

fs::path resolve(const fs::path& base, const std::string& p) {
    const fs::path path(p);
    return path.is_absolute() || base.empty() ? path : base / path;
}

std::vector<std::size_t> set_from_labels(const std::vector<bool>& labels) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i]) out.push_back(i);
    return out;
}

// Mean Pearson coefficient over pairs inside the labelled group; nullopt when undefined.
std::optional<double> mean_group_correlation(const SpikeRaster& r, const std::vector<bool>& labels) {
    const auto group = set_from_labels(labels);
    double sum = 0.0;
    std::size_t n = 0;
    for (std::size_t a = 0; a < group.size(); ++a)
        for (std::size_t b = a + 1; b < group.size(); ++b) {
            try {
                sum += empirical_correlation(r, group[a], group[b]);
                ++n;
            } catch (const UndefinedCorrelation&) {
            }
        }
    if (n == 0) return std::nullopt;
    return std::max(0.0, sum / static_cast<double>(n));
}

ordered_json condition_json(const LearningCondition& c) {
    return {{"ratio", c.ratio},
            {"learns", c.learns},
            {"causal_correlated", c.causal_correlated},
            {"causal_uncorrelated", c.causal_uncorrelated}};
}

ordered_json separation_json(const SeparationReport& s) {
    return {{"auc", s.auc}, {"gap", s.gap}, {"mean_correlated", s.mean_correlated},
            {"mean_uncorrelated", s.mean_uncorrelated}};
}

void write_scores_csv(const fs::path& path, const SpikeRaster& r, double dt) {
    const auto raw = cov_with_mean_input(r, false);
    const auto norm = cov_with_mean_input(r, true);
    auto out = open_out(path);
    out << "channel,rate_hz,cov_mean_input,normcov_mean_input\n";
    for (std::size_t i = 0; i < r.n_channels(); ++i)
        out << i << ',' << r.mean(i) / dt << ',' << raw[i] << ',' << norm[i] << '\n';
}

void write_weights_csv(const fs::path& path, const std::vector<double>& w,
                       const std::optional<std::vector<bool>>& labels) {
    auto out = open_out(path);
    out << "channel,weight,correlated\n";
    for (std::size_t i = 0; i < w.size(); ++i) {
        out << i << ',' << w[i] << ',';
        if (labels) out << ((*labels)[i] ? 1 : 0);
        out << '\n';
    }
}

void write_output_spikes_csv(const fs::path& path, const std::vector<std::uint8_t>& spikes) {
    auto out = open_out(path);
    out << "step\n";
    for (std::size_t t = 0; t < spikes.size(); ++t)
        if (spikes[t]) out << t << '\n';
}

void write_trajectory_csv(const fs::path& path, const WeightTrajectory& tr) {
    auto out = open_out(path);
    out << "step";
    const std::size_t n = tr.weights.empty() ? 0 : tr.weights.front().size();
    for (std::size_t i = 0; i < n; ++i) out << ",w_" << i;
    out << '\n';
    for (std::size_t k = 0; k < tr.steps.size(); ++k) {
        out << tr.steps[k];
        for (double w : tr.weights[k]) out << ',' << w;
        out << '\n';
    }
}

ordered_json block_means_json(const CovMatrix& m, const std::vector<bool>& labels) {
    const bool has_c = std::count(labels.begin(), labels.end(), true) > 0;
    const bool has_u = std::count(labels.begin(), labels.end(), false) > 0;
    const auto pairs = [&](std::size_t k) { return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), k == 1)); };
    ordered_json j;
    j["correlated_correlated"] = pairs(1) > 1 ? ordered_json(block_mean(m, labels, true, true)) : ordered_json();
    j["correlated_uncorrelated"] = has_c && has_u ? ordered_json(block_mean(m, labels, true, false)) : ordered_json();
    j["uncorrelated_uncorrelated"] = pairs(0) > 1 ? ordered_json(block_mean(m, labels, false, false)) : ordered_json();
    return j;
}

}  // namespace

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ValidationError*>(&e) || dynamic_cast<const ParseError*>(&e) ||
        dynamic_cast<const InvalidInput*>(&e) || dynamic_cast<const DimensionError*>(&e) ||
        dynamic_cast<const ConflictError*>(&e))
        return kExitValidation;
    return kExitRuntime;
}

ExperimentConfig resolve_config(const GlobalOptions& g) {
    if (!g.config) throw ValidationError("--config", "required");
    auto cfg = load_config(*g.config);
    if (g.seed) cfg.seed = *g.seed;
    if (g.mode) cfg.plasticity.mode = *g.mode;
    if (g.out_dir) cfg.output_dir = g.out_dir->string();
    validate(cfg);
    return cfg;
}

fs::path resolve_out_dir(const GlobalOptions& g, const ExperimentConfig& cfg) {
    return g.out_dir ? *g.out_dir : fs::path(cfg.output_dir);
}

Dataset load_dataset(const ExperimentConfig& cfg, const fs::path& base_dir) {
    const double dt = cfg.clock.dt;
    if (const auto* s = std::get_if<SyntheticSource>(&cfg.dataset)) {
        const auto ps = process_spec(*s, dt, cfg.seed);
        return Dataset{generate_correlated_binary(ps), ps.labels(), s->rates_hz, s->c};
    }
    if (const auto* w = std::get_if<WeatherlikeSource>(&cfg.dataset)) {
        const auto spec = weatherlike_spec(*w, dt, cfg.seed);
        auto lr = generate_weatherlike(spec);
        return Dataset{std::move(lr.raster), std::move(lr.labels), spec.process_spec().rates, w->c};
    }
    const auto& c = std::get<CsvSource>(cfg.dataset);
    auto raster = read_raster_csv(resolve(base_dir, c.raster_path));
    std::optional<std::vector<bool>> labels;
    if (c.labels_path) {
        labels = read_labels_csv(resolve(base_dir, *c.labels_path));
        if (labels->size() != raster.n_channels())
            throw DimensionError("labels cover " + std::to_string(labels->size()) + " channels, raster has " +
                                 std::to_string(raster.n_channels()));
    }
    std::vector<double> rates(raster.n_channels());
    for (std::size_t i = 0; i < rates.size(); ++i) rates[i] = raster.mean(i) / dt;
    std::optional<double> corr;
    if (labels) corr = mean_group_correlation(raster, *labels);
    return Dataset{std::move(raster), std::move(labels), std::move(rates), corr};
}

ordered_json theory_verdicts(const TheoryParams& params) {
    ordered_json j;
    for (auto mode : {PlasticityMode::stdp, PlasticityMode::fstdp})
        j[std::string(to_string(mode))] = condition_json(learning_condition(params, mode));
    return j;
}

ordered_json run_experiment(const ExperimentConfig& cfg, const fs::path& out_dir, const fs::path& base_dir) {
    validate(cfg);
    const auto t0 = std::chrono::steady_clock::now();
    fs::create_directories(out_dir);

    const Dataset data = load_dataset(cfg, base_dir);
    const auto& raster = data.raster;
    const SimClock clock{cfg.clock.dt, 0};
    NeuronConfig neuron{1.0, cfg.neuron.tau_m, cfg.neuron.v_reset};
    const auto rule = cfg.plasticity.rule();

    const bool calibrated = !cfg.neuron.v_th.has_value();
    if (calibrated) {
        const auto& cal = cfg.neuron.calibration;
        const auto sample = raster.slice(0, std::min(cal.sample_steps, raster.n_steps()));
        neuron.v_th = calibrate_threshold(sample, neuron,
                                          cal.with_fatigue ? cfg.plasticity.fatigue_rule() : rule, clock,
                                          cal.target_rate_hz);
    } else {
        neuron.v_th = *cfg.neuron.v_th;
    }

    SimulationOptions opts;
    opts.trajectory_stride = cfg.report.trajectory_stride;
    const auto result = run_simulation(raster, neuron, rule, clock, cfg.seed, opts);

    ordered_json files;
    write_weights_csv(out_dir / "weights.csv", result.final_weights, data.labels);
    files["weights"] = "weights.csv";
    write_output_spikes_csv(out_dir / "output_spikes.csv", result.output_spikes);
    files["output_spikes"] = "output_spikes.csv";
    if (cfg.report.trajectory_stride > 0) {
        write_trajectory_csv(out_dir / "trajectory.csv", result.weight_trajectory);
        files["trajectory"] = "trajectory.csv";
    }
    if (data.labels) {
        write_labels_csv(out_dir / "labels.csv", *data.labels);
        files["labels"] = "labels.csv";
    }

    ordered_json report;
    report["config"] = emit_config(cfg);

    const auto [wmin, wmax] = std::minmax_element(result.final_weights.begin(), result.final_weights.end());
    ordered_json summary;
    summary["mode"] = std::string(to_string(rule.mode));
    summary["n_channels"] = raster.n_channels();
    summary["n_steps"] = raster.n_steps();
    summary["v_th"] = neuron.v_th;
    summary["v_th_calibrated"] = calibrated;
    summary["output_spikes"] = result.output_count();
    summary["output_rate_hz"] = result.output_rate;
    summary["rng_seed"] = result.rng_seed;
    summary["weight_min"] = *wmin;
    summary["weight_max"] = *wmax;
    summary["files"] = files;
    report["result"] = summary;

    std::optional<SeparationReport> sep;
    if (data.labels) {
        try {
            sep = separation_metrics(result.final_weights, *data.labels);
        } catch (const InvalidInput&) {
        }
    }
    report["separation"] = sep ? separation_json(*sep) : ordered_json();

    ordered_json cov;
    if (cfg.report.emit_normalized) {
        const auto m = normalized_cov(raster);
        write_matrix_csv(out_dir / "normcov.csv", m);
        cov["normalized"] = "normcov.csv";
        if (data.labels) cov["normalized_block_means"] = block_means_json(m, *data.labels);
    }
    if (cfg.report.emit_uncentered) {
        write_matrix_csv(out_dir / "uncov.csv", uncentered_cov(raster));
        cov["uncentered"] = "uncov.csv";
    }
    if (cfg.report.emit_scores) {
        write_scores_csv(out_dir / "scores.csv", raster, cfg.clock.dt);
        cov["scores"] = "scores.csv";
    }
    report["covariance"] = cov.empty() ? ordered_json::object() : cov;

    ordered_json theory;
    if (data.labels && data.correlation) {
        TheoryParams tp;
        tp.rates = data.rates_hz;
        tp.dt = cfg.clock.dt;
        tp.weights.assign(raster.n_channels(), cfg.plasticity.initial_weight);
        tp.v_th = neuron.v_th;
        tp.correlation = *data.correlation;
        tp.fatigue = cfg.plasticity.fatigue;
        if (!(tp.fatigue.jump > 0.0)) tp.fatigue.jump = 1.0;
        tp.correlated_set = set_from_labels(*data.labels);
        tp.mc_steps = kRunTheoryMcSteps;
        tp.seed = cfg.seed;
        try {
            theory = theory_verdicts(tp);
            theory["predicted_learns"] = theory[std::string(to_string(rule.mode))]["learns"];
        } catch (const DegenerateCondition& e) {
            theory = {{"error", e.what()}};
        }
    }
    report["theory"] = theory;

    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report["timing"] = {{"wall_seconds", secs}};
    write_json(out_dir / "report.json", report);
    return report;
}

ordered_json report_body(ordered_json report) {
    report.erase("timing");
    return report;
}

int cmd_generate(const GlobalOptions& g, std::ostream& log) {
    const auto cfg = resolve_config(g);
    if (std::holds_alternative<CsvSource>(cfg.dataset))
        throw ValidationError("dataset", "generate needs a synthetic or weatherlike source");
    const auto out = resolve_out_dir(g, cfg);
    const auto data = load_dataset(cfg);
    write_raster_csv(out / "raster.csv", data.raster);
    write_labels_csv(out / "labels.csv", *data.labels);
    if (!g.quiet)
        log << "wrote " << (out / "raster.csv").string() << " (" << data.raster.n_channels() << " x "
            << data.raster.n_steps() << ", " << data.raster.total_events() << " events) and labels.csv\n";
    return kExitOk;
}

int cmd_run(const GlobalOptions& g, const RunFanout& fan, std::ostream& log) {
    const auto cfg = resolve_config(g);
    const auto out = resolve_out_dir(g, cfg);
    const auto base = base_dir_of(g);

    std::vector<std::uint64_t> seeds = fan.seeds;
    if (fan.runs) {
        if (*fan.runs == 0) throw ValidationError("--runs", "must be positive");
        if (seeds.empty())
            for (std::size_t i = 0; i < *fan.runs; ++i) seeds.push_back(cfg.seed + i);
        else if (seeds.size() != *fan.runs)
            throw ValidationError("--seeds", "expected " + std::to_string(*fan.runs) + " seeds");
    }
    if (std::set<std::uint64_t>(seeds.begin(), seeds.end()).size() != seeds.size())
        throw ValidationError("--seeds", "duplicate seed");

    auto print = [&](const ordered_json& r, const std::string& tag) {
        if (g.quiet) return;
        log << tag << "mode=" << r["result"]["mode"].get<std::string>() << " v_th=" << r["result"]["v_th"].get<double>()
            << " output_rate_hz=" << r["result"]["output_rate_hz"].get<double>();
        if (!r["separation"].is_null())
            log << " auc=" << r["separation"]["auc"].get<double>()
                << " mean_correlated=" << r["separation"]["mean_correlated"].get<double>()
                << " mean_uncorrelated=" << r["separation"]["mean_uncorrelated"].get<double>();
        log << '\n';
    };

    if (seeds.empty()) {
        print(run_experiment(cfg, out, base), "");
        if (!g.quiet) log << "report: " << (out / "report.json").string() << '\n';
        return kExitOk;
    }

    std::vector<std::future<ordered_json>> jobs;
    for (auto s : seeds) {
        auto c = cfg;
        c.seed = s;
        const auto dir = out / ("seed_" + std::to_string(s));
        jobs.push_back(std::async(std::launch::async, [c, dir, base] { return run_experiment(c, dir, base); }));
    }
    ordered_json runs = ordered_json::array();
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const auto r = jobs[i].get();
        print(r, "seed " + std::to_string(seeds[i]) + ": ");
        runs.push_back({{"seed", seeds[i]},
                        {"report", "seed_" + std::to_string(seeds[i]) + "/report.json"},
                        {"v_th", r["result"]["v_th"]},
                        {"separation", r["separation"]}});
    }
    write_json(out / "summary.json", {{"runs", runs}});
    if (!g.quiet) log << "summary: " << (out / "summary.json").string() << '\n';
    return kExitOk;
}

int cmd_analyze(const GlobalOptions& g, const AnalyzeOptions& a, std::ostream& log) {
    const auto raster = read_raster_csv(a.raster);
    const bool all = !a.normcov && !a.uncov && !a.scores;
    const fs::path out = g.out_dir ? *g.out_dir : fs::path(".");
    double dt = 0.1;
    if (g.config) dt = load_config(*g.config).clock.dt;

    std::optional<std::vector<bool>> labels;
    if (a.labels) {
        labels = read_labels_csv(*a.labels);
        if (labels->size() != raster.n_channels()) throw DimensionError("labels do not match raster channels");
    }
    if (all || a.normcov) {
        const auto m = normalized_cov(raster);
        write_matrix_csv(out / "normcov.csv", m);
        if (!g.quiet) {
            log << "wrote " << (out / "normcov.csv").string() << '\n';
            if (labels) log << "normalized block means: " << block_means_json(m, *labels).dump() << '\n';
        }
    }
    if (all || a.uncov) {
        write_matrix_csv(out / "uncov.csv", uncentered_cov(raster));
        if (!g.quiet) log << "wrote " << (out / "uncov.csv").string() << '\n';
    }
    if (all || a.scores) {
        write_scores_csv(out / "scores.csv", raster, dt);
        if (!g.quiet) log << "wrote " << (out / "scores.csv").string() << '\n';
    }
    return kExitOk;
}

TheoryJob parse_theory_job(const ordered_json& j) {
    auto num = [&](const char* key, double def) {
        if (!j.contains(key)) return def;
        if (!j[key].is_number()) throw ValidationError(key, "expected a number");
        return j[key].get<double>();
    };
    auto count = [&](const ordered_json& v, const std::string& path) {
        if (!v.is_number_integer() || v.get<std::int64_t>() < 0) throw ValidationError(path, "expected a non-negative integer");
        return v.get<std::size_t>();
    };
    if (!j.is_object()) throw ValidationError("<root>", "expected an object");

    TheoryJob job;
    auto& p = job.params;
    p.dt = num("dt", 0.1);
    const double weight = num("weight", 0.5);
    p.correlation = num("correlation", 0.0);
    if (!j.contains("v_th") || !j["v_th"].is_number()) throw ValidationError("v_th", "a numeric threshold is required");
    p.v_th = j["v_th"].get<double>();
    if (j.contains("n_coinc") && !j["n_coinc"].is_null()) p.n_coinc = num("n_coinc", 0.0);
    if (j.contains("mc_steps")) p.mc_steps = count(j["mc_steps"], "mc_steps");
    if (j.contains("seed")) p.seed = count(j["seed"], "seed");
    if (j.contains("fatigue")) {
        const auto& f = j["fatigue"];
        if (!f.is_object()) throw ValidationError("fatigue", "expected an object");
        p.fatigue.jump = f.value("jump", p.fatigue.jump);
        p.fatigue.tau_f = f.value("tau_f", p.fatigue.tau_f);
        p.fatigue.clamp = f.value("clamp", p.fatigue.clamp);
    }

    if (j.contains("groups")) {
        // [{"count": n, "rate_hz": r, "correlated": bool}, ...]
        const auto& groups = j["groups"];
        if (!groups.is_array() || groups.empty()) throw ValidationError("groups", "expected a non-empty array");
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
            const auto path = "groups[" + std::to_string(gi) + "]";
            const auto& grp = groups[gi];
            if (!grp.is_object() || !grp.contains("count") || !grp.contains("rate_hz") || !grp["rate_hz"].is_number())
                throw ValidationError(path, "needs count and rate_hz");
            const auto n = count(grp["count"], path + ".count");
            const bool corr = grp.value("correlated", false);
            for (std::size_t i = 0; i < n; ++i) {
                if (corr) p.correlated_set.push_back(p.rates.size());
                p.rates.push_back(grp["rate_hz"].get<double>());
            }
        }
    } else if (j.contains("rates_hz")) {
        for (const auto& r : j["rates_hz"]) {
            if (!r.is_number()) throw ValidationError("rates_hz", "expected numbers");
            p.rates.push_back(r.get<double>());
        }
        if (j.contains("correlated_channels"))
            for (const auto& c : j["correlated_channels"]) p.correlated_set.push_back(count(c, "correlated_channels"));
    } else {
        throw ValidationError("groups", "either groups or rates_hz is required");
    }
    p.weights.assign(p.rates.size(), weight);

    if (j.contains("sweep")) {
        const auto& s = j["sweep"];
        if (!s.is_object()) throw ValidationError("sweep", "expected an object");
        if (s.contains("channel")) job.sweep_channel = count(s["channel"], "sweep.channel");
        if (s.contains("points")) job.sweep_points = count(s["points"], "sweep.points");
        if (s.contains("max_rate_hz")) {
            if (!s["max_rate_hz"].is_number()) throw ValidationError("sweep.max_rate_hz", "expected a number");
            job.sweep_max_rate = s["max_rate_hz"].get<double>();
        }
    }
    try {
        p.validate();
    } catch (const Error& e) {
        throw ValidationError("<root>", e.what());
    }
    if (job.sweep_channel >= p.rates.size()) throw ValidationError("sweep.channel", "channel out of range");
    if (job.sweep_points < 2) throw ValidationError("sweep.points", "need at least 2 points");
    return job;
}

int cmd_theory(const GlobalOptions& g, std::ostream& log) {
    if (!g.config) throw ValidationError("--config", "required");
    auto job = parse_theory_job(read_json(*g.config));
    if (g.seed) job.params.seed = *g.seed;
    const fs::path out = g.out_dir ? *g.out_dir : fs::path(".");

    const auto verdicts = theory_verdicts(job.params);
    const auto rows = rate_sweep(job.params, job.sweep_channel, job.sweep_points, job.sweep_max_rate);

    auto csv = open_out(out / "theory_sweep.csv");
    csv << "rate_hz,mode,q,p,causal_P\n";
    std::map<PlasticityMode, std::vector<double>> curves;
    for (const auto& r : rows) {
        csv << r.rate << ',' << to_string(r.mode) << ',' << r.q << ',' << r.p << ',' << r.causal << '\n';
        curves[r.mode].push_back(r.causal);
    }
    csv.close();

    ordered_json shapes;
    for (auto mode : {PlasticityMode::stdp, PlasticityMode::fstdp})
        shapes[std::string(to_string(mode))] = std::string(to_string(classify_curve(curves[mode])));

    ordered_json report;
    report["verdicts"] = verdicts;
    report["sweep"] = {{"channel", job.sweep_channel}, {"points", job.sweep_points}, {"file", "theory_sweep.csv"},
                       {"causal_shape", shapes}};
    write_json(out / "theory.json", report);

    if (!g.quiet) {
        for (auto mode : {PlasticityMode::stdp, PlasticityMode::fstdp}) {
            const auto& v = verdicts[std::string(to_string(mode))];
            log << to_string(mode) << ": ratio=" << v["ratio"].get<double>()
                << " learns=" << (v["learns"].get<bool>() ? "true" : "false")
                << " sweep=" << shapes[std::string(to_string(mode))].get<std::string>() << '\n';
        }
    }
    return kExitOk;
}

int cmd_ingest(const GlobalOptions& g, const IngestOptions& opt, std::ostream& log) {
    if (!(opt.threshold >= 0.0)) throw ValidationError("--threshold", "must be non-negative");
    const auto loaded = load_event_csv(opt.csv);
    const auto& table = loaded.table;
    const auto raster = binarize_hourly(table, opt.threshold);
    const fs::path out = g.out_dir ? *g.out_dir : fs::path(".");
    write_raster_csv(out / "raster.csv", raster);

    {
        auto st = open_out(out / "stations.csv");
        st << "channel,station,lat,lon,missing_hours,events\n";
        for (std::size_t i = 0; i < table.n_stations(); ++i) {
            st << i << ',' << table.ids[i] << ',';
            if (table.coords[i]) st << table.coords[i]->first << ',' << table.coords[i]->second;
            else st << ',';
            st << ',' << loaded.missing_hours[i] << ',' << raster.count(i) << '\n';
        }
    }

    if (opt.clusters) {
        const auto km = cluster_stations(station_features(raster), *opt.clusters, g.seed.value_or(1));
        auto cl = open_out(out / "clusters.csv");
        cl << "channel,station,cluster\n";
        for (std::size_t i = 0; i < table.n_stations(); ++i)
            cl << i << ',' << table.ids[i] << ',' << km.labels[i] << '\n';
        if (!g.quiet)
            log << "k-means: " << km.iterations << " iterations, inertia " << km.inertia_history.back() << '\n';
    }
    if (!g.quiet)
        log << "ingested " << table.n_stations() << " stations x " << table.n_hours << " hours from hour "
            << table.first_hour << "; " << raster.total_events() << " events above " << opt.threshold << '\n';
    return kExitOk;
}

}  // namespace fstdp
