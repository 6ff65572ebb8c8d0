#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fstdp/commands.hpp"

int main(int argc, char** argv) {
    using namespace fstdp;

    CLI::App app{"Spiking-neuron correlation detection with fatigue-modulated STDP"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    std::string config, out_dir, mode;
    std::uint64_t seed = 0;
    app.add_option("--config", config, "Experiment config (theory: parameter file)");
    app.add_option("--out-dir", out_dir, "Output directory");
    auto* seed_opt = app.add_option("--seed", seed, "Seed override");
    app.add_option("--mode", mode, "Plasticity mode override")->check(CLI::IsMember({"stdp", "fstdp"}));
    app.add_flag("--quiet", g.quiet, "Suppress progress output");

    auto* generate = app.add_subcommand("generate", "Generate the configured raster and labels");

    RunFanout fan;
    std::size_t runs = 0;
    auto* run = app.add_subcommand("run", "Simulate a configured experiment and write its report");
    auto* runs_opt = run->add_option("--runs", runs, "Number of independent runs")->check(CLI::PositiveNumber);
    run->add_option("--seeds", fan.seeds, "Seeds for the runs")->delimiter(',');

    AnalyzeOptions an;
    std::string labels;
    auto* analyze = app.add_subcommand("analyze", "Covariance matrices and per-channel scores of a raster");
    analyze->add_option("--raster", an.raster, "Raster CSV")->required();
    analyze->add_option("--labels", labels, "Labels CSV");
    analyze->add_flag("--normcov", an.normcov, "Emit the normalized covariance matrix");
    analyze->add_flag("--uncov", an.uncov, "Emit the uncentered covariance matrix");
    analyze->add_flag("--scores", an.scores, "Emit per-channel scores");

    auto* theory = app.add_subcommand("theory", "Learning-condition verdicts and rate sweep");

    IngestOptions ing;
    std::size_t clusters = 0;
    auto* ingest = app.add_subcommand("ingest", "Binarize an hourly station CSV into a raster");
    ingest->add_option("--csv", ing.csv, "Input CSV (station,hour,value[,lat,lon])")->required();
    ingest->add_option("--threshold", ing.threshold, "Event threshold (value > threshold)");
    auto* clusters_opt = ingest->add_option("--clusters", clusters, "k-means cluster count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (!config.empty()) g.config = config;
        if (!out_dir.empty()) g.out_dir = out_dir;
        if (seed_opt->count()) g.seed = seed;
        if (!mode.empty()) g.mode = parse_mode(mode);
        if (runs_opt->count()) fan.runs = runs;
        if (!labels.empty()) an.labels = labels;
        if (clusters_opt->count()) ing.clusters = clusters;

        if (generate->parsed()) return cmd_generate(g, std::cout);
        if (run->parsed()) return cmd_run(g, fan, std::cout);
        if (analyze->parsed()) return cmd_analyze(g, an, std::cout);
        if (theory->parsed()) return cmd_theory(g, std::cout);
        if (ingest->parsed()) return cmd_ingest(g, ing, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
    return kExitRuntime;
}
