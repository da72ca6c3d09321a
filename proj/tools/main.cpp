#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jcas/config_io.hpp"
#include "jcas/errors.hpp"
#include "jcas/report.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CommonOptions {
    std::string config_path;
    std::string out_dir = "out";
    std::uint64_t seed = 0;
    bool seed_set = false;
    int trials = 0;
    int calibration_trials = 0;
    int threads = -1;
    std::string mode;
    std::string detectors;
    std::string sweep;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("-c,--config", opt.config_path, "experiment config file (JSON)")
        ->required();
    cmd->add_option("-o,--out", opt.out_dir, "output directory");
    cmd->add_option("--seed", opt.seed, "override master seed")->each([&](const std::string&) {
        opt.seed_set = true;
    });
    cmd->add_option("--trials", opt.trials, "override evaluation trials");
    cmd->add_option("--calibration-trials", opt.calibration_trials,
                    "override calibration trials");
    cmd->add_option("--threads", opt.threads, "worker threads (0 = hardware)");
    cmd->add_option("--mode", opt.mode, "override beamforming mode: tdm|cm");
    cmd->add_option("--detectors", opt.detectors,
                    "override detector list, e.g. ratio,mdl,aic");
    cmd->add_option("--sweep", opt.sweep, "override sweep, e.g. snr_db=-10,-6,-2");
}

std::vector<std::string> split(const std::string& s, char delim) {
    std::vector<std::string> parts;
    std::stringstream stream(s);
    std::string item;
    while (std::getline(stream, item, delim)) parts.push_back(item);
    return parts;
}

jcas::ExperimentConfig build_config(const CommonOptions& opt) {
    jcas::ExperimentConfig cfg = jcas::load_config(opt.config_path);
    if (opt.seed_set) cfg.master_seed = opt.seed;
    if (opt.trials > 0) cfg.trials = opt.trials;
    if (opt.calibration_trials > 0) cfg.calibration_trials = opt.calibration_trials;
    if (opt.threads >= 0) cfg.threads = opt.threads;
    if (!opt.mode.empty()) cfg.plan.mode = jcas::mode_from_string(opt.mode);
    if (!opt.detectors.empty()) {
        std::vector<jcas::DetectorSetup> kept;
        for (const auto& name : split(opt.detectors, ',')) {
            bool found = false;
            for (const auto& d : cfg.detectors) {
                if (jcas::to_string(d.config.method) == name) {
                    kept.push_back(d);
                    found = true;
                }
            }
            if (!found) {
                jcas::DetectorSetup setup;
                if (name == "ratio") {
                    setup.config.method = jcas::DetectorMethod::ratio;
                } else if (name == "mdl") {
                    setup.config.method = jcas::DetectorMethod::mdl;
                } else if (name == "aic") {
                    setup.config.method = jcas::DetectorMethod::aic;
                } else {
                    throw jcas::config_error("unknown detector: " + name);
                }
                kept.push_back(setup);
            }
        }
        cfg.detectors = std::move(kept);
    }
    if (!opt.sweep.empty()) {
        const auto eq = opt.sweep.find('=');
        if (eq == std::string::npos) {
            throw jcas::config_error("--sweep expects axis=v1,v2,...");
        }
        cfg.sweep_axis = jcas::sweep_axis_from_string(opt.sweep.substr(0, eq));
        cfg.sweep_values.clear();
        for (const auto& v : split(opt.sweep.substr(eq + 1), ',')) {
            cfg.sweep_values.push_back(std::stod(v));
        }
    }
    return cfg;
}

void write_manifest(const fs::path& path, const jcas::ExperimentConfig& cfg,
                    const std::vector<std::string>& warnings, double wall_seconds,
                    const std::string& command) {
    json manifest;
    manifest["version"] = jcas::kVersion;
    manifest["command"] = command;
    manifest["seed"] = cfg.master_seed;
    manifest["wall_time_seconds"] = wall_seconds;
    manifest["warnings"] = warnings;
    manifest["config"] = jcas::config_to_json(cfg);
    try {
        const jcas::ResolvedExperiment rx = jcas::resolve(cfg);
        json resolved;
        resolved["observed_slots"] = rx.observed_slots;
        resolved["sensing_slots"] = rx.schedule.sensing_slots();
        resolved["comm_slots"] = rx.schedule.comm_slots();
        json gains = json::array();
        for (const auto& t : rx.scene.targets) gains.push_back(t.gain_variance);
        resolved["target_gain_variances"] = gains;
        manifest["resolved"] = resolved;
    } catch (const std::exception&) {
        // Sweep-only configs may not resolve standalone; skip the block.
    }
    std::ofstream out(path);
    out << manifest.dump(2) << '\n';
}

int cmd_run(const CommonOptions& opt, int dump_trials, bool dump_received) {
    const auto start = std::chrono::steady_clock::now();
    jcas::ExperimentConfig cfg = build_config(opt);
    const auto warnings = jcas::validate_config(cfg);
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';

    fs::create_directories(opt.out_dir);
    const auto rows = jcas::sweep(cfg);
    {
        std::ofstream out(fs::path(opt.out_dir) / "results.csv");
        jcas::write_sweep_csv(out, rows);
    }
    if (dump_trials > 0) {
        const jcas::ResolvedExperiment rx = jcas::resolve(cfg);
        const auto hyp = cfg.scene.num_targets() > 0 ? jcas::Hypothesis::alt_h1
                                                     : jcas::Hypothesis::null_h0;
        {
            std::ofstream out(fs::path(opt.out_dir) / "eigenvalues.csv");
            jcas::dump_eigenvalues_csv(out, rx, hyp, jcas::TrialSet::alt_eval, dump_trials);
        }
        if (dump_received) {
            std::ofstream out(fs::path(opt.out_dir) / "received.csv");
            jcas::dump_received_csv(out, rx, hyp, jcas::TrialSet::alt_eval, dump_trials);
        }
    }
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_manifest(fs::path(opt.out_dir) / "manifest.json", cfg, warnings, wall, "run");

    for (const auto& r : rows) {
        std::cout << r.detector << " (" << r.mode << ") " << r.axis << '='
                  << jcas::format_double(r.value)
                  << " detection=" << jcas::format_double(r.detection_rate)
                  << " false_alarm=" << jcas::format_double(r.false_alarm_rate) << '\n';
    }
    return 0;
}

int cmd_calibrate(const CommonOptions& opt, std::vector<double>& pfa_grid) {
    const auto start = std::chrono::steady_clock::now();
    jcas::ExperimentConfig cfg = build_config(opt);
    const auto warnings = jcas::validate_config(cfg);
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    if (pfa_grid.empty()) {
        for (const auto& d : cfg.detectors) {
            if (d.config.method == jcas::DetectorMethod::ratio) {
                pfa_grid.push_back(d.config.target_pfa);
            }
        }
        if (pfa_grid.empty()) pfa_grid.push_back(0.01);
    }

    std::vector<std::pair<double, double>> table;
    for (double pfa : pfa_grid) {
        table.emplace_back(pfa,
                           jcas::calibrate_threshold(cfg, cfg.calibration_trials, pfa));
    }
    fs::create_directories(opt.out_dir);
    {
        std::ofstream out(fs::path(opt.out_dir) / "calibration.csv");
        jcas::write_calibration_csv(out, table, cfg.calibration_trials);
    }
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_manifest(fs::path(opt.out_dir) / "manifest.json", cfg, warnings, wall, "calibrate");

    for (const auto& [pfa, eps] : table) {
        std::cout << "pfa=" << jcas::format_double(pfa)
                  << " epsilon=" << jcas::format_double(eps) << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"JCAS target-detection Monte Carlo simulator"};
    app.require_subcommand(1);

    CommonOptions run_opt;
    int dump_trials = 0;
    bool dump_received = false;
    CLI::App* run = app.add_subcommand("run", "run an experiment and write results.csv");
    add_common(run, run_opt);
    run->add_option("--dump-trials", dump_trials,
                    "also dump per-trial eigenvalues for this many trials");
    run->add_flag("--dump-received", dump_received,
                  "with --dump-trials, also dump the received matrices");

    CommonOptions cal_opt;
    std::vector<double> pfa_grid;
    CLI::App* cal = app.add_subcommand("calibrate", "emit the epsilon table for a config");
    add_common(cal, cal_opt);
    cal->add_option("--pfa", pfa_grid, "false-alarm targets (defaults to the config's)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(run_opt, dump_trials, dump_received);
        if (cal->parsed()) return cmd_calibrate(cal_opt, pfa_grid);
    } catch (const jcas::config_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const jcas::numeric_error& e) {
        std::cerr << "numerical contract violation: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
