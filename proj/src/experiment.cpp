#include "jcas/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>

#include "jcas/errors.hpp"

namespace jcas {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::clamp(threads, 1, std::max(1, n));
    if (threads == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

const DetectorSetup* find_detector(const ExperimentConfig& cfg, DetectorMethod method) {
    for (const auto& d : cfg.detectors) {
        if (d.config.method == method) return &d;
    }
    return nullptr;
}

} // namespace

std::string to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::none: return "none";
        case SweepAxis::snr_db: return "snr_db";
        case SweepAxis::scnr_db: return "scnr_db";
        case SweepAxis::alpha: return "alpha";
        case SweepAxis::delta: return "delta";
        case SweepAxis::gamma: return "gamma";
        case SweepAxis::rx_antennas: return "rx_antennas";
        case SweepAxis::pfa: return "pfa";
    }
    return "none";
}

SweepAxis sweep_axis_from_string(const std::string& name) {
    if (name == "none") return SweepAxis::none;
    if (name == "snr_db") return SweepAxis::snr_db;
    if (name == "scnr_db") return SweepAxis::scnr_db;
    if (name == "alpha") return SweepAxis::alpha;
    if (name == "delta") return SweepAxis::delta;
    if (name == "gamma") return SweepAxis::gamma;
    if (name == "rx_antennas") return SweepAxis::rx_antennas;
    if (name == "pfa") return SweepAxis::pfa;
    throw config_error("unknown sweep axis: " + name);
}

std::string to_string(BeamformingMode mode) {
    return mode == BeamformingMode::tdm ? "tdm" : "cm";
}

BeamformingMode mode_from_string(const std::string& name) {
    if (name == "tdm") return BeamformingMode::tdm;
    if (name == "cm") return BeamformingMode::cm;
    throw config_error("unknown beamforming mode: " + name);
}

double snr_to_gain_variance(double snr_db, double noise_variance, double sensing_power,
                            int rx_antennas) {
    if (sensing_power <= 0.0) throw config_error("snr_to_gain_variance: P_s must be positive");
    return std::pow(10.0, snr_db / 10.0) * rx_antennas * noise_variance / sensing_power;
}

double scnr(double sensing_power, double noise_variance,
            const std::vector<double>& clutter_powers) {
    double max_cl = 0.0;
    for (double p : clutter_powers) max_cl = std::max(max_cl, p);
    return sensing_power / (noise_variance + max_cl);
}

double scnr_to_gain_variance(double scnr_db, double noise_variance, double sensing_power,
                             int rx_antennas, const std::vector<double>& clutter_powers) {
    if (sensing_power <= 0.0) throw config_error("scnr_to_gain_variance: P_s must be positive");
    double max_cl = 0.0;
    for (double p : clutter_powers) max_cl = std::max(max_cl, p);
    return std::pow(10.0, scnr_db / 10.0) * rx_antennas * (noise_variance + max_cl) /
           sensing_power;
}

std::vector<std::string> validate_config(const ExperimentConfig& cfg) {
    cfg.scene.validate();
    cfg.noise.validate();
    if (cfg.trials < 1) throw config_error("config: trials must be positive");
    if (cfg.calibration_trials < 1) throw config_error("config: calibration_trials must be positive");
    if (cfg.detectors.empty()) throw config_error("config: no detectors configured");
    if (cfg.snr_db && cfg.scnr_db) {
        throw config_error("config: snr_db and scnr_db are mutually exclusive");
    }
    int ratio_count = 0, mdl_count = 0, aic_count = 0;
    for (const auto& d : cfg.detectors) {
        if (d.config.k_max < 1) throw config_error("config: detector k_max must be positive");
        if (d.config.k_max >= cfg.scene.rx_antennas) {
            throw config_error("config: detector k_max must be smaller than rx_antennas");
        }
        if (d.config.epsilon < 0.0) throw config_error("config: detector epsilon must be nonnegative");
        if (d.config.target_pfa <= 0.0 || d.config.target_pfa >= 1.0) {
            throw config_error("config: detector target_pfa must lie in (0,1)");
        }
        switch (d.config.method) {
            case DetectorMethod::ratio: ++ratio_count; break;
            case DetectorMethod::mdl: ++mdl_count; break;
            case DetectorMethod::aic: ++aic_count; break;
        }
    }
    if (ratio_count > 1 || mdl_count > 1 || aic_count > 1) {
        throw config_error("config: at most one detector per method");
    }
    if (cfg.sweep_axis != SweepAxis::none && cfg.sweep_values.empty()) {
        throw config_error("config: sweep axis set but no sweep values");
    }
    for (double v : cfg.sweep_values) {
        if (!std::isfinite(v)) throw config_error("config: sweep values must be finite");
        switch (cfg.sweep_axis) {
            case SweepAxis::alpha:
            case SweepAxis::delta:
                if (v < 0.0 || v > 1.0) throw config_error("config: sweep value outside [0,1]");
                break;
            case SweepAxis::gamma:
                if (std::abs(v) >= 1.0) throw config_error("config: sweep gamma outside (-1,1)");
                break;
            case SweepAxis::rx_antennas:
                if (v < 1.0 || v != std::floor(v)) {
                    throw config_error("config: rx_antennas sweep values must be positive integers");
                }
                break;
            case SweepAxis::pfa:
                if (v <= 0.0 || v >= 1.0) throw config_error("config: sweep pfa outside (0,1)");
                break;
            default: break;
        }
    }

    // Soft warnings for the asymptotic-regime assumptions.
    std::vector<std::string> warnings;
    const int n = cfg.scene.rx_antennas;
    const int m = cfg.scene.tx_antennas;
    const int k = cfg.scene.num_targets();
    if (k > 0 && 4 * k >= n) {
        warnings.push_back("target count K is not small against rx_antennas (K >= N/4); "
                           "the fixed-rank-perturbation regime may not apply");
    }
    const double ratio_mn = static_cast<double>(m) / n;
    if (ratio_mn < 0.1 || ratio_mn > 10.0) {
        warnings.push_back("tx/rx antenna ratio M/N is extreme (<0.1 or >10)");
    }
    // N/T_s uses the schedule's observation window when constructible.
    if (!cfg.plan.sensing_aods.empty() || !cfg.scene.targets.empty()) {
        BeamformingPlan plan = cfg.plan;
        if (plan.sensing_aods.empty()) {
            for (const auto& t : cfg.scene.targets) plan.sensing_aods.push_back(t.aod);
        }
        const Schedule schedule = slot_schedule(plan);
        const int t_obs = schedule.sensing_slots() > 0 ? schedule.sensing_slots()
                                                       : schedule.total_slots();
        const double ratio_nt = static_cast<double>(n) / t_obs;
        if (ratio_nt < 0.1 || ratio_nt > 10.0) {
            warnings.push_back("N/T_s is extreme (<0.1 or >10)");
        }
    }
    for (const auto& c : cfg.scene.clutter) {
        if (8 * c.num_points < n) {
            warnings.push_back("a clutter cluster has fewer than N/8 points; its covariance "
                               "bulk assumption breaks and points may be detected as targets");
            break;
        }
    }
    return warnings;
}

ResolvedExperiment resolve(const ExperimentConfig& cfg) {
    validate_config(cfg);
    ResolvedExperiment rx;
    rx.config = cfg;
    rx.scene = cfg.scene;

    // Default sensing beams to the true target directions.
    if (rx.config.plan.sensing_aods.empty()) {
        for (const auto& t : rx.scene.targets) rx.config.plan.sensing_aods.push_back(t.aod);
    }
    if (rx.config.plan.sensing_aods.empty()) {
        throw config_error("config: no sensing beams and no targets to derive them from");
    }

    // Operating point -> target gain variances (per-antenna referenced).
    std::vector<double> clutter_powers;
    for (const auto& c : rx.scene.clutter) clutter_powers.push_back(c.power);
    if (cfg.snr_db) {
        const double g = snr_to_gain_variance(*cfg.snr_db, cfg.noise.variance,
                                              cfg.plan.sensing_power, rx.scene.rx_antennas);
        for (auto& t : rx.scene.targets) t.gain_variance = g;
    } else if (cfg.scnr_db) {
        const double g = scnr_to_gain_variance(*cfg.scnr_db, cfg.noise.variance,
                                               cfg.plan.sensing_power, rx.scene.rx_antennas,
                                               clutter_powers);
        for (auto& t : rx.scene.targets) t.gain_variance = g;
    }

    // Cluster powers into path-gain units (config units are per-antenna).
    for (auto& c : rx.scene.clutter) c.power *= rx.scene.rx_antennas;

    rx.schedule = slot_schedule(rx.config.plan);
    rx.observed_slots = static_cast<int>(rx.schedule.observation_slots().size());

    const int n = rx.scene.rx_antennas;
    for (const auto& d : cfg.detectors) {
        const bool needs_full_rank = d.config.method != DetectorMethod::ratio;
        const int min_window = needs_full_rank ? n : d.config.k_max + 1;
        if (rx.observed_slots < min_window) {
            throw config_error("config: observation window too short for detector " +
                               to_string(d.config.method));
        }
    }

    // Static clutter environment, one draw per master seed.
    auto env_rng = make_environment_stream(cfg.master_seed);
    rx.clutter_gains = draw_clutter_gains(rx.scene, env_rng);
    return rx;
}

ObservationBatch simulate_observation(const ResolvedExperiment& rx, Hypothesis hyp,
                                      TrialSet set, int trial) {
    const auto seed = rx.config.master_seed;
    const Scene& scene = rx.scene;
    const int t_obs = rx.observed_slots;

    auto symbol_rng = make_stream(seed, set, DrawPurpose::tx_symbols, trial);
    Eigen::MatrixXcd x = synthesize_tx(rx.config.plan, rx.schedule, scene.tx_antennas, symbol_rng);

    Eigen::MatrixXcd y;
    auto noise_rng = make_stream(seed, set, DrawPurpose::noise, trial);
    y = generate_noise(rx.config.noise, scene.rx_antennas, t_obs, noise_rng);

    if (hyp == Hypothesis::alt_h1 && scene.num_targets() > 0) {
        auto gain_rng = make_stream(seed, set, DrawPurpose::target_gains, trial);
        const Eigen::VectorXcd gains = draw_target_gains(scene, gain_rng);
        y.noalias() += target_channel(scene, gains) * x;
    }
    if (scene.num_clutter_points() > 0) {
        auto clutter_rng = make_stream(seed, set, DrawPurpose::clutter_tx, trial);
        const Eigen::MatrixXcd x_cl =
            synthesize_clutter_tx(1.0, scene.clutter_tx(), t_obs, clutter_rng);
        y.noalias() += clutter_channel(scene, rx.clutter_gains) * x_cl;
    }
    return make_observation(std::move(y));
}

int TrialStats::ratio_argmax() const {
    int best = 0;
    for (std::size_t n = 1; n < ratios.size(); ++n) {
        if (ratios[n] > ratios[best]) best = static_cast<int>(n);
    }
    return best + 1;
}

double TrialStats::max_ratio() const { return ratios[ratio_argmax() - 1]; }

namespace {

struct StatPlan {
    int ratio_k_max = 0; // 0 = ratio detector absent
    int mdl_k_max = 0;
    int aic_k_max = 0;
};

StatPlan stat_plan(const ExperimentConfig& cfg) {
    StatPlan plan;
    if (const auto* d = find_detector(cfg, DetectorMethod::ratio)) plan.ratio_k_max = d->config.k_max;
    if (const auto* d = find_detector(cfg, DetectorMethod::mdl)) plan.mdl_k_max = d->config.k_max;
    if (const auto* d = find_detector(cfg, DetectorMethod::aic)) plan.aic_k_max = d->config.k_max;
    if (plan.ratio_k_max == 0) {
        // Calibration statistics still need ratios even without a ratio detector.
        plan.ratio_k_max = std::min(4, cfg.scene.rx_antennas - 1);
    }
    return plan;
}

TrialStats stats_from_eigenvalues(const Eigen::VectorXd& eigenvalues, const StatPlan& plan,
                                  int num_samples) {
    TrialStats stats;
    DetectorConfig ratio_cfg;
    ratio_cfg.k_max = plan.ratio_k_max;
    stats.ratios = ratio_test(eigenvalues, ratio_cfg).ratios;
    if (plan.mdl_k_max > 0) stats.mdl_count = mdl_estimate(eigenvalues, num_samples, plan.mdl_k_max);
    if (plan.aic_k_max > 0) stats.aic_count = aic_estimate(eigenvalues, num_samples, plan.aic_k_max);
    return stats;
}

} // namespace

std::vector<TrialStats> simulate_trials(const ResolvedExperiment& rx, Hypothesis hyp,
                                        TrialSet set, int trials) {
    const StatPlan plan = stat_plan(rx.config);
    std::vector<TrialStats> stats(trials);
    parallel_for(trials, rx.config.threads, [&](int i) {
        const ObservationBatch batch = simulate_observation(rx, hyp, set, i);
        stats[i] = stats_from_eigenvalues(batch.eigenvalues, plan, rx.observed_slots);
    });
    return stats;
}

int ratio_count_from_stats(const TrialStats& stats, double epsilon, RatioRule rule) {
    if (rule == RatioRule::last_exceeding) {
        for (int n = static_cast<int>(stats.ratios.size()) - 1; n >= 0; --n) {
            if (stats.ratios[n] > 1.0 + epsilon) return n + 1;
        }
        return 0;
    }
    const int argmax = stats.ratio_argmax();
    return stats.ratios[argmax - 1] > 1.0 + epsilon ? argmax : 0;
}

namespace {

std::vector<double> max_ratios(const std::vector<TrialStats>& stats) {
    std::vector<double> out;
    out.reserve(stats.size());
    for (const auto& s : stats) out.push_back(s.max_ratio());
    return out;
}

bool counts_as_detection(int k_hat, int k_true, DetectionMetric metric) {
    return metric == DetectionMetric::exact ? k_hat == k_true : k_hat >= k_true;
}

struct EvaluatedPools {
    std::vector<TrialStats> calibration; // may be empty
    std::vector<TrialStats> h0;
    std::vector<TrialStats> h1;
};

EvaluatedPools evaluate_pools(const ResolvedExperiment& rx, bool need_calibration) {
    EvaluatedPools pools;
    if (need_calibration) {
        pools.calibration = simulate_trials(rx, Hypothesis::null_h0, TrialSet::calibration,
                                            rx.config.calibration_trials);
    }
    pools.h0 = simulate_trials(rx, Hypothesis::null_h0, TrialSet::null_eval, rx.config.trials);
    pools.h1 = simulate_trials(rx, Hypothesis::alt_h1, TrialSet::alt_eval, rx.config.trials);
    return pools;
}

DetectorOutcome tally_ratio(const ExperimentConfig& cfg, const std::vector<TrialStats>& h0,
                            const std::vector<TrialStats>& h1, const DetectorConfig& det,
                            double epsilon) {
    DetectorOutcome out;
    out.method = DetectorMethod::ratio;
    out.epsilon = epsilon;
    out.trials = static_cast<int>(h1.size());
    const int k_true = cfg.scene.num_targets();
    for (const auto& s : h1) {
        const int k_hat = ratio_count_from_stats(s, epsilon, det.rule);
        out.detections += counts_as_detection(k_hat, k_true, cfg.metric);
    }
    for (const auto& s : h0) {
        out.false_alarms += ratio_count_from_stats(s, epsilon, det.rule) > 0;
    }
    return out;
}

DetectorOutcome tally_info_criterion(const ExperimentConfig& cfg,
                                     const std::vector<TrialStats>& h0,
                                     const std::vector<TrialStats>& h1, DetectorMethod method) {
    DetectorOutcome out;
    out.method = method;
    out.epsilon = kNaN;
    out.trials = static_cast<int>(h1.size());
    const int k_true = cfg.scene.num_targets();
    auto count_of = [&](const TrialStats& s) {
        return method == DetectorMethod::mdl ? s.mdl_count : s.aic_count;
    };
    for (const auto& s : h1) out.detections += counts_as_detection(count_of(s), k_true, cfg.metric);
    for (const auto& s : h0) out.false_alarms += count_of(s) > 0;
    return out;
}

std::vector<DetectorOutcome> tally_all(const ExperimentConfig& cfg, const EvaluatedPools& pools,
                                       double ratio_epsilon) {
    std::vector<DetectorOutcome> outcomes;
    for (const auto& d : cfg.detectors) {
        switch (d.config.method) {
            case DetectorMethod::ratio:
                outcomes.push_back(tally_ratio(cfg, pools.h0, pools.h1, d.config, ratio_epsilon));
                break;
            case DetectorMethod::mdl:
            case DetectorMethod::aic:
                outcomes.push_back(tally_info_criterion(cfg, pools.h0, pools.h1, d.config.method));
                break;
        }
    }
    return outcomes;
}

/// Epsilon for the config's ratio detector: calibrated when requested,
/// otherwise the configured value. NaN when no ratio detector exists.
double resolve_ratio_epsilon(const ResolvedExperiment& rx, const EvaluatedPools& pools) {
    const auto* det = find_detector(rx.config, DetectorMethod::ratio);
    if (!det) return kNaN;
    if (!det->calibrate) return det->config.epsilon;
    return calibrate_epsilon(max_ratios(pools.calibration), det->config.target_pfa);
}

bool wants_calibration(const ExperimentConfig& cfg) {
    const auto* det = find_detector(cfg, DetectorMethod::ratio);
    return det && det->calibrate;
}

} // namespace

double calibrate_threshold(const ExperimentConfig& cfg, int trials, double target_pfa) {
    ResolvedExperiment rx = resolve(cfg);
    rx.config.calibration_trials = trials;
    const auto stats =
        simulate_trials(rx, Hypothesis::null_h0, TrialSet::calibration, trials);
    return calibrate_epsilon(max_ratios(stats), target_pfa);
}

std::vector<DetectorOutcome> run_trials(const ExperimentConfig& cfg) {
    const ResolvedExperiment rx = resolve(cfg);
    const EvaluatedPools pools = evaluate_pools(rx, wants_calibration(cfg));
    const double epsilon = resolve_ratio_epsilon(rx, pools);
    return tally_all(cfg, pools, epsilon);
}

std::vector<RocPoint> roc_curve(const ExperimentConfig& cfg, const std::vector<double>& pfa_grid) {
    if (pfa_grid.empty()) throw config_error("roc_curve: empty pfa grid");
    if (!std::is_sorted(pfa_grid.begin(), pfa_grid.end())) {
        throw config_error("roc_curve: pfa grid must be sorted ascending");
    }
    for (double p : pfa_grid) {
        if (p <= 0.0 || p >= 1.0) throw config_error("roc_curve: pfa values must lie in (0,1)");
    }
    const auto* det = find_detector(cfg, DetectorMethod::ratio);
    if (!det) throw config_error("roc_curve: config has no ratio detector");

    const ResolvedExperiment rx = resolve(cfg);
    const EvaluatedPools pools = evaluate_pools(rx, true);
    const auto cal_stats = max_ratios(pools.calibration);

    std::vector<RocPoint> points;
    points.reserve(pfa_grid.size());
    const int k_true = cfg.scene.num_targets();
    for (double pfa : pfa_grid) {
        RocPoint point;
        point.target_pfa = pfa;
        point.epsilon = calibrate_epsilon(cal_stats, pfa);
        point.detector = DetectorMethod::ratio;
        point.mode = cfg.plan.mode;
        point.trials = cfg.trials;
        long det_count = 0, fa_count = 0;
        for (const auto& s : pools.h1) {
            const int k_hat = ratio_count_from_stats(s, point.epsilon, det->config.rule);
            det_count += counts_as_detection(k_hat, k_true, cfg.metric);
        }
        for (const auto& s : pools.h0) {
            fa_count += ratio_count_from_stats(s, point.epsilon, det->config.rule) > 0;
        }
        point.detection_rate = static_cast<double>(det_count) / cfg.trials;
        point.false_alarm_rate = static_cast<double>(fa_count) / cfg.trials;
        points.push_back(point);
    }
    return points;
}

namespace {

ExperimentConfig with_axis_value(const ExperimentConfig& base, SweepAxis axis, double value) {
    ExperimentConfig cfg = base;
    cfg.sweep_axis = SweepAxis::none;
    cfg.sweep_values.clear();
    switch (axis) {
        case SweepAxis::snr_db:
            cfg.snr_db = value;
            cfg.scnr_db.reset();
            break;
        case SweepAxis::scnr_db:
            cfg.scnr_db = value;
            cfg.snr_db.reset();
            break;
        case SweepAxis::alpha: cfg.plan.alpha = value; break;
        case SweepAxis::delta: cfg.plan.delta = value; break;
        case SweepAxis::gamma: cfg.noise.gamma = value; break;
        case SweepAxis::rx_antennas: cfg.scene.rx_antennas = static_cast<int>(value); break;
        default: throw config_error("sweep: unsupported axis");
    }
    return cfg;
}

std::vector<SweepRow> rows_from_outcomes(const ExperimentConfig& cfg,
                                         const std::vector<DetectorOutcome>& outcomes,
                                         SweepAxis axis, double value) {
    std::vector<SweepRow> rows;
    for (const auto& o : outcomes) {
        SweepRow row;
        row.detector = to_string(o.method);
        row.mode = to_string(cfg.plan.mode);
        row.axis = to_string(axis);
        row.value = value;
        row.detection_rate = o.detection_rate();
        row.false_alarm_rate = o.false_alarm_rate();
        row.trials = o.trials;
        row.epsilon = o.epsilon;
        rows.push_back(std::move(row));
    }
    return rows;
}

/// snr/scnr sweeps: the H0 law is independent of the target operating point,
/// so calibration and the H0 pool are computed once and reused.
std::vector<SweepRow> sweep_operating_point(const ExperimentConfig& cfg) {
    std::vector<SweepRow> rows;
    std::optional<double> shared_epsilon;
    std::vector<TrialStats> shared_h0;
    bool have_shared = false;
    for (double value : cfg.sweep_values) {
        const ExperimentConfig point_cfg = with_axis_value(cfg, cfg.sweep_axis, value);
        const ResolvedExperiment rx = resolve(point_cfg);
        if (!have_shared) {
            EvaluatedPools pools = evaluate_pools(rx, wants_calibration(point_cfg));
            shared_epsilon = resolve_ratio_epsilon(rx, pools);
            shared_h0 = std::move(pools.h0);
            have_shared = true;
        }
        EvaluatedPools pools;
        pools.h0 = shared_h0;
        pools.h1 = simulate_trials(rx, Hypothesis::alt_h1, TrialSet::alt_eval, point_cfg.trials);
        const auto outcomes = tally_all(point_cfg, pools, *shared_epsilon);
        auto new_rows = rows_from_outcomes(point_cfg, outcomes, cfg.sweep_axis, value);
        rows.insert(rows.end(), new_rows.begin(), new_rows.end());
    }
    return rows;
}

std::vector<SweepRow> sweep_pfa(const ExperimentConfig& cfg) {
    std::vector<double> grid = cfg.sweep_values;
    std::sort(grid.begin(), grid.end());
    const ResolvedExperiment rx = resolve(cfg);
    const EvaluatedPools pools = evaluate_pools(rx, true);
    const auto cal_stats = max_ratios(pools.calibration);

    std::vector<SweepRow> rows;
    for (double pfa : grid) {
        std::vector<DetectorOutcome> outcomes;
        for (const auto& d : cfg.detectors) {
            if (d.config.method == DetectorMethod::ratio) {
                const double eps = calibrate_epsilon(cal_stats, pfa);
                outcomes.push_back(tally_ratio(cfg, pools.h0, pools.h1, d.config, eps));
            } else {
                outcomes.push_back(tally_info_criterion(cfg, pools.h0, pools.h1, d.config.method));
            }
        }
        auto new_rows = rows_from_outcomes(cfg, outcomes, SweepAxis::pfa, pfa);
        rows.insert(rows.end(), new_rows.begin(), new_rows.end());
    }
    return rows;
}

} // namespace

std::vector<SweepRow> sweep(const ExperimentConfig& cfg) {
    validate_config(cfg);
    if (cfg.sweep_axis == SweepAxis::none) {
        double value = 0.0;
        SweepAxis axis = SweepAxis::none;
        if (cfg.snr_db) {
            axis = SweepAxis::snr_db;
            value = *cfg.snr_db;
        } else if (cfg.scnr_db) {
            axis = SweepAxis::scnr_db;
            value = *cfg.scnr_db;
        }
        return rows_from_outcomes(cfg, run_trials(cfg), axis, value);
    }
    if (cfg.sweep_axis == SweepAxis::pfa) return sweep_pfa(cfg);
    if (cfg.sweep_axis == SweepAxis::snr_db || cfg.sweep_axis == SweepAxis::scnr_db) {
        return sweep_operating_point(cfg);
    }
    std::vector<SweepRow> rows;
    for (double value : cfg.sweep_values) {
        const ExperimentConfig point_cfg = with_axis_value(cfg, cfg.sweep_axis, value);
        auto new_rows = rows_from_outcomes(point_cfg, run_trials(point_cfg), cfg.sweep_axis, value);
        rows.insert(rows.end(), new_rows.begin(), new_rows.end());
    }
    return rows;
}

} // namespace jcas
