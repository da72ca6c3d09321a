#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jcas/detect.hpp"
#include "jcas/noise.hpp"
#include "jcas/precoding.hpp"
#include "jcas/rng.hpp"
#include "jcas/scene.hpp"
#include "jcas/synthesis.hpp"

namespace jcas {

enum class SweepAxis { none, snr_db, scnr_db, alpha, delta, gamma, rx_antennas, pfa };

/// Correct-detection counting rule under H1: exact K_hat == K, or K_hat >= K.
enum class DetectionMetric { exact, at_least };

struct DetectorSetup {
    DetectorConfig config;
    /// Ratio detectors with calibrate=true get epsilon from an H0 run at
    /// config.target_pfa; others use config.epsilon as given.
    bool calibrate = true;
};

/// Full description of one Monte Carlo experiment. Scene cluster powers and
/// the snr/scnr operating point are per-receive-antenna referenced: the
/// resolver scales path-gain variances by rx_antennas so that "power p"
/// means p per antenna relative to the noise floor.
struct ExperimentConfig {
    Scene scene;
    NoiseModel noise;
    BeamformingPlan plan;
    std::vector<DetectorSetup> detectors;
    std::optional<double> snr_db;
    std::optional<double> scnr_db;
    int trials = 1000;
    int calibration_trials = 10000;
    std::uint64_t master_seed = 1;
    SweepAxis sweep_axis = SweepAxis::none;
    std::vector<double> sweep_values;
    DetectionMetric metric = DetectionMetric::exact;
    int threads = 0; // 0 = hardware concurrency
};

std::string to_string(SweepAxis axis);
SweepAxis sweep_axis_from_string(const std::string& name);
std::string to_string(BeamformingMode mode);
BeamformingMode mode_from_string(const std::string& name);

/// Target gain variance realizing the requested per-antenna SNR at the
/// beam-aligned operating point: snr_lin * rx_antennas * noise_var / P_s.
double snr_to_gain_variance(double snr_db, double noise_variance, double sensing_power,
                            int rx_antennas);

/// SCNR bookkeeping: P_s / (noise_var + max cluster power).
double scnr(double sensing_power, double noise_variance,
            const std::vector<double>& clutter_powers);

/// Gain variance realizing the requested per-antenna SCNR:
/// scnr_lin * rx_antennas * (noise_var + max cluster power) / P_s.
double scnr_to_gain_variance(double scnr_db, double noise_variance, double sensing_power,
                             int rx_antennas, const std::vector<double>& clutter_powers);

/// Hard validation (throws config_error) plus soft warnings for the
/// asymptotic-regime assumptions (K vs N, N/T_s, M/N, cluster point counts).
std::vector<std::string> validate_config(const ExperimentConfig& cfg);

/// Config with derived quantities fixed: gain variances from the operating
/// point, cluster powers scaled into path-gain units, the slot schedule, and
/// the quenched clutter environment (drawn once per master seed).
struct ResolvedExperiment {
    ExperimentConfig config;
    Scene scene;
    Schedule schedule;
    Eigen::VectorXcd clutter_gains;
    int observed_slots = 0;
};

ResolvedExperiment resolve(const ExperimentConfig& cfg);

enum class Hypothesis { null_h0, alt_h1 };

/// One trial's received batch. Streams depend only on (seed, set, trial), so
/// repeated calls are bit-identical and pools are disjoint.
ObservationBatch simulate_observation(const ResolvedExperiment& rx, Hypothesis hyp,
                                      TrialSet set, int trial);

/// Per-trial detector sufficient statistics: the consecutive eigenvalue
/// ratios (threshold applied later) and the MDL/AIC counts.
struct TrialStats {
    std::vector<double> ratios;
    int mdl_count = 0;
    int aic_count = 0;

    int ratio_argmax() const; // 1-based, ties toward smaller index
    double max_ratio() const;
};

std::vector<TrialStats> simulate_trials(const ResolvedExperiment& rx, Hypothesis hyp,
                                        TrialSet set, int trials);

/// K_hat of the ratio detector at threshold epsilon, from stored ratios.
int ratio_count_from_stats(const TrialStats& stats, double epsilon, RatioRule rule);

/// Calibrated epsilon for the H0 version of the config (targets removed,
/// beams and clutter unchanged) at the given false-alarm target.
double calibrate_threshold(const ExperimentConfig& cfg, int trials, double target_pfa);

struct DetectorOutcome {
    DetectorMethod method = DetectorMethod::ratio;
    double epsilon = 0.0; // NaN for mdl/aic
    long detections = 0;
    long false_alarms = 0;
    int trials = 0;

    double detection_rate() const { return trials ? double(detections) / trials : 0.0; }
    double false_alarm_rate() const { return trials ? double(false_alarms) / trials : 0.0; }
};

/// Calibrate (where requested), then evaluate H0 and H1 pools and tally
/// correct detections and false alarms per detector.
std::vector<DetectorOutcome> run_trials(const ExperimentConfig& cfg);

struct RocPoint {
    double target_pfa = 0.0;
    double epsilon = 0.0;
    double detection_rate = 0.0;
    double false_alarm_rate = 0.0;
    int trials = 0;
    DetectorMethod detector = DetectorMethod::ratio;
    BeamformingMode mode = BeamformingMode::tdm;
};

/// Ratio-detector ROC: one calibration pool, thresholds swept over stored
/// statistics; fresh H0/H1 pools evaluated at each grid point.
std::vector<RocPoint> roc_curve(const ExperimentConfig& cfg, const std::vector<double>& pfa_grid);

struct SweepRow {
    std::string detector;
    std::string mode;
    std::string axis;
    double value = 0.0;
    double detection_rate = 0.0;
    double false_alarm_rate = 0.0;
    int trials = 0;
    double epsilon = 0.0;
};

/// Evaluates run_trials per sweep value (or once for SweepAxis::none) and
/// emits tidy rows. snr/scnr sweeps reuse one calibration since the H0 law
/// does not depend on the operating point; pfa sweeps reuse one trial pool.
std::vector<SweepRow> sweep(const ExperimentConfig& cfg);

} // namespace jcas
