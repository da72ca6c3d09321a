#include <doctest.h>

#include <numbers>
#include <sstream>

#include <json.hpp>

#include "jcas/config_io.hpp"
#include "jcas/errors.hpp"
#include "jcas/experiment.hpp"
#include "jcas/report.hpp"

using namespace jcas;

namespace {
constexpr double deg = std::numbers::pi / 180.0;

ExperimentConfig white_config(int n, int t, double snr_db, int num_targets) {
    ExperimentConfig cfg;
    cfg.scene.tx_antennas = 8;
    cfg.scene.rx_antennas = n;
    for (int k = 0; k < num_targets; ++k) {
        cfg.scene.targets.push_back({(70.0 + 50.0 * k) * deg, (60.0 + 50.0 * k) * deg, 1.0});
    }
    cfg.noise = {1.0, 0.0};
    cfg.plan.mode = BeamformingMode::tdm;
    cfg.plan.total_slots = t;
    cfg.plan.alpha = 1.0;
    cfg.plan.ue_aod = 20.0 * deg;
    cfg.detectors.push_back({});
    if (num_targets > 0) cfg.snr_db = snr_db;
    cfg.trials = 500;
    cfg.calibration_trials = 2000;
    cfg.master_seed = 1234;
    return cfg;
}
} // namespace

TEST_CASE("snr to gain variance mapping") {
    // Per-antenna referenced: snr_lin * N * sigma^2 / P_s.
    CHECK(snr_to_gain_variance(0.0, 1.0, 1.0, 16) == doctest::Approx(16.0));
    CHECK(snr_to_gain_variance(-6.0, 1.0, 1.0, 16) == doctest::Approx(0.2512 * 16).epsilon(1e-3));
    // Doubling P_s halves the gain variance.
    CHECK(snr_to_gain_variance(3.0, 1.0, 2.0, 16) ==
          doctest::Approx(0.5 * snr_to_gain_variance(3.0, 1.0, 1.0, 16)));
}

TEST_CASE("scnr bookkeeping follows the definition") {
    CHECK(scnr(1.0, 0.5, {0.5}) == doctest::Approx(1.0));
    CHECK(scnr(2.0, 0.5, {}) == doctest::Approx(4.0));
    CHECK(scnr(1.0, 1.0, {0.5, 0.5}) == doctest::Approx(1.0 / 1.5));
    // The scnr sweep mapping uses the same clutter-inflated floor.
    CHECK(scnr_to_gain_variance(0.0, 1.0, 1.0, 16, {0.5, 0.5}) == doctest::Approx(16.0 * 1.5));
}

TEST_CASE("config validation warnings") {
    auto cfg = white_config(16, 64, 0.0, 1);
    CHECK(validate_config(cfg).empty());

    SUBCASE("many targets vs antennas") {
        auto crowded = white_config(16, 64, 0.0, 4);
        const auto warnings = validate_config(crowded);
        REQUIRE(!warnings.empty());
        CHECK(warnings[0].find("K >= N/4") != std::string::npos);
    }
    SUBCASE("sparse clutter cluster") {
        cfg.scene.clutter.push_back({100.0 * deg, 100.0 * deg, 1, 0.0, 0.5});
        bool found = false;
        for (const auto& w : validate_config(cfg)) {
            found = found || w.find("clutter cluster") != std::string::npos;
        }
        CHECK(found);
    }
    SUBCASE("hard errors") {
        cfg.trials = 0;
        CHECK_THROWS_AS(validate_config(cfg), config_error);
    }
    SUBCASE("k_max bounded by antennas") {
        cfg.detectors[0].config.k_max = 16;
        CHECK_THROWS_AS(validate_config(cfg), config_error);
    }
    SUBCASE("snr and scnr are mutually exclusive") {
        cfg.scnr_db = 0.0;
        CHECK_THROWS_AS(validate_config(cfg), config_error);
    }
}

TEST_CASE("resolve fills gain variances and quenches the environment") {
    auto cfg = white_config(16, 64, -6.0, 1);
    cfg.scene.clutter.push_back({120.0 * deg, 110.0 * deg, 32, 2.0 * deg, 0.5});
    const auto rx = resolve(cfg);
    CHECK(rx.scene.targets[0].gain_variance ==
          doctest::Approx(snr_to_gain_variance(-6.0, 1.0, 1.0, 16)));
    // Cluster power is scaled into path-gain units by N.
    CHECK(rx.scene.clutter[0].power == doctest::Approx(0.5 * 16));
    CHECK(rx.clutter_gains.size() == 32);
    CHECK(rx.observed_slots == 64);
    // The environment draw is deterministic in the master seed.
    const auto rx2 = resolve(cfg);
    CHECK((rx.clutter_gains - rx2.clutter_gains).norm() == 0.0);
}

TEST_CASE("simulate_observation is deterministic and pool-disjoint") {
    const auto rx = resolve(white_config(8, 32, 0.0, 1));
    const auto a = simulate_observation(rx, Hypothesis::alt_h1, TrialSet::alt_eval, 3);
    const auto b = simulate_observation(rx, Hypothesis::alt_h1, TrialSet::alt_eval, 3);
    CHECK((a.received - b.received).norm() == 0.0);
    const auto c = simulate_observation(rx, Hypothesis::alt_h1, TrialSet::null_eval, 3);
    CHECK((a.received - c.received).norm() > 0.0);
}

TEST_CASE("run_trials is deterministic") {
    auto cfg = white_config(16, 64, 10.0, 1);
    cfg.detectors.push_back({{DetectorMethod::mdl, 4}});
    cfg.detectors.push_back({{DetectorMethod::aic, 4}});
    cfg.trials = 200;
    cfg.calibration_trials = 1000;
    const auto a = run_trials(cfg);
    const auto b = run_trials(cfg);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].detections == b[i].detections);
        CHECK(a[i].false_alarms == b[i].false_alarms);
    }
    // Thread count must not change the tallies.
    auto serial = cfg;
    serial.threads = 1;
    const auto c = run_trials(serial);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].detections == c[i].detections);
        CHECK(a[i].false_alarms == c[i].false_alarms);
    }
}

TEST_CASE("strong targets are detected almost surely") {
    auto cfg = white_config(16, 64, 14.0, 1);
    cfg.trials = 500;
    cfg.calibration_trials = 4000;
    const auto outcomes = run_trials(cfg);
    REQUIRE(outcomes.size() == 1);
    CHECK(outcomes[0].detection_rate() >= 0.98);
}

TEST_CASE("calibrated epsilon grows with noise correlation") {
    auto white = white_config(16, 64, 0.0, 0);
    white.plan.sensing_aods = {60.0 * deg};
    auto correlated = white;
    correlated.noise.gamma = 0.9;
    const double eps_white = calibrate_threshold(white, 3000, 0.01);
    const double eps_corr = calibrate_threshold(correlated, 3000, 0.01);
    CHECK(eps_corr > eps_white);
}

TEST_CASE("calibration hits the requested false-alarm rate") {
    auto cfg = white_config(16, 64, 0.0, 0);
    cfg.plan.sensing_aods = {60.0 * deg};
    cfg.detectors[0].config.target_pfa = 0.05;
    cfg.trials = 4000;
    cfg.calibration_trials = 4000;
    const auto outcomes = run_trials(cfg);
    REQUIRE(outcomes.size() == 1);
    CHECK(outcomes[0].false_alarm_rate() > 0.035);
    CHECK(outcomes[0].false_alarm_rate() < 0.065);
}

TEST_CASE("TDM and CM coincide at full resources with a shared seed") {
    auto tdm = white_config(16, 64, -6.0, 1);
    tdm.trials = 400;
    tdm.calibration_trials = 1000;
    auto cm = tdm;
    cm.plan.mode = BeamformingMode::cm;
    cm.plan.delta = 1.0;
    const auto a = run_trials(tdm);
    const auto b = run_trials(cm);
    CHECK(a[0].detections == b[0].detections);
    CHECK(a[0].false_alarms == b[0].false_alarms);
    CHECK(a[0].epsilon == doctest::Approx(b[0].epsilon));
}

TEST_CASE("roc curves are monotone and dominated by easier operating points") {
    auto cfg = white_config(16, 64, 10.0, 1);
    cfg.trials = 800;
    cfg.calibration_trials = 4000;
    const std::vector<double> grid{0.01, 0.05, 0.1, 0.3};
    const auto easy = roc_curve(cfg, grid);
    REQUIRE(easy.size() == grid.size());
    for (std::size_t i = 1; i < easy.size(); ++i) {
        CHECK(easy[i].detection_rate >= easy[i - 1].detection_rate);
        CHECK(easy[i].false_alarm_rate >= easy[i - 1].false_alarm_rate);
        CHECK(easy[i].epsilon <= easy[i - 1].epsilon);
    }
    auto hard = cfg;
    hard.snr_db = -10.0;
    const auto worse = roc_curve(hard, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(easy[i].detection_rate >= worse[i].detection_rate);
    }
}

TEST_CASE("sweep emits one row per detector and value") {
    auto cfg = white_config(16, 64, 0.0, 1);
    cfg.detectors.push_back({{DetectorMethod::mdl, 4}});
    cfg.trials = 100;
    cfg.calibration_trials = 1000;
    cfg.sweep_axis = SweepAxis::snr_db;
    cfg.sweep_values = {-10.0, 0.0, 10.0};
    const auto rows = sweep(cfg);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].axis == "snr_db");
    CHECK(rows[0].detector == "ratio");
    CHECK(rows[1].detector == "mdl");
    // Detection improves along the swept SNR for the ratio detector.
    CHECK(rows[4].detection_rate >= rows[0].detection_rate);
    // Shared H0 pool: identical false-alarm rates across values.
    CHECK(rows[0].false_alarm_rate == rows[2].false_alarm_rate);
    CHECK(rows[0].epsilon == rows[4].epsilon);
}

TEST_CASE("scnr operating point uses the clutter-inflated floor") {
    auto cfg = white_config(16, 64, 0.0, 1);
    cfg.snr_db.reset();
    cfg.scnr_db = -3.0;
    cfg.scene.clutter_tx_antennas = 64;
    cfg.scene.clutter.push_back({141.0 * deg, 141.0 * deg, 32, 2.0 * deg, 0.5});
    const auto rx = resolve(cfg);
    CHECK(rx.scene.targets[0].gain_variance ==
          doctest::Approx(scnr_to_gain_variance(-3.0, 1.0, 1.0, 16, {0.5})));

    cfg.sweep_axis = SweepAxis::scnr_db;
    cfg.sweep_values = {-8.0, 0.0};
    cfg.trials = 300;
    cfg.calibration_trials = 1000;
    const auto rows = sweep(cfg);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].axis == "scnr_db");
    CHECK(rows[1].detection_rate >= rows[0].detection_rate);
    CHECK(rows[0].epsilon == rows[1].epsilon); // shared null calibration
}

TEST_CASE("sweep output CSV is byte-stable") {
    auto cfg = white_config(16, 32, -2.0, 1);
    cfg.trials = 100;
    cfg.calibration_trials = 1000;
    cfg.sweep_axis = SweepAxis::gamma;
    cfg.sweep_values = {0.0, 0.5};
    std::ostringstream a, b;
    write_sweep_csv(a, sweep(cfg));
    write_sweep_csv(b, sweep(cfg));
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind("detector,mode,axis,value,", 0) == 0);
}

TEST_CASE("metric at_least is at least as permissive as exact") {
    auto cfg = white_config(16, 64, 0.0, 1);
    cfg.trials = 400;
    cfg.calibration_trials = 1000;
    const auto exact = run_trials(cfg);
    cfg.metric = DetectionMetric::at_least;
    const auto permissive = run_trials(cfg);
    CHECK(permissive[0].detections >= exact[0].detections);
}

TEST_CASE("config JSON round trip") {
    const std::string text = R"({
      "scene": {
        "tx_antennas": 8,
        "rx_antennas": 16,
        "clutter_tx_antennas": 64,
        "targets": [{"aoa_deg": 90.0, "aod_deg": 90.0}],
        "clutter": [{"aoa_deg": 39.0, "aod_deg": 39.0, "points": 32, "spacing_deg": 2.0, "power": 0.5}]
      },
      "noise": {"variance": 1.0, "gamma": 0.5},
      "beamforming": {"mode": "cm", "slots": 64, "delta": 0.5, "ue_aod_deg": 20.0},
      "detectors": [
        {"method": "ratio", "k_max": 4, "target_pfa": 0.01},
        {"method": "mdl", "k_max": 4},
        {"method": "aic", "k_max": 4, "epsilon": 0.0}
      ],
      "snr_db": -6.0,
      "trials": 2000,
      "calibration_trials": 5000,
      "seed": 42,
      "sweep": {"axis": "snr_db", "values": [-10, -6]}
    })";
    const auto cfg = parse_config(nlohmann::json::parse(text));
    CHECK(cfg.scene.rx_antennas == 16);
    CHECK(cfg.scene.clutter_tx() == 64);
    CHECK(cfg.scene.targets[0].aoa == doctest::Approx(90.0 * deg));
    CHECK(cfg.scene.clutter[0].angular_spacing == doctest::Approx(2.0 * deg));
    CHECK(cfg.noise.gamma == doctest::Approx(0.5));
    CHECK(cfg.plan.mode == BeamformingMode::cm);
    CHECK(cfg.plan.delta == doctest::Approx(0.5));
    REQUIRE(cfg.detectors.size() == 3);
    CHECK(cfg.detectors[0].calibrate);
    CHECK(!cfg.detectors[2].calibrate);
    CHECK(cfg.snr_db.value() == doctest::Approx(-6.0));
    CHECK(cfg.master_seed == 42);
    CHECK(cfg.sweep_axis == SweepAxis::snr_db);
    REQUIRE(cfg.sweep_values.size() == 2);

    const auto echoed = config_to_json(cfg);
    CHECK(echoed["scene"]["targets"][0]["aoa_deg"].get<double>() == doctest::Approx(90.0));
    CHECK(echoed["beamforming"]["mode"] == "cm");
    CHECK(echoed["sweep"]["axis"] == "snr_db");

    CHECK_THROWS_AS(parse_config(nlohmann::json::parse("{}")), config_error);
    CHECK_THROWS_AS(
        parse_config(nlohmann::json::parse(R"({"scene":{}, "detectors":[{"method":"bogus"}]})")),
        config_error);
}
