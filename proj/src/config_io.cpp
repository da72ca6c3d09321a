#include "jcas/config_io.hpp"

#include <fstream>
#include <numbers>

#include "jcas/errors.hpp"

namespace jcas {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;

using nlohmann::json;

double require_number(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number()) {
        throw config_error("config: missing or non-numeric field '" + key + "'");
    }
    return j[key].get<double>();
}

DetectorMethod method_from_string(const std::string& name) {
    if (name == "ratio") return DetectorMethod::ratio;
    if (name == "mdl") return DetectorMethod::mdl;
    if (name == "aic") return DetectorMethod::aic;
    throw config_error("config: unknown detector method '" + name + "'");
}

Scene parse_scene(const json& j) {
    Scene scene;
    scene.tx_antennas = j.value("tx_antennas", 8);
    scene.rx_antennas = j.value("rx_antennas", 16);
    scene.clutter_tx_antennas = j.value("clutter_tx_antennas", 0);
    for (const auto& t : j.value("targets", json::array())) {
        Target target;
        target.aoa = require_number(t, "aoa_deg") * kDegToRad;
        target.aod = require_number(t, "aod_deg") * kDegToRad;
        target.gain_variance = t.value("gain_variance", 1.0);
        scene.targets.push_back(target);
    }
    for (const auto& c : j.value("clutter", json::array())) {
        ClutterCluster cluster;
        cluster.center_aoa = require_number(c, "aoa_deg") * kDegToRad;
        cluster.center_aod = require_number(c, "aod_deg") * kDegToRad;
        cluster.num_points = c.value("points", 1);
        cluster.angular_spacing = c.value("spacing_deg", 0.0) * kDegToRad;
        cluster.power = require_number(c, "power");
        scene.clutter.push_back(cluster);
    }
    return scene;
}

BeamformingPlan parse_plan(const json& j) {
    BeamformingPlan plan;
    plan.mode = mode_from_string(j.value("mode", "tdm"));
    plan.total_slots = j.value("slots", 64);
    plan.alpha = j.value("alpha", 1.0);
    plan.delta = j.value("delta", 1.0);
    plan.ue_aod = j.value("ue_aod_deg", 0.0) * kDegToRad;
    plan.sensing_power = j.value("sensing_power", 1.0);
    plan.comm_power = j.value("comm_power", 1.0);
    plan.beam_error = j.value("beam_error_deg", 0.0) * kDegToRad;
    plan.steered = j.value("steered", true);
    for (const auto& a : j.value("sensing_aods_deg", json::array())) {
        plan.sensing_aods.push_back(a.get<double>() * kDegToRad);
    }
    return plan;
}

DetectorSetup parse_detector(const json& j) {
    DetectorSetup setup;
    setup.config.method = method_from_string(j.value("method", "ratio"));
    setup.config.k_max = j.value("k_max", 4);
    setup.config.target_pfa = j.value("target_pfa", 0.01);
    if (j.contains("epsilon")) {
        setup.config.epsilon = j["epsilon"].get<double>();
        setup.calibrate = false;
    }
    const std::string rule = j.value("rule", "dominant_gap");
    if (rule == "dominant_gap") {
        setup.config.rule = RatioRule::dominant_gap;
    } else if (rule == "last_exceeding") {
        setup.config.rule = RatioRule::last_exceeding;
    } else {
        throw config_error("config: unknown ratio rule '" + rule + "'");
    }
    return setup;
}

} // namespace

ExperimentConfig parse_config(const json& j) {
    ExperimentConfig cfg;
    if (!j.contains("scene")) throw config_error("config: missing 'scene' section");
    cfg.scene = parse_scene(j["scene"]);

    const json noise = j.value("noise", json::object());
    cfg.noise.variance = noise.value("variance", 1.0);
    cfg.noise.gamma = noise.value("gamma", 0.0);

    cfg.plan = parse_plan(j.value("beamforming", json::object()));

    const json detectors = j.value("detectors", json::array());
    if (detectors.empty()) {
        DetectorSetup ratio;
        cfg.detectors.push_back(ratio);
    } else {
        for (const auto& d : detectors) cfg.detectors.push_back(parse_detector(d));
    }

    if (j.contains("snr_db")) cfg.snr_db = j["snr_db"].get<double>();
    if (j.contains("scnr_db")) cfg.scnr_db = j["scnr_db"].get<double>();
    cfg.trials = j.value("trials", 1000);
    cfg.calibration_trials = j.value("calibration_trials", 10000);
    cfg.master_seed = j.value("seed", 1ULL);
    cfg.threads = j.value("threads", 0);

    const std::string metric = j.value("metric", "exact");
    if (metric == "exact") {
        cfg.metric = DetectionMetric::exact;
    } else if (metric == "at_least") {
        cfg.metric = DetectionMetric::at_least;
    } else {
        throw config_error("config: unknown metric '" + metric + "'");
    }

    if (j.contains("sweep")) {
        const json& s = j["sweep"];
        cfg.sweep_axis = sweep_axis_from_string(s.value("axis", "none"));
        for (const auto& v : s.value("values", json::array())) {
            cfg.sweep_values.push_back(v.get<double>());
        }
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw config_error("config parse error in " + path + ": " + e.what());
    }
    return parse_config(j);
}

nlohmann::json config_to_json(const ExperimentConfig& cfg) {
    json j;
    json scene;
    scene["tx_antennas"] = cfg.scene.tx_antennas;
    scene["rx_antennas"] = cfg.scene.rx_antennas;
    scene["clutter_tx_antennas"] = cfg.scene.clutter_tx();
    scene["targets"] = json::array();
    for (const auto& t : cfg.scene.targets) {
        scene["targets"].push_back({{"aoa_deg", t.aoa * kRadToDeg},
                                    {"aod_deg", t.aod * kRadToDeg},
                                    {"gain_variance", t.gain_variance}});
    }
    scene["clutter"] = json::array();
    for (const auto& c : cfg.scene.clutter) {
        scene["clutter"].push_back({{"aoa_deg", c.center_aoa * kRadToDeg},
                                    {"aod_deg", c.center_aod * kRadToDeg},
                                    {"points", c.num_points},
                                    {"spacing_deg", c.angular_spacing * kRadToDeg},
                                    {"power", c.power}});
    }
    j["scene"] = scene;
    j["noise"] = {{"variance", cfg.noise.variance}, {"gamma", cfg.noise.gamma}};

    json plan;
    plan["mode"] = to_string(cfg.plan.mode);
    plan["slots"] = cfg.plan.total_slots;
    plan["alpha"] = cfg.plan.alpha;
    plan["delta"] = cfg.plan.delta;
    plan["ue_aod_deg"] = cfg.plan.ue_aod * kRadToDeg;
    plan["sensing_power"] = cfg.plan.sensing_power;
    plan["comm_power"] = cfg.plan.comm_power;
    plan["beam_error_deg"] = cfg.plan.beam_error * kRadToDeg;
    plan["steered"] = cfg.plan.steered;
    plan["sensing_aods_deg"] = json::array();
    for (double a : cfg.plan.sensing_aods) plan["sensing_aods_deg"].push_back(a * kRadToDeg);
    j["beamforming"] = plan;

    j["detectors"] = json::array();
    for (const auto& d : cfg.detectors) {
        json det;
        det["method"] = to_string(d.config.method);
        det["k_max"] = d.config.k_max;
        det["target_pfa"] = d.config.target_pfa;
        det["calibrate"] = d.calibrate;
        if (!d.calibrate) det["epsilon"] = d.config.epsilon;
        det["rule"] = d.config.rule == RatioRule::dominant_gap ? "dominant_gap" : "last_exceeding";
        j["detectors"].push_back(det);
    }

    if (cfg.snr_db) j["snr_db"] = *cfg.snr_db;
    if (cfg.scnr_db) j["scnr_db"] = *cfg.scnr_db;
    j["trials"] = cfg.trials;
    j["calibration_trials"] = cfg.calibration_trials;
    j["seed"] = cfg.master_seed;
    j["threads"] = cfg.threads;
    j["metric"] = cfg.metric == DetectionMetric::exact ? "exact" : "at_least";
    if (cfg.sweep_axis != SweepAxis::none) {
        j["sweep"] = {{"axis", to_string(cfg.sweep_axis)}, {"values", cfg.sweep_values}};
    }
    return j;
}

} // namespace jcas
