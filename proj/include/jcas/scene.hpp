#pragma once

#include <random>
#include <vector>

#include <Eigen/Dense>

namespace jcas {

/// Point reflector with AoA at the sensing receiver and AoD at the sensing
/// transmitter. gain_variance is the linear power of the complex path gain.
struct Target {
    double aoa = 0.0;
    double aod = 0.0;
    double gain_variance = 1.0;
};

/// Cluster of point scatterers placed on a symmetric grid around the center
/// angles: point i (0-based) sits at center + (i - (J-1)/2) * angular_spacing
/// in both AoA and AoD. `power` is the cluster's total path-gain variance;
/// every point carries power / num_points.
struct ClutterCluster {
    double center_aoa = 0.0;
    double center_aod = 0.0;
    int num_points = 1;
    double angular_spacing = 0.0;
    double power = 0.0;

    double point_aoa(int i) const;
    double point_aod(int i) const;
};

/// Immutable description of targets, clutter geometry and array sizes.
/// clutter_tx_antennas is the element count of the array illuminating the
/// clutter; it defaults to the sensing transmit array.
struct Scene {
    std::vector<Target> targets;
    std::vector<ClutterCluster> clutter;
    int tx_antennas = 8;
    int rx_antennas = 16;
    int clutter_tx_antennas = 0; // 0 means "same as tx_antennas"

    int num_targets() const { return static_cast<int>(targets.size()); }
    int num_clutter_points() const;
    int clutter_tx() const { return clutter_tx_antennas > 0 ? clutter_tx_antennas : tx_antennas; }

    void validate() const; // throws config_error on invariant violations
};

/// One complex Gaussian path gain per target, variance per Target, i.i.d.
Eigen::VectorXcd draw_target_gains(const Scene& scene, std::mt19937_64& rng);

/// One complex Gaussian path gain per clutter point; point j of cluster l has
/// variance power_l / J_l. Points are ordered cluster by cluster.
Eigen::VectorXcd draw_clutter_gains(const Scene& scene, std::mt19937_64& rng);

/// Target channel: sum_k gains[k] * a_N(aoa_k) * a_M(aod_k)^H, N x M.
Eigen::MatrixXcd target_channel(const Scene& scene, const Eigen::VectorXcd& gains);

/// Clutter channel: sum over all points of gain * a_N(aoa) * a_M'(aod)^H,
/// N x clutter_tx().
Eigen::MatrixXcd clutter_channel(const Scene& scene, const Eigen::VectorXcd& gains);

} // namespace jcas
