#include "jcas/scene.hpp"

#include "jcas/array.hpp"
#include "jcas/errors.hpp"
#include "jcas/rng.hpp"

namespace jcas {

double ClutterCluster::point_aoa(int i) const {
    return center_aoa + (i - (num_points - 1) / 2.0) * angular_spacing;
}

double ClutterCluster::point_aod(int i) const {
    return center_aod + (i - (num_points - 1) / 2.0) * angular_spacing;
}

int Scene::num_clutter_points() const {
    int total = 0;
    for (const auto& c : clutter) total += c.num_points;
    return total;
}

void Scene::validate() const {
    if (tx_antennas < 1 || rx_antennas < 1) {
        throw config_error("scene: antenna counts must be positive");
    }
    for (const auto& t : targets) {
        if (t.gain_variance < 0.0) {
            throw config_error("scene: target gain_variance must be nonnegative");
        }
    }
    for (const auto& c : clutter) {
        if (c.num_points < 1) throw config_error("scene: cluster needs at least one point");
        if (c.angular_spacing < 0.0) throw config_error("scene: cluster spacing must be nonnegative");
        if (c.power < 0.0) throw config_error("scene: cluster power must be nonnegative");
    }
}

Eigen::VectorXcd draw_target_gains(const Scene& scene, std::mt19937_64& rng) {
    Eigen::VectorXcd gains(scene.num_targets());
    for (int k = 0; k < scene.num_targets(); ++k) {
        gains(k) = draw_cn(rng, scene.targets[k].gain_variance);
    }
    return gains;
}

Eigen::VectorXcd draw_clutter_gains(const Scene& scene, std::mt19937_64& rng) {
    Eigen::VectorXcd gains(scene.num_clutter_points());
    int idx = 0;
    for (const auto& c : scene.clutter) {
        const double per_point = c.power / c.num_points;
        for (int j = 0; j < c.num_points; ++j) {
            gains(idx++) = draw_cn(rng, per_point);
        }
    }
    return gains;
}

Eigen::MatrixXcd target_channel(const Scene& scene, const Eigen::VectorXcd& gains) {
    if (gains.size() != scene.num_targets()) {
        throw config_error("target_channel: gains length does not match target count");
    }
    const ArraySpec rx{scene.rx_antennas, ArrayRole::receive};
    const ArraySpec tx{scene.tx_antennas, ArrayRole::transmit};
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(scene.rx_antennas, scene.tx_antennas);
    for (int k = 0; k < scene.num_targets(); ++k) {
        h.noalias() += gains(k) * steering_vector(rx, scene.targets[k].aoa) *
                       steering_vector(tx, scene.targets[k].aod).adjoint();
    }
    return h;
}

Eigen::MatrixXcd clutter_channel(const Scene& scene, const Eigen::VectorXcd& gains) {
    if (gains.size() != scene.num_clutter_points()) {
        throw config_error("clutter_channel: gains length does not match clutter point count");
    }
    const ArraySpec rx{scene.rx_antennas, ArrayRole::receive};
    const ArraySpec tx{scene.clutter_tx(), ArrayRole::transmit};
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(scene.rx_antennas, scene.clutter_tx());
    int idx = 0;
    for (const auto& c : scene.clutter) {
        for (int j = 0; j < c.num_points; ++j) {
            h.noalias() += gains(idx++) * steering_vector(rx, c.point_aoa(j)) *
                           steering_vector(tx, c.point_aod(j)).adjoint();
        }
    }
    return h;
}

} // namespace jcas
