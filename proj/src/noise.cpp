#include "jcas/noise.hpp"

#include <cmath>

#include "jcas/errors.hpp"
#include "jcas/rng.hpp"

namespace jcas {

void NoiseModel::validate() const {
    if (variance <= 0.0) throw config_error("noise: variance must be positive");
    if (std::abs(gamma) >= 1.0) throw config_error("noise: |gamma| < 1 required for stationarity");
}

Eigen::MatrixXd autocovariance_matrix(const NoiseModel& model, int len) {
    model.validate();
    if (len < 1) throw config_error("autocovariance_matrix: len must be positive");
    Eigen::MatrixXd sigma(len, len);
    for (int i = 0; i < len; ++i) {
        for (int j = 0; j < len; ++j) {
            sigma(i, j) = model.variance * std::pow(model.gamma, std::abs(i - j));
        }
    }
    return sigma;
}

Eigen::MatrixXcd generate_noise(const NoiseModel& model, int rx_antennas, int len,
                                std::mt19937_64& rng) {
    model.validate();
    Eigen::MatrixXcd v(rx_antennas, len);
    const double g = model.gamma;
    const double innovation_var = model.variance * (1.0 - g * g);
    for (int n = 0; n < rx_antennas; ++n) {
        v(n, 0) = draw_cn(rng, model.variance);
        for (int t = 1; t < len; ++t) {
            v(n, t) = g * v(n, t - 1) + draw_cn(rng, innovation_var);
        }
    }
    return v;
}

} // namespace jcas
