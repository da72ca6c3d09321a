#pragma once

#include <random>

#include <Eigen/Dense>

namespace jcas {

/// Receiver noise: white (gamma = 0) or temporally AR(1)-correlated with
/// autocorrelation r(i) = variance * gamma^|i|. The marginal per-sample
/// variance equals `variance` for every gamma, so SNR definitions stay
/// gamma-independent.
struct NoiseModel {
    double variance = 1.0;
    double gamma = 0.0;

    void validate() const; // variance > 0, |gamma| < 1
};

/// Toeplitz autocovariance matrix, entry (i,j) = variance * gamma^|i-j|.
/// Symmetric positive definite for |gamma| < 1.
Eigen::MatrixXd autocovariance_matrix(const NoiseModel& model, int len);

/// N x len noise matrix: rows are independent stationary complex AR(1)
/// sequences (v[t] = gamma*v[t-1] + w[t], stationary initialization), each
/// with marginal variance `model.variance`. Distributionally equal to
/// Z * Sigma^{1/2} with Z white and Sigma normalized to unit diagonal.
Eigen::MatrixXcd generate_noise(const NoiseModel& model, int rx_antennas, int len,
                                std::mt19937_64& rng);

} // namespace jcas
