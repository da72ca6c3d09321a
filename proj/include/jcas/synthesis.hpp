#pragma once

#include <random>

#include <Eigen/Dense>

#include "jcas/precoding.hpp"

namespace jcas {

/// One trial's received data: Y, its sample covariance (1/T)YY^H and the
/// covariance eigenvalues sorted non-increasing.
struct ObservationBatch {
    Eigen::MatrixXcd received;
    Eigen::MatrixXcd sample_covariance;
    Eigen::VectorXd eigenvalues;
};

/// Beamformed transmit matrix over the sensing observation window:
/// column t is sqrt(P_s) * w[slot_t] * s_t with s_t i.i.d. CN(0,1). TDM
/// windows contain only the sensing-labeled slots; CM windows span all slots.
Eigen::MatrixXcd synthesize_tx(const BeamformingPlan& plan, const Schedule& schedule,
                               int tx_antennas, std::mt19937_64& rng);

/// Clutter-illuminator transmit matrix: i.i.d. CN(0, variance) entries.
Eigen::MatrixXcd synthesize_clutter_tx(double variance, int antennas, int len,
                                       std::mt19937_64& rng);

/// Y = H*X + H_cl*X_cl + V. Pass empty matrices to drop a term.
Eigen::MatrixXcd received_matrix(const Eigen::MatrixXcd& h, const Eigen::MatrixXcd& x,
                                 const Eigen::MatrixXcd& h_cl, const Eigen::MatrixXcd& x_cl,
                                 const Eigen::MatrixXcd& v);

/// (1/T) * Y * Y^H.
Eigen::MatrixXcd sample_covariance(const Eigen::MatrixXcd& y);

/// Eigenvalues of a Hermitian matrix, sorted non-increasing. The input must
/// be Hermitian within 1e-10 (relative); it is symmetrized before solving.
Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& r);

/// Eigenvalues (non-increasing) plus matching eigenvectors, for diagnostics.
std::pair<Eigen::VectorXd, Eigen::MatrixXcd> hermitian_eigensystem(const Eigen::MatrixXcd& r);

/// Convenience: covariance + eigenvalues from a received matrix.
ObservationBatch make_observation(Eigen::MatrixXcd y);

} // namespace jcas
