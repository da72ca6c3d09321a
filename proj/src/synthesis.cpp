#include "jcas/synthesis.hpp"

#include <cmath>
#include <utility>

#include "jcas/errors.hpp"
#include "jcas/rng.hpp"

namespace jcas {

Eigen::MatrixXcd synthesize_tx(const BeamformingPlan& plan, const Schedule& schedule,
                               int tx_antennas, std::mt19937_64& rng) {
    const std::vector<int> window = schedule.observation_slots();
    const double amplitude = std::sqrt(plan.sensing_power);
    Eigen::MatrixXcd x(tx_antennas, window.size());
    for (std::size_t col = 0; col < window.size(); ++col) {
        const std::complex<double> symbol = draw_cn(rng, 1.0);
        x.col(col) = amplitude * symbol * precoder(plan, schedule, tx_antennas, window[col]);
    }
    return x;
}

Eigen::MatrixXcd synthesize_clutter_tx(double variance, int antennas, int len,
                                       std::mt19937_64& rng) {
    if (variance < 0.0) throw config_error("synthesize_clutter_tx: variance must be nonnegative");
    Eigen::MatrixXcd x(antennas, len);
    for (int t = 0; t < len; ++t) {
        for (int m = 0; m < antennas; ++m) {
            x(m, t) = draw_cn(rng, variance);
        }
    }
    return x;
}

Eigen::MatrixXcd received_matrix(const Eigen::MatrixXcd& h, const Eigen::MatrixXcd& x,
                                 const Eigen::MatrixXcd& h_cl, const Eigen::MatrixXcd& x_cl,
                                 const Eigen::MatrixXcd& v) {
    Eigen::MatrixXcd y = v;
    if (h.size() > 0 && x.size() > 0) {
        if (h.cols() != x.rows()) throw config_error("received_matrix: H and X not conformable");
        if (y.size() == 0) {
            y = h * x;
        } else {
            if (y.rows() != h.rows() || y.cols() != x.cols()) {
                throw config_error("received_matrix: target term shape mismatch");
            }
            y.noalias() += h * x;
        }
    }
    if (h_cl.size() > 0 && x_cl.size() > 0) {
        if (h_cl.cols() != x_cl.rows()) {
            throw config_error("received_matrix: H_cl and X_cl not conformable");
        }
        if (y.size() == 0) {
            y = h_cl * x_cl;
        } else {
            if (y.rows() != h_cl.rows() || y.cols() != x_cl.cols()) {
                throw config_error("received_matrix: clutter term shape mismatch");
            }
            y.noalias() += h_cl * x_cl;
        }
    }
    if (y.size() == 0) throw config_error("received_matrix: all terms empty");
    return y;
}

Eigen::MatrixXcd sample_covariance(const Eigen::MatrixXcd& y) {
    if (y.cols() < 1) throw config_error("sample_covariance: need at least one observation");
    return (y * y.adjoint()) / static_cast<double>(y.cols());
}

namespace {
void check_hermitian(const Eigen::MatrixXcd& r) {
    if (r.rows() != r.cols()) throw numeric_error("hermitian_eigenvalues: matrix not square");
    const double scale = std::max(1.0, r.norm());
    const double dev = (r - r.adjoint()).norm();
    if (dev > 1e-10 * scale) {
        throw numeric_error("hermitian_eigenvalues: input is not Hermitian within tolerance");
    }
}
} // namespace

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& r) {
    check_hermitian(r);
    const Eigen::MatrixXcd sym = 0.5 * (r + r.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw numeric_error("hermitian_eigenvalues: eigensolver failed");
    }
    return solver.eigenvalues().reverse();
}

std::pair<Eigen::VectorXd, Eigen::MatrixXcd> hermitian_eigensystem(const Eigen::MatrixXcd& r) {
    check_hermitian(r);
    const Eigen::MatrixXcd sym = 0.5 * (r + r.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw numeric_error("hermitian_eigensystem: eigensolver failed");
    }
    Eigen::VectorXd values = solver.eigenvalues().reverse();
    Eigen::MatrixXcd vectors = solver.eigenvectors().rowwise().reverse();
    return {std::move(values), std::move(vectors)};
}

ObservationBatch make_observation(Eigen::MatrixXcd y) {
    ObservationBatch batch;
    batch.sample_covariance = sample_covariance(y);
    batch.eigenvalues = hermitian_eigenvalues(batch.sample_covariance);
    batch.received = std::move(y);
    return batch;
}

} // namespace jcas
