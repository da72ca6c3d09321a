#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace jcas {

enum class DetectorMethod { ratio, mdl, aic };

/// Reading of the ratio rule. dominant_gap picks the index of the largest
/// consecutive-eigenvalue ratio and accepts it only above 1+epsilon;
/// last_exceeding returns the largest index whose ratio exceeds 1+epsilon.
enum class RatioRule { dominant_gap, last_exceeding };

struct DetectorConfig {
    DetectorMethod method = DetectorMethod::ratio;
    int k_max = 4;
    double epsilon = 0.0;     // ratio threshold; usually calibrated
    double target_pfa = 0.01; // calibration target
    RatioRule rule = RatioRule::dominant_gap;
};

struct DetectionResult {
    int estimated_count = 0;
    std::vector<double> ratios; // lambda_n / lambda_{n+1}, n = 1..k_max
    DetectorMethod method = DetectorMethod::ratio;
};

std::string to_string(DetectorMethod method);

/// Eigenvalue-ratio detector. Requires eigenvalues sorted non-increasing
/// with length >= k_max+1 and lambda_{k_max+1} > 0.
DetectionResult ratio_test(const Eigen::VectorXd& eigenvalues, const DetectorConfig& cfg);

/// Minimum-description-length source enumeration:
/// argmin_k -(N-k) T ln(g_k/a_k) + k(2N-k)/2 ln T, with g_k/a_k the geometric
/// and arithmetic means of the N-k smallest eigenvalues.
int mdl_estimate(const Eigen::VectorXd& eigenvalues, int num_samples, int k_max);

/// Akaike criterion: argmin_k -2(N-k) T ln(g_k/a_k) + 2k(2N-k).
int aic_estimate(const Eigen::VectorXd& eigenvalues, int num_samples, int k_max);

/// Threshold from stored null-hypothesis max-ratio statistics: 1+epsilon is
/// the (1 - target_pfa) linear-interpolation quantile of the statistics.
double calibrate_epsilon(std::vector<double> null_max_ratios, double target_pfa);

} // namespace jcas
