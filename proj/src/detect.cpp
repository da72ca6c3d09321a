#include "jcas/detect.hpp"

#include <algorithm>
#include <cmath>

#include "jcas/errors.hpp"

namespace jcas {

std::string to_string(DetectorMethod method) {
    switch (method) {
        case DetectorMethod::ratio: return "ratio";
        case DetectorMethod::mdl: return "mdl";
        case DetectorMethod::aic: return "aic";
    }
    return "unknown";
}

namespace {
void check_eigenvalues(const Eigen::VectorXd& eigenvalues, int k_max) {
    if (k_max < 1) throw config_error("detector: k_max must be positive");
    if (eigenvalues.size() < k_max + 1) {
        throw numeric_error("detector: eigenvalue vector shorter than k_max+1");
    }
    if (eigenvalues(k_max) <= 0.0) {
        throw numeric_error("detector: lambda_{k_max+1} must be positive");
    }
}
} // namespace

DetectionResult ratio_test(const Eigen::VectorXd& eigenvalues, const DetectorConfig& cfg) {
    check_eigenvalues(eigenvalues, cfg.k_max);
    DetectionResult result;
    result.method = DetectorMethod::ratio;
    result.ratios.resize(cfg.k_max);
    for (int n = 0; n < cfg.k_max; ++n) {
        result.ratios[n] = eigenvalues(n) / eigenvalues(n + 1);
    }

    if (cfg.rule == RatioRule::last_exceeding) {
        for (int n = cfg.k_max - 1; n >= 0; --n) {
            if (result.ratios[n] > 1.0 + cfg.epsilon) {
                result.estimated_count = n + 1;
                break;
            }
        }
        return result;
    }

    // Dominant gap: index of the maximal ratio, ties toward smaller n.
    int best = 0;
    for (int n = 1; n < cfg.k_max; ++n) {
        if (result.ratios[n] > result.ratios[best]) best = n;
    }
    result.estimated_count = (result.ratios[best] > 1.0 + cfg.epsilon) ? best + 1 : 0;
    return result;
}

namespace {
// Log of geometric-to-arithmetic mean ratio of the trailing eigenvalues.
double log_sphericity(const Eigen::VectorXd& eigenvalues, int k) {
    const int n = static_cast<int>(eigenvalues.size());
    double log_sum = 0.0;
    double sum = 0.0;
    for (int i = k; i < n; ++i) {
        const double lam = std::max(eigenvalues(i), 1e-300);
        log_sum += std::log(lam);
        sum += lam;
    }
    const int tail = n - k;
    return log_sum / tail - std::log(sum / tail);
}

template <typename Criterion>
int argmin_criterion(int k_max, Criterion criterion) {
    int best_k = 0;
    double best_value = criterion(0);
    for (int k = 1; k <= k_max; ++k) {
        const double value = criterion(k);
        if (value < best_value) {
            best_value = value;
            best_k = k;
        }
    }
    return best_k;
}
} // namespace

int mdl_estimate(const Eigen::VectorXd& eigenvalues, int num_samples, int k_max) {
    check_eigenvalues(eigenvalues, k_max);
    if (num_samples < 1) throw config_error("mdl_estimate: num_samples must be positive");
    const int n = static_cast<int>(eigenvalues.size());
    const double t = static_cast<double>(num_samples);
    return argmin_criterion(k_max, [&](int k) {
        return -(n - k) * t * log_sphericity(eigenvalues, k) +
               0.5 * k * (2.0 * n - k) * std::log(t);
    });
}

int aic_estimate(const Eigen::VectorXd& eigenvalues, int num_samples, int k_max) {
    check_eigenvalues(eigenvalues, k_max);
    if (num_samples < 1) throw config_error("aic_estimate: num_samples must be positive");
    const int n = static_cast<int>(eigenvalues.size());
    const double t = static_cast<double>(num_samples);
    return argmin_criterion(k_max, [&](int k) {
        return -2.0 * (n - k) * t * log_sphericity(eigenvalues, k) + 2.0 * k * (2.0 * n - k);
    });
}

double calibrate_epsilon(std::vector<double> null_max_ratios, double target_pfa) {
    if (target_pfa <= 0.0 || target_pfa >= 1.0) {
        throw config_error("calibrate_epsilon: target_pfa must lie in (0,1)");
    }
    const auto n = null_max_ratios.size();
    if (static_cast<double>(n) * target_pfa < 5.0) {
        throw config_error("calibrate_epsilon: too few trials for the requested quantile "
                           "(trials * target_pfa < 5)");
    }
    std::sort(null_max_ratios.begin(), null_max_ratios.end());
    // Linear-interpolation quantile at q = 1 - target_pfa.
    const double pos = (1.0 - target_pfa) * static_cast<double>(n - 1);
    const auto lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, n - 1);
    const double frac = pos - static_cast<double>(lo);
    const double q = null_max_ratios[lo] * (1.0 - frac) + null_max_ratios[hi] * frac;
    return q - 1.0;
}

} // namespace jcas
