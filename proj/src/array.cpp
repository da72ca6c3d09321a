#include "jcas/array.hpp"

#include <cmath>
#include <numbers>

#include "jcas/errors.hpp"

namespace jcas {

Eigen::VectorXcd steering_vector(const ArraySpec& spec, double angle_rad) {
    if (spec.num_elements < 1) {
        throw config_error("steering_vector: array needs at least one element");
    }
    const double two_pi = 2.0 * std::numbers::pi;
    double angle = std::fmod(angle_rad, two_pi);
    if (angle < 0.0) angle += two_pi;

    const int n = spec.num_elements;
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    const double phase_step = -std::numbers::pi * std::cos(angle);

    Eigen::VectorXcd a(n);
    for (int m = 0; m < n; ++m) {
        a(m) = std::polar(scale, phase_step * m);
    }
    return a;
}

} // namespace jcas
