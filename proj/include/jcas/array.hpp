#pragma once

#include <Eigen/Dense>

namespace jcas {

enum class ArrayRole { transmit, receive };

/// Uniform linear array with half-wavelength element spacing.
struct ArraySpec {
    int num_elements = 1;
    ArrayRole role = ArrayRole::receive;
};

/// Unit-norm ULA steering vector: element m is
/// exp(-j*pi*m*cos(angle)) / sqrt(num_elements). Angles are radians and are
/// wrapped modulo 2*pi; degree conversion lives at the config/CLI boundary.
Eigen::VectorXcd steering_vector(const ArraySpec& spec, double angle_rad);

} // namespace jcas
