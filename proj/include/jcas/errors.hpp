#pragma once

#include <stdexcept>
#include <string>

namespace jcas {

/// Invalid or inconsistent user-facing configuration (CLI exit code 2).
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// Violated numerical contract, e.g. a non-Hermitian covariance or a
/// non-positive eigenvalue where positivity is required (CLI exit code 3).
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace jcas
