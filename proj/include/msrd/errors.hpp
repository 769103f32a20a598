// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace msrd {

// Invalid physical input (non-positive temperature, bad mass, non-unit vector, ...).
struct domain_error : std::domain_error {
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Quadrature failed to converge or the integrand is not integrable.
struct integration_error : std::runtime_error {
  explicit integration_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent scenario configuration.
struct config_error : std::runtime_error {
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Solver failure (singular coefficients, dt underflow, degenerate estimate, ...).
struct numerical_error : std::runtime_error {
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace msrd
