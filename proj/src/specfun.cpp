// SPDX-License-Identifier: Apache-2.0
#include "msrd/specfun.hpp"

#include <cmath>
#include <limits>

#include "msrd/errors.hpp"

namespace msrd {

double gauss_moment(int n, double a) {
  if (n < 0) throw domain_error("gauss_moment: n must be >= 0");
  if (!(a > 0.0) || !std::isfinite(a)) throw domain_error("gauss_moment: a must be > 0");
  const double p = 0.5 * (n + 1);
  return 0.5 * std::tgamma(p) * std::pow(a, -p);
}

namespace {

// Lower regularized series, upper continued fraction (Lentz).
double lower_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= x / (a + k);
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-17) break;
  }
  return sum * std::exp(-x + a * std::log(x));
}

double upper_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int k = 1; k < 500; ++k) {
    const double an = -k * (k - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-17) break;
  }
  return h * std::exp(-x + a * std::log(x));
}

}  // namespace

double incomplete_gamma(double a, double x) {
  if (!(a > 0.0) || !std::isfinite(a)) throw domain_error("incomplete_gamma: a must be > 0");
  if (!(x >= 0.0) || !std::isfinite(x)) throw domain_error("incomplete_gamma: x must be >= 0");
  if (x == 0.0) return std::tgamma(a);
  if (x < a + 1.0) return std::tgamma(a) - lower_series(a, x);
  return upper_cf(a, x);
}

double factorial(int n) {
  if (n < 0 || n > 20) throw domain_error("factorial: n out of supported range [0, 20]");
  return std::round(std::exp(std::lgamma(n + 1.0)));
}

}  // namespace msrd
