// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

namespace msrd {

struct QuadOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-300;   // pure relative control by default
  int max_intervals = 4000;
};

// Adaptive Gauss-Kronrod 15(7) on [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opt = {});

// \int_0^inf f(x) dx for integrands decaying on the scale `scale`,
// via the rational map x = scale * t / (1 - t).
double integrate_halfline(const std::function<double(double)>& f, double scale,
                          const QuadOptions& opt = {});

// 4 pi \int_0^inf r^2 f(r) dr: isotropic 3D integral, used as an independent
// check of closed-form Gaussian moments.
double integrate_isotropic_3d(const std::function<double(double)>& f, double scale,
                              const QuadOptions& opt = {});

}  // namespace msrd
