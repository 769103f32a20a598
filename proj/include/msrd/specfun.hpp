// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace msrd {

// Half-line Gaussian moment: \int_0^inf x^n exp(-a x^2) dx
//                          = (1/2) Gamma((n+1)/2) a^{-(n+1)/2}.
double gauss_moment(int n, double a);

// Upper incomplete gamma Gamma(a, x) = \int_x^inf t^{a-1} e^{-t} dt
// (non-normalized; Gamma(a, 0) = Gamma(a)).
double incomplete_gamma(double a, double x);

// n! for 0 <= n <= 20, evaluated through lgamma.
double factorial(int n);

}  // namespace msrd
