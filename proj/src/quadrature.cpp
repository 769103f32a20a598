// SPDX-License-Identifier: Apache-2.0
#include "msrd/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "msrd/errors.hpp"

namespace msrd {
namespace {

// Gauss-Kronrod 15(7) nodes and weights (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kron = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int k = 0; k < 7; ++k) {
    const double dx = h * kXgk[k];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    kron += kWgk[k] * (f1 + f2);
    if (k % 2 == 1) gauss += kWg[k / 2] * (f1 + f2);
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.value = kron * h;
  p.error = std::abs((kron - gauss) * h);
  return p;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opt) {
  if (!(a < b)) {
    if (a == b) return 0.0;
    throw domain_error("integrate: empty or reversed interval");
  }
  std::vector<Panel> panels{gk15(f, a, b)};
  auto worse = [](const Panel& x, const Panel& y) { return x.error < y.error; };
  std::make_heap(panels.begin(), panels.end(), worse);
  for (;;) {
    double total = 0.0, err = 0.0;
    for (const Panel& p : panels) {
      total += p.value;
      err += p.error;
    }
    if (err <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) return total;
    if (!std::isfinite(total) || !std::isfinite(err))
      throw integration_error("integrate: non-finite integrand");
    if ((int)panels.size() >= opt.max_intervals)
      throw integration_error("integrate: interval budget exhausted");
    std::pop_heap(panels.begin(), panels.end(), worse);
    Panel top = panels.back();
    panels.pop_back();
    const double m = 0.5 * (top.a + top.b);
    if (m <= top.a || m >= top.b)
      throw integration_error("integrate: interval collapsed below machine precision");
    panels.push_back(gk15(f, top.a, m));
    std::push_heap(panels.begin(), panels.end(), worse);
    panels.push_back(gk15(f, m, top.b));
    std::push_heap(panels.begin(), panels.end(), worse);
  }
}

double integrate_halfline(const std::function<double(double)>& f, double scale,
                          const QuadOptions& opt) {
  if (!(scale > 0.0)) throw domain_error("integrate_halfline: scale must be > 0");
  auto g = [&](double t) {
    const double om = 1.0 - t;
    const double x = scale * t / om;
    const double jac = scale / (om * om);
    return f(x) * jac;
  };
  return integrate(g, 0.0, 1.0, opt);
}

double integrate_isotropic_3d(const std::function<double(double)>& f, double scale,
                              const QuadOptions& opt) {
  auto g = [&](double r) { return r * r * f(r); };
  return 4.0 * 3.14159265358979323846264338327950288 * integrate_halfline(g, scale, opt);
}

}  // namespace msrd
