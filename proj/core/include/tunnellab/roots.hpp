#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <utility>

#include "tunnellab/errors.hpp"

namespace tunnellab {

// Bisection on a bracket with f(a)*f(b) <= 0.  Tolerance is on the abscissa.
template <typename F>
double bisect(F&& f, double a, double b, double xtol = 1e-12) {
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0) throw NoRootError("bisect: endpoints have the same sign");
  while (b - a > xtol) {
    const double c = 0.5 * (a + b);
    const double fc = f(c);
    if (fc == 0.0) return c;
    if (fa * fc < 0.0) {
      b = c;
      fb = fc;
    } else {
      a = c;
      fa = fc;
    }
  }
  return 0.5 * (a + b);
}

// Scan [a,b] in n steps and return the first sign-change bracket, if any.
template <typename F>
std::optional<std::pair<double, double>> scan_bracket(F&& f, double a, double b,
                                                      int n) {
  double x0 = a;
  double f0 = f(x0);
  for (int i = 1; i <= n; ++i) {
    const double x1 = a + (b - a) * i / n;
    const double f1 = f(x1);
    if (f0 == 0.0) return std::pair{x0, x0};
    if (f0 * f1 <= 0.0) return std::pair{x0, x1};
    x0 = x1;
    f0 = f1;
  }
  return std::nullopt;
}

// Golden-section minimum of a unimodal function on [a,b].
template <typename F>
double golden_min(F&& f, double a, double b, double xtol = 1e-10) {
  const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > xtol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace tunnellab
