#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>

namespace tunnellab {

// Classic RK4 with step doubling: each accepted step compares one full step
// against two half steps and keeps the halves.  Integrates in either time
// direction; the observer sees every accepted (t, state) pair.
template <std::size_t N>
struct Rk4 {
  using State = std::array<double, N>;
  using Rhs = std::function<void(double, const State&, State&)>;

  double tol = 1e-9;
  double h_init = 1e-3;
  double h_min = 1e-12;

  static State step(const Rhs& rhs, double t, double h, const State& y) {
    State k1, k2, k3, k4, tmp, out;
    rhs(t, y, k1);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    rhs(t + 0.5 * h, tmp, k2);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    rhs(t + 0.5 * h, tmp, k3);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * k3[i];
    rhs(t + h, tmp, k4);
    for (std::size_t i = 0; i < N; ++i)
      out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
  }

  template <typename Obs>
  void run(const Rhs& rhs, double t0, double t1, State& y, Obs&& observe) const {
    if (t0 == t1) return;
    const double dir = t1 > t0 ? 1.0 : -1.0;
    double t = t0;
    double h = dir * std::abs(h_init);
    while (dir * (t1 - t) > 0.0) {
      if (dir * (t + h) > dir * t1) h = t1 - t;
      const State full = step(rhs, t, h, y);
      State half = step(rhs, t, 0.5 * h, y);
      half = step(rhs, t + 0.5 * h, 0.5 * h, half);
      double err = 0.0, scale = 0.0;
      for (std::size_t i = 0; i < N; ++i) {
        err = std::max(err, std::abs(full[i] - half[i]));
        scale = std::max(scale, std::abs(half[i]));
      }
      const double budget = tol * std::max(1.0, scale);
      if (err <= 15.0 * budget || std::abs(h) <= h_min) {
        t += h;
        y = half;
        observe(t, y);
        if (err < 1.5 * budget) h *= 2.0;
      } else {
        h *= 0.5;
      }
      if (std::abs(h) < h_min) h = dir * h_min;
    }
  }

  void run(const Rhs& rhs, double t0, double t1, State& y) const {
    run(rhs, t0, t1, y, [](double, const State&) {});
  }
};

}  // namespace tunnellab
