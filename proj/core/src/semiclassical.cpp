#include "tunnellab/semiclassical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tunnellab/ode.hpp"
#include "tunnellab/quadrature.hpp"
#include "tunnellab/roots.hpp"

namespace tunnellab {

namespace {

constexpr double kPi = 3.14159265358979323846;

// R(tau) = tau + I(tau); the tunneling window is R < 1.
double profile_sum(const Drive& d, double tau) {
  return tau + detail::drive_integral_cf(d, tau);
}

double exit_point_at(const Drive& d, double tau0) {
  QuadOptions opt;
  opt.rel_tol = 1e-10;
  // tau = tau0 - s^2 removes the square-root endpoint singularity; the
  // explicit limit below covers nodes so close to s = 0 that forming
  // 1 - R^2 in doubles loses every significant digit.
  const auto integrand = [&](double s) {
    const double tau = tau0 - s * s;
    const double R = profile_sum(d, tau);
    const double G = (1.0 - R) * (1.0 + R);
    if (G < 1e-22) {
      const double hp = h_imag(d, tau0);
      return 2.0 * hp / std::sqrt(2.0 * (1.0 + hp));
    }
    return 2.0 * s * h_imag(d, tau) * R / std::sqrt(G);
  };
  return 1.0 - 2.0 * integrate(integrand, 0.0, std::sqrt(tau0), opt);
}

double action_reduced(const Drive& d, double tau0) {
  QuadOptions opt;
  opt.rel_tol = 1e-10;
  const auto integrand = [&](double s) {
    const double tau = tau0 - s * s;
    const double R = profile_sum(d, tau);
    const double G = std::max((1.0 - R) * (1.0 + R), 0.0);
    return 2.0 * s * std::sqrt(G);
  };
  return integrate(integrand, 0.0, std::sqrt(tau0), opt);
}

}  // namespace

double tunneling_time(const Drive& drive) {
  if (drive.shape == Shape::None) return 1.0;
  double upper = 1.0 + 1e-6;
  if (drive.shape == Shape::LorentzianCubed)
    upper = std::min(upper, drive.width * (1.0 - 1e-9));
  const auto residual = [&](double tau) { return profile_sum(drive, tau) - 1.0; };
  const int n = std::max(2, static_cast<int>(std::ceil(upper / 1e-3)));
  const auto bracket = scan_bracket(residual, 0.0, upper, n);
  if (!bracket)
    throw NoRootError("tunneling_time: no crossing below the search edge");
  double tau0 = bisect(residual, bracket->first, bracket->second, 1e-10);
  // Polish to machine accuracy: the exit integrand divides by 1 - R^2, so a
  // residual R(tau0) - 1 of ~1e-8 (bisection tolerance times the slope) would
  // leak a ~1e-5 bias into the exit point.
  for (int i = 0; i < 3; ++i) {
    const double slope = 1.0 + h_imag(drive, tau0);
    const double next = tau0 - residual(tau0) / slope;
    if (!(next > 0.0) || next >= upper) break;
    tau0 = next;
  }
  return tau0;
}

double exit_point(const Drive& drive) {
  if (drive.shape == Shape::None) return 1.0;
  return exit_point_at(drive, tunneling_time(drive));
}

ActionBreakdown action_integral(const Drive& drive, double g) {
  if (!(g > 0.0)) throw std::invalid_argument("action_integral: g must be positive");
  ActionBreakdown out;
  out.g = g;
  out.tau0 = tunneling_time(drive);
  out.x_exit = drive.shape == Shape::None ? 1.0 : exit_point_at(drive, out.tau0);
  out.action = 2.0 * g * action_reduced(drive, out.tau0);
  out.exit_energy = 1.0 - out.x_exit;
  out.conditions = check_semiclassical(ZenerSystem::from_g(g), drive);
  return out;
}

double closed_form_action(double width, double g) {
  if (!(width > 0.0))
    throw std::invalid_argument("closed_form_action: width must be positive");
  if (width >= 1.0) return 0.5 * kPi * g;
  return g * (std::asin(width) + width * std::sqrt(1.0 - width * width));
}

RealTrajectory real_time_trajectory(const Drive& drive, double t0, double t1, int n) {
  if (!(t1 > t0)) throw std::invalid_argument("real_time_trajectory: empty span");
  n = std::max(n, 2);

  const auto momentum = [&](double t) { return t + drive_integral_real(drive, t); };
  const auto speed = [&](double t) {
    const double p = momentum(t);
    return p / std::sqrt(1.0 + p * p);
  };

  RealTrajectory tr;
  tr.times.resize(n);
  tr.positions.resize(n);
  tr.velocities.resize(n);
  for (int i = 0; i < n; ++i) tr.times[i] = t0 + (t1 - t0) * i / (n - 1);

  // The span may straddle the hop at t = 0; t = 0 itself reports the
  // incident side whenever that side is part of the span.
  const bool outgoing_only = t0 >= 0.0;
  const double x_exit_v = outgoing_only || t1 > 0.0 ? exit_point(drive) : 0.0;

  Rk4<1> solver;
  Rk4<1>::Rhs incident = [&](double t, const Rk4<1>::State&, Rk4<1>::State& dy) {
    dy[0] = -speed(t);
  };
  Rk4<1>::Rhs outgoing = [&](double t, const Rk4<1>::State&, Rk4<1>::State& dy) {
    dy[0] = speed(t);
  };

  // Incident samples, marching from the anchor at t = 0 backward.
  if (!outgoing_only) {
    Rk4<1>::State y{-1.0};
    double t_prev = 0.0;
    for (int i = n - 1; i >= 0; --i) {
      const double t = tr.times[i];
      if (t > 0.0) continue;
      solver.run(incident, t_prev, t, y);
      t_prev = t;
      tr.positions[i] = y[0];
      tr.velocities[i] = -speed(t);
    }
  }
  // Outgoing samples, marching forward from the anchor.
  {
    Rk4<1>::State y{x_exit_v};
    double t_prev = 0.0;
    for (int i = 0; i < n; ++i) {
      const double t = tr.times[i];
      if (t < 0.0 || (t == 0.0 && !outgoing_only)) continue;
      solver.run(outgoing, t_prev, t, y);
      t_prev = t;
      tr.positions[i] = y[0];
      tr.velocities[i] = speed(t);
    }
  }
  return tr;
}

ValidityFlags check_semiclassical(const ZenerSystem& sys, const Drive& drive) {
  ValidityFlags f;
  f.eq16a = sys.g >= 10.0;
  if (drive.shape == Shape::None) {
    f.eq18a = true;
    f.eq28 = true;
  } else {
    f.eq18a = drive.amplitude_ratio <= 0.1;
    const double w3 = drive.width * drive.width * drive.width;
    f.eq28 = 1.0 / sys.g <= 0.1 * drive.amplitude_ratio * w3;
  }
  return f;
}

}  // namespace tunnellab
