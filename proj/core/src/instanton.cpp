#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "tunnellab/ode.hpp"
#include "tunnellab/potential.hpp"
#include "tunnellab/roots.hpp"

namespace tunnellab {

namespace {

// State layout: x, v, action integrand accumulator, drive work accumulator.
using Solver = Rk4<4>;
using State = Solver::State;

struct ShotResult {
  bool crossed = false;
  double tau0 = 0.0;
  State end{};
  double rho = 0.0;  // endpoint kinetic energy minus (V(0) - E)
};

struct Shooter {
  const Potential1D& pot;
  const Drive& drive;
  double E;
  Solver solver;
  double chunk;
  double tau_cap;

  double force(double tau) const { return h_imag(drive, tau); }

  Solver::Rhs rhs() const {
    return [this](double tau, const State& s, State& d) {
      const double f = force(tau);
      d[0] = s[1];
      d[1] = (pot.derivative(s[0]) - f) / pot.mass;
      d[2] = 0.5 * pot.mass * s[1] * s[1] + pot.value(s[0]) - E - s[0] * f;
      d[3] = f * s[1];
    };
  }

  // Launch at rest from x0 and stop at the first crossing of x = 0, located
  // by bisecting the final chunk; a turnaround with x still positive counts
  // as a stall and reports the kinetic-energy deficit instead.
  ShotResult shoot(double x0) const {
    const auto f = rhs();
    ShotResult out;
    State y{x0, 0.0, 0.0, 0.0};
    double tau = 0.0;
    while (tau < tau_cap) {
      const State prev = y;
      const double tau_prev = tau;
      const double tau_end = std::min(tau + chunk, tau_cap);
      solver.run(f, tau, tau_end, y);
      tau = tau_end;
      if (y[0] <= 0.0) {
        double lo = 0.0, hi = tau_end - tau_prev;
        State at_hi = y;
        for (int i = 0; i < 80 && (hi - lo) > 1e-15 * std::max(1.0, chunk); ++i) {
          const double mid = 0.5 * (lo + hi);
          State trial = prev;
          solver.run(f, tau_prev, tau_prev + mid, trial);
          if (trial[0] <= 0.0) {
            hi = mid;
            at_hi = trial;
          } else {
            lo = mid;
          }
        }
        out.crossed = true;
        out.tau0 = tau_prev + hi;
        out.end = at_hi;
        out.rho = 0.5 * pot.mass * at_hi[1] * at_hi[1] - (pot.value(0.0) - E);
        return out;
      }
      if (y[1] > 1e-12 && y[0] > 0.0) break;  // turned around before the well
    }
    out.crossed = false;
    out.rho = -(pot.value(0.0) - E);
    return out;
  }
};

}  // namespace

Trajectory1D instanton_bvp(const Potential1D& pot, const Drive& drive, double E) {
  if (pot.form == BarrierForm::SquareSoft && pot.softness <= 0.0)
    throw std::invalid_argument("instanton_bvp: hard walls have no smooth force");
  if (pot.peak_height() <= E)
    throw NoBarrierError("instanton_bvp: level at or above the barrier top");
  if (pot.value(0.0) < E)
    throw std::invalid_argument(
        "instanton_bvp: barrier must cover the well edge at this energy");

  Shooter sh{pot, drive, E, {}, 0.0, 0.0};
  sh.solver.tol = 1e-10;
  sh.chunk = 0.05 / pot.omega;
  sh.tau_cap = 200.0 / pot.omega;
  // Exploratory shots must never integrate into the pulse pole; trajectories
  // needing nearly the whole window diverge there and are rejected as stalls.
  if (drive.shape == Shape::LorentzianCubed)
    sh.tau_cap = std::min(sh.tau_cap, 0.95 * drive.width);

  // Bracket the start point on the outer barrier slope: too close to the
  // peak stalls short of the well (negative residual), far down the slope
  // arrives too fast (positive residual).
  const double xp = pot.peak_position();
  double far = pot.far_edge();
  int guard = 0;
  while (pot.value(far) >= E) {
    far *= 2.0;
    if (++guard > 60) throw NoBarrierError("instanton_bvp: no outer slope");
  }
  double lo = 0.0, hi = 0.0;
  bool have_lo = false, have_hi = false;
  double rho_lo = 0.0, rho_hi = 0.0;
  const int scan_n = 48;
  for (int i = 1; i <= scan_n; ++i) {
    const double x0 = xp + (far - xp) * i / (scan_n + 1.0);
    const double r = sh.shoot(x0).rho;
    if (r < 0.0) {
      lo = x0;
      rho_lo = r;
      have_lo = true;
    } else {
      hi = x0;
      rho_hi = r;
      have_hi = true;
      break;  // residual grows along the slope; first nonnegative closes it
    }
  }
  if (!have_lo || !have_hi)
    throw ShootingDivergedError("instanton_bvp: no residual sign change on the slope");

  // Damped secant inside the bracket, bisection fallback.
  double x_a = lo, r_a = rho_lo, x_b = hi, r_b = rho_hi;
  double x_cur = 0.5 * (lo + hi);
  ShotResult cur = sh.shoot(x_cur);
  // Above the integrator's global-error floor; the secant would otherwise
  // chase solver noise forever.
  const double tol = 1e-8 * std::max(1.0, pot.value(0.0) - E);
  int iter = 0;
  while (std::abs(cur.rho) > tol) {
    if (++iter > 200) {
      std::ostringstream msg;
      msg << "instanton_bvp: no convergence after 200 iterations, best residual "
          << std::abs(cur.rho);
      throw ShootingDivergedError(msg.str());
    }
    if (cur.rho < 0.0) {
      x_a = x_cur;
      r_a = cur.rho;
    } else {
      x_b = x_cur;
      r_b = cur.rho;
    }
    double x_next = x_b - r_b * (x_b - x_a) / (r_b - r_a);
    if (!(x_next > x_a && x_next < x_b)) x_next = 0.5 * (x_a + x_b);
    double step = x_next - x_cur;
    ShotResult nxt = sh.shoot(x_cur + step);
    int halvings = 0;
    while (std::abs(nxt.rho) > std::abs(cur.rho) && halvings < 8) {
      step *= 0.5;
      nxt = sh.shoot(x_cur + step);
      ++halvings;
    }
    x_cur += step;
    cur = nxt;
  }
  if (!cur.crossed)
    throw ShootingDivergedError("instanton_bvp: converged residual without a crossing");

  // Final pass re-integrates the winning shot, recording the accepted grid.
  Trajectory1D tr;
  tr.tau0 = cur.tau0;
  const auto f = sh.rhs();
  State y{x_cur, 0.0, 0.0, 0.0};
  tr.grid.push_back(0.0);
  tr.positions.push_back(x_cur);
  tr.velocities.push_back(0.0);
  std::vector<double> work{0.0};
  sh.solver.run(f, 0.0, cur.tau0, y, [&](double tau, const State& s) {
    tr.grid.push_back(tau);
    tr.positions.push_back(s[0]);
    tr.velocities.push_back(s[1]);
    work.push_back(s[3]);
  });
  // Pin the endpoint exactly onto the well boundary.
  tr.positions.back() = 0.0;
  tr.velocities.back() = y[1];
  tr.action = 2.0 * y[2] / pot.hbar;

  const double q0 = pot.value(x_cur);
  double resid = 0.0;
  for (std::size_t j = 0; j < tr.grid.size(); ++j) {
    const double q = pot.value(tr.positions[j]) -
                     0.5 * pot.mass * tr.velocities[j] * tr.velocities[j];
    resid = std::max(resid, std::abs(q - q0 - work[j]));
  }
  tr.energy_residual = resid;
  return tr;
}

PhotonAssist photon_assist_extremum(const Potential1D& pot, double E, double theta) {
  const double vmax = pot.peak_height();
  if (!(E < vmax))
    throw NoBarrierError("photon_assist_extremum: level at or above the barrier top");
  if (!(theta > 0.0))
    throw std::invalid_argument("photon_assist_extremum: theta must be positive");

  const double span = vmax - E;
  const double dE = 1e-4 * span;
  const double slope =
      (wkb_action(pot, E + dE) - wkb_action(pot, E - dE)) / (2.0 * dE);

  PhotonAssist out;
  if (!(2.0 * theta < pot.hbar * std::abs(slope))) {
    out.delta_e = 0.0;
    out.action = wkb_action(pot, E);
    out.found = false;
    return out;
  }
  const auto total = [&](double de) {
    return 2.0 * theta * de / pot.hbar + wkb_action(pot, E + de);
  };
  const double de = golden_min(total, 0.0, span * (1.0 - 1e-9), 1e-10);
  out.delta_e = de;
  out.action = total(de);
  out.found = true;
  return out;
}

}  // namespace tunnellab
