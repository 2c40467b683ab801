#pragma once

#include <vector>

#include "tunnellab/drive.hpp"
#include "tunnellab/system.hpp"

namespace tunnellab {

// Under-barrier bookkeeping for one (drive, g) point.  action carries the
// full prefactor 2*g outside the dimensionless integrand (so the drive-free
// value is pi*g/2); exit_energy is measured in units of half the gap.
struct ActionBreakdown {
  double tau0 = 0.0;
  double x_exit = 0.0;
  double action = 0.0;
  double exit_energy = 0.0;
  ValidityFlags conditions;
  double g = 0.0;
};

// Piecewise classical path x_cl(t): incident branch for t < 0 anchored at
// x(0) = -1, outgoing branch for t > 0 anchored at x(0) = x_exit.  The
// under-barrier hop shows up as the jump at t = 0.
struct RealTrajectory {
  std::vector<double> times;
  std::vector<double> positions;
  std::vector<double> velocities;
};

// Smallest tau0 > 0 with tau0 + I(tau0) = 1, by grid scan (step 1e-3) plus
// bisection to 1e-10.  Drive-free value is exactly 1.  For the cubed
// Lorentzian the search stays below the pole at width*(1 - 1e-9).
double tunneling_time(const Drive& drive);

// Exit coordinate 1 - 2*int_0^{tau0} h(i tau) (tau+I)/sqrt(1-(tau+I)^2) dtau;
// the endpoint square-root singularity is removed by tau = tau0 - s^2.
double exit_point(const Drive& drive);

// A = 2g * int_0^{tau0} sqrt(1 - [tau + I(tau)]^2) dtau, plus the exit data
// and validity flags for the same point.
ActionBreakdown action_integral(const Drive& drive, double g);

// Singular-pulse limit of the action: pi*g/2 for width >= 1, else
// g*(asin(width) + width*sqrt(1-width^2)); continuous at width = 1.
double closed_form_action(double width, double g);

// x_cl on [t0, t1] sampled at n points, fourth-order integration with local
// error 1e-9.  Drive-free this is -sqrt(1+t^2) before and
// x_exit + sqrt(1+t^2) - 1 after the hop.
RealTrajectory real_time_trajectory(const Drive& drive, double t0, double t1,
                                    int n = 200);

// eq16a: g >= 10.  eq18a: amplitude_ratio <= 0.1.  eq28: 1/g <= 0.1 * r *
// width^3 (the width parameter stands in for the pulse half-width for every
// shape).  Drive-free points satisfy eq18a and eq28 vacuously.
ValidityFlags check_semiclassical(const ZenerSystem& sys, const Drive& drive);

}  // namespace tunnellab
