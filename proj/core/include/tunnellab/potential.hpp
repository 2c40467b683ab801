#pragma once

#include <vector>

#include "tunnellab/drive.hpp"
#include "tunnellab/errors.hpp"

namespace tunnellab {

enum class BarrierForm { SquareSoft, Parabola, GaussianBump };

// Escape geometry of Fig.-1 type: a narrow well pinned at x = 0 and a smooth
// parametric barrier beyond it with V -> 0 as x -> +infinity.  The well
// enters only through its boundary at x = 0 (depth/width are descriptive
// metadata); turning-point searches therefore run on x >= 0 and the inner
// turning point is capped at the well edge.
struct Potential1D {
  BarrierForm form = BarrierForm::GaussianBump;
  double height = 1.0;    // barrier scale V0
  double width = 1.0;     // wall separation (square) or sigma (bump)
  double center = 1.0;    // bump position
  double softness = 0.1;  // square wall tanh scale; 0 means hard walls
  double omega = 1.0;     // parabola curvature; well frequency metadata elsewhere
  double mass = 1.0;
  double hbar = 1.0;
  double level = 0.0;  // default energy E
  double well_depth = 1.0;
  double well_width = 0.1;

  double value(double x) const;
  double derivative(double x) const;
  double peak_position() const;
  double peak_height() const;
  // Rightmost coordinate worth probing; V is negligible beyond it.
  double far_edge() const;

  static Potential1D square(double height, double width, double softness,
                            double mass = 1.0);
  static Potential1D parabola(double height, double omega, double mass = 1.0);
  static Potential1D gaussian_bump(double height, double center, double sigma,
                                   double mass = 1.0);
};

// Imaginary-time escape path on [0, tau0]: starts at rest under the barrier,
// ends on the well boundary x = 0.  action carries the (2/hbar) prefactor;
// energy_residual is the worst first-integral deviation after subtracting
// the work done by the drive force.
struct Trajectory1D {
  std::vector<double> grid;
  std::vector<double> positions;
  std::vector<double> velocities;
  double energy_residual = 0.0;
  double tau0 = 0.0;
  double action = 0.0;
};

struct PhotonAssist {
  double delta_e = 0.0;
  double action = 0.0;
  bool found = false;
};

// (2/hbar) * integral sqrt(2m(V-E)) dx between the turning points, each
// located by bisection to 1e-10; endpoint square-root zeros are removed by
// quadratic substitution.
double wkb_action(const Potential1D& pot, double E);

// Imaginary-time Newton dynamics m x'' = V'(x) - force(tau) with force(tau)
// the drive profile on the imaginary axis, solved by shooting on the start
// point: launch at rest, take the first crossing of x = 0 as tau0, and drive
// the endpoint kinetic energy onto V(0) - E.  Steps that worsen the residual
// are halved; ShootingDivergedError after 200 iterations.
Trajectory1D instanton_bvp(const Potential1D& pot, const Drive& drive, double E);

// Minimize 2*theta*dE/hbar + A0(E+dE) over the energy transfer dE gained
// from a pulse of half-width theta.  When the short-pulse condition
// 2*theta < hbar*|dA0/dE| fails, reports the static exponent with
// found = false.
PhotonAssist photon_assist_extremum(const Potential1D& pot, double E, double theta);

}  // namespace tunnellab
