#pragma once

#include <stdexcept>

namespace tunnellab {

// Semiclassical validity of a parameter point: g large, drive weak, pulse
// long enough that the adiabatic exponent dominates.  Margin factor 0.1 on
// each inequality is project policy.
struct ValidityFlags {
  bool eq16a = false;
  bool eq18a = false;
  bool eq28 = false;

  bool all() const { return eq16a && eq18a && eq28; }
};

// Band-gap tunneling setup.  Everything downstream works in the dimensionless
// units a = gap/(2*field), t0 = a/velocity; g = gap*t0/hbar is the only
// parameter that survives.
struct ZenerSystem {
  double g = 0.0;

  // Physical inputs, kept when constructed from them; derived length a and
  // time t0 alongside.
  double gap = 0.0;
  double velocity = 0.0;
  double field = 0.0;
  double hbar = 0.0;
  double a = 0.0;
  double t0 = 0.0;
  bool has_physical = false;

  static ZenerSystem from_g(double g) {
    if (!(g > 0.0)) throw std::invalid_argument("ZenerSystem: g must be positive");
    ZenerSystem s;
    s.g = g;
    return s;
  }

  static ZenerSystem from_physical(double gap, double velocity, double field,
                                   double hbar) {
    if (!(gap > 0.0 && velocity > 0.0 && field > 0.0 && hbar > 0.0))
      throw std::invalid_argument("ZenerSystem: physical inputs must be positive");
    ZenerSystem s;
    s.gap = gap;
    s.velocity = velocity;
    s.field = field;
    s.hbar = hbar;
    s.a = gap / (2.0 * field);
    s.t0 = s.a / velocity;
    s.g = gap * s.t0 / hbar;
    s.has_physical = true;
    return s;
  }

  bool semiclassical() const { return g >= 10.0; }
};

}  // namespace tunnellab
