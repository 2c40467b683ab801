#pragma once

#include <complex>

#include "tunnellab/errors.hpp"

namespace tunnellab {

using cplx = std::complex<double>;

enum class Shape { None, LorentzianCubed, Cosine, Gaussian };

// Nonstationary field profile h(t) = E(t)/E0, dimensionless throughout.
// width is the pulse half-width theta/t0 for LorentzianCubed and the
// dimensionless frequency Omega*t0 for Cosine and Gaussian.  All shipped
// shapes are even in t, so evaluation on the imaginary axis is real.
struct Drive {
  Shape shape = Shape::None;
  double amplitude_ratio = 0.0;
  double width = 1.0;

  static Drive none();
  static Drive lorentzian_cubed(double amplitude_ratio, double width);
  static Drive cosine(double amplitude_ratio, double width);
  static Drive gaussian(double amplitude_ratio, double width);
};

// h(t) on the real axis.
double h_real(const Drive& d, double t);

// h(i*tau); LorentzianCubed has poles at |tau| = width and is strictly
// increasing on [0, width).
double h_imag(const Drive& d, double tau);

// I(tau): integral of h(i*tau') over [0, tau] by adaptive quadrature,
// relative tolerance 1e-10.
double drive_integral(const Drive& d, double tau);

// Integral of h over [0, t] on the real axis, closed form per shape.
double drive_integral_real(const Drive& d, double t);

// Cosine transform integral h(t)*cos(omega*t) dt over the real line.  Pulse
// shapes are windowed far beyond their support; the monochromatic shape gets
// a finite window since its transform proper is a delta function.
double fourier_component(const Drive& d, double omega);

// h at a complex argument.  SingularityError within 1e-12 of a pole.
cplx h_complex(const Drive& d, cplx z);

namespace detail {

// Same integral as drive_integral but through per-shape antiderivatives
// (power series for the Gaussian); hot paths use this, the public entry
// point keeps its quadrature contract.
double drive_integral_cf(const Drive& d, double tau);

}  // namespace detail

}  // namespace tunnellab
