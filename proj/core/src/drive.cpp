#include "tunnellab/drive.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tunnellab/quadrature.hpp"

namespace tunnellab {

namespace {

constexpr double kPi = 3.14159265358979323846;

void validate(double r, double w) {
  if (!(r >= 0.0)) throw std::invalid_argument("drive: amplitude_ratio must be >= 0");
  if (!(w > 0.0)) throw std::invalid_argument("drive: width must be positive");
}

// Antiderivative of 1/(1+z^2)^3, zero at z = 0.
double lorentz_cubed_primitive(double z) {
  const double s = 1.0 + z * z;
  return z / (4.0 * s * s) + 3.0 * z / (8.0 * s) + 0.375 * std::atan(z);
}

// Oscillatory cosine transform over [0, T] in panels short enough that the
// adaptive rule never straddles many oscillations of either factor.
template <typename F>
double cosine_transform(F h, double T, double omega, double scale) {
  const double om = std::max(std::abs(omega), 1e-12);
  const double panel = std::min(scale, kPi / (2.0 * om));
  QuadOptions opt;
  opt.rel_tol = 1e-12;
  double total = 0.0;
  double a = 0.0;
  while (a < T) {
    const double b = std::min(a + panel, T);
    total += integrate([&](double t) { return h(t) * std::cos(omega * t); }, a, b, opt);
    a = b;
  }
  return 2.0 * total;
}

}  // namespace

Drive Drive::none() { return {}; }

Drive Drive::lorentzian_cubed(double amplitude_ratio, double width) {
  validate(amplitude_ratio, width);
  return {Shape::LorentzianCubed, amplitude_ratio, width};
}

Drive Drive::cosine(double amplitude_ratio, double width) {
  validate(amplitude_ratio, width);
  return {Shape::Cosine, amplitude_ratio, width};
}

Drive Drive::gaussian(double amplitude_ratio, double width) {
  validate(amplitude_ratio, width);
  return {Shape::Gaussian, amplitude_ratio, width};
}

double h_real(const Drive& d, double t) {
  const double r = d.amplitude_ratio;
  switch (d.shape) {
    case Shape::None:
      return 0.0;
    case Shape::LorentzianCubed: {
      const double z = t / d.width;
      const double s = 1.0 + z * z;
      return r / (s * s * s);
    }
    case Shape::Cosine:
      return r * std::cos(d.width * std::abs(t));
    case Shape::Gaussian: {
      const double z = d.width * t;
      return r * std::exp(-z * z);
    }
  }
  return 0.0;
}

double h_imag(const Drive& d, double tau) {
  const double r = d.amplitude_ratio;
  switch (d.shape) {
    case Shape::None:
      return 0.0;
    case Shape::LorentzianCubed: {
      const double z = tau / d.width;
      const double s = 1.0 - z * z;
      if (s == 0.0) throw SingularityError("h_imag: pole at |tau| = width");
      return r / (s * s * s);
    }
    case Shape::Cosine:
      return r * std::cosh(d.width * tau);
    case Shape::Gaussian: {
      const double z = d.width * tau;
      return r * std::exp(z * z);
    }
  }
  return 0.0;
}

double drive_integral(const Drive& d, double tau) {
  if (d.shape == Shape::None || tau == 0.0) return 0.0;
  if (d.shape == Shape::LorentzianCubed && std::abs(tau) >= d.width)
    throw SingularityError("drive_integral: |tau| reaches the pole at width");
  QuadOptions opt;
  opt.rel_tol = 1e-10;
  return integrate([&](double s) { return h_imag(d, s); }, 0.0, tau, opt);
}

double drive_integral_real(const Drive& d, double t) {
  const double r = d.amplitude_ratio;
  switch (d.shape) {
    case Shape::None:
      return 0.0;
    case Shape::LorentzianCubed:
      return r * d.width * lorentz_cubed_primitive(t / d.width);
    case Shape::Cosine:
      return r * std::sin(d.width * t) / d.width;
    case Shape::Gaussian:
      return r * std::sqrt(kPi) * std::erf(d.width * t) / (2.0 * d.width);
  }
  return 0.0;
}

double fourier_component(const Drive& d, double omega) {
  switch (d.shape) {
    case Shape::None:
      return 0.0;
    case Shape::LorentzianCubed:
      return cosine_transform([&](double t) { return h_real(d, t); }, 60.0 * d.width,
                              omega, d.width);
    case Shape::Cosine:
      // Window of 20 periods; the line at omega = width shows up as a peak of
      // height ~ amplitude_ratio * T rather than a delta function.
      return cosine_transform([&](double t) { return h_real(d, t); },
                              40.0 * kPi / d.width, omega, 1.0 / d.width);
    case Shape::Gaussian:
      return cosine_transform([&](double t) { return h_real(d, t); }, 12.0 / d.width,
                              omega, 1.0 / d.width);
  }
  return 0.0;
}

namespace detail {

double drive_integral_cf(const Drive& d, double tau) {
  const double r = d.amplitude_ratio;
  const double w = d.width;
  switch (d.shape) {
    case Shape::None:
      return 0.0;
    case Shape::LorentzianCubed: {
      if (std::abs(tau) >= w)
        throw SingularityError("drive_integral: |tau| reaches the pole at width");
      const double z = tau / w;
      const double s = 1.0 - z * z;
      return r * w * (z / (4.0 * s * s) + 3.0 * z / (8.0 * s) + 0.375 * std::atanh(z));
    }
    case Shape::Cosine:
      return r * std::sinh(w * tau) / w;
    case Shape::Gaussian: {
      const double x = w * tau;
      if (std::abs(x) > 4.0) return drive_integral(d, tau);
      // integral of e^{s^2}: all-positive series, no cancellation
      double term = x, sum = 0.0;
      for (int n = 0; n < 200; ++n) {
        sum += term / (2.0 * n + 1.0);
        term *= x * x / (n + 1.0);
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
      }
      return r * sum / w;
    }
  }
  return 0.0;
}

}  // namespace detail

cplx h_complex(const Drive& d, cplx z) {
  const double r = d.amplitude_ratio;
  switch (d.shape) {
    case Shape::None:
      return 0.0;
    case Shape::LorentzianCubed: {
      const cplx iw(0.0, d.width);
      if (std::abs(z - iw) < 1e-12 * d.width || std::abs(z + iw) < 1e-12 * d.width)
        throw SingularityError("h_complex: argument at a pole of the profile");
      const cplx zz = z / d.width;
      const cplx s = 1.0 + zz * zz;
      return r / (s * s * s);
    }
    case Shape::Cosine:
      return r * std::cos(d.width * z);
    case Shape::Gaussian:
      return r * std::exp(-(d.width * z) * (d.width * z));
  }
  return 0.0;
}

}  // namespace tunnellab
