// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>

namespace whittaker {

using Cplx = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

// A nonzero complex number kept as modulus and *unreduced* phase, so that
// rotations like e^{+i pi} z and e^{-i pi} z stay distinguishable.  All
// powers and logs taken through this type use the tracked phase, never the
// principal argument of the collapsed value.
struct PolarZ {
  double mod = 0.0;  // |z| >= 0
  double ang = 0.0;  // phase in radians, not wrapped

  // Principal phase in (-pi, pi], with the negative real axis assigned +pi
  // (limit from the upper half-plane).
  static PolarZ principal(Cplx z) {
    double a = std::arg(z);
    if (z.imag() == 0.0 && z.real() < 0.0) a = pi;
    return {std::abs(z), a};
  }

  static PolarZ from_positive(double x) { return {x, 0.0}; }

  PolarZ rotated(double dphi) const { return {mod, ang + dphi}; }

  Cplx value() const { return mod * Cplx{std::cos(ang), std::sin(ang)}; }

  Cplx log() const { return {std::log(mod), ang}; }

  // z^lambda = exp(lambda * (log mod + i ang)) on the tracked sheet.
  Cplx pow(Cplx lambda) const { return std::exp(lambda * log()); }
};

// Distance from z to the nearest non-positive integer (0, -1, -2, ...).
inline double dist_to_nonpositive_int(Cplx z) {
  const double n = std::round(z.real());
  if (n > 0.0) return std::abs(z - Cplx{0.0, 0.0});
  return std::abs(z - Cplx{n, 0.0});
}

inline bool near_nonpositive_int(Cplx z, double tol) {
  return dist_to_nonpositive_int(z) < tol;
}

// Nearest integer to Re(z); pair with dist_to_nonpositive_int for pole indexing.
inline long nearest_int(double x) { return std::lround(x); }

inline bool is_real(Cplx z) { return z.imag() == 0.0; }

}  // namespace whittaker
