// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "whittaker/complex_ops.hpp"

// Minimal double-double (~31 significant digits) arithmetic, used to
// re-evaluate series whose partial sums cancel far below the largest term.
// Only the operations the series kernels need are provided.
namespace whittaker {

struct dd {
  double hi = 0.0;
  double lo = 0.0;

  dd() = default;
  dd(double h) : hi(h), lo(0.0) {}
  dd(double h, double l) : hi(h), lo(l) {}

  double to_double() const { return hi + lo; }
};

namespace detail {

inline dd two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

// Requires |a| >= |b| or a == 0.
inline dd quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

}  // namespace detail

inline dd operator+(dd a, dd b) {
  dd s = detail::two_sum(a.hi, b.hi);
  dd t = detail::two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = detail::quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return detail::quick_two_sum(s.hi, s.lo);
}

inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }

inline dd operator*(dd a, dd b) {
  dd p = detail::two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return detail::quick_two_sum(p.hi, p.lo);
}

inline dd operator/(dd a, dd b) {
  const double q1 = a.hi / b.hi;
  dd r = a - dd(q1) * b;
  const double q2 = r.hi / b.hi;
  r = r - dd(q2) * b;
  const double q3 = r.hi / b.hi;
  dd q = detail::quick_two_sum(q1, q2);
  return q + dd(q3);
}

inline double abs_est(dd a) { return std::abs(a.hi); }

// Complex number with double-double components.
struct ddc {
  dd re;
  dd im;

  ddc() = default;
  ddc(dd r, dd i) : re(r), im(i) {}
  ddc(Cplx z) : re(z.real()), im(z.imag()) {}

  Cplx to_cplx() const { return {re.to_double(), im.to_double()}; }
};

inline ddc operator+(ddc a, ddc b) { return {a.re + b.re, a.im + b.im}; }
inline ddc operator-(ddc a, ddc b) { return {a.re - b.re, a.im - b.im}; }

inline ddc operator*(ddc a, ddc b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline ddc operator/(ddc a, ddc b) {
  const dd den = b.re * b.re + b.im * b.im;
  const ddc num = a * ddc{b.re, -b.im};
  return {num.re / den, num.im / den};
}

inline double abs_est(ddc a) { return std::hypot(a.re.hi, a.im.hi); }

}  // namespace whittaker
