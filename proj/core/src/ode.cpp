// SPDX-License-Identifier: Apache-2.0
#include "whittaker/ode.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <boost/numeric/odeint.hpp>

#include "whittaker/errors.hpp"
#include "whittaker/gamma.hpp"
#include "whittaker/tuning.hpp"

namespace whittaker {

namespace {

constexpr double seed_degeneracy_guard = 0.02;

// Frobenius series x^{1/2+m} sum d_j x^j with
// d_j = [-beta d_{j-1} + E d_{j-2}] / (j (j+2m)).
ValueDeriv frobenius(const Cplx& beta, const Cplx& m, const Cplx& e, const Cplx& d0, double x) {
  Cplx djm1 = 0.0, dj = d0;
  Cplx v = 0.0, dv = 0.0;
  const Cplx base = 0.5 + m;
  const double lx = std::log(x);
  for (int j = 0;; ++j) {
    const Cplx expo = base + static_cast<double>(j);
    const Cplx term = dj * std::exp(expo * lx);
    v += term;
    dv += term * expo / x;
    if (j > 2 && std::abs(term) < 1e-18 * std::abs(v)) break;
    if (j > 80) throw SeriesNotApplicable("seed series did not converge; x too large");
    const double jn = j + 1.0;
    const Cplx denom = jn * (jn + 2.0 * m);
    if (std::abs(denom) < seed_degeneracy_guard)
      throw SeriesNotApplicable("seed series hits a degenerate index (2m near a negative integer)");
    const Cplx next = (-beta * dj + e * djm1) / denom;
    djm1 = dj;
    dj = next;
  }
  return {v, dv};
}

// Inverse-power far-field series z^{beta} e^{-z/2} sum_s c_s z^{-s}, with
// c_{s+1} = -c_s (a+s)(b+s)/(s+1), a = 1/2+m-beta, b = 1/2-m-beta, truncated
// at the smallest term.  Valid for complex z away from the negative real axis.
ValueDeriv far_series(const Cplx& beta, const Cplx& m, const Cplx& z) {
  const Cplx a = 0.5 + m - beta;
  const Cplx b = 0.5 - m - beta;
  const Cplx logz = std::log(z);
  Cplx c = 1.0, s_val = 0.0, s_der = 0.0;
  double best = 1e300;
  for (int s = 0; s < 200; ++s) {
    const Cplx zp = std::exp(-static_cast<double>(s) * logz);
    const Cplx term = c * zp;
    const double at = std::abs(term);
    if (at >= best) break;  // divergent tail reached: stop at smallest term
    best = at;
    s_val += term;
    s_der += term * (-static_cast<double>(s)) / z;
    if (at < 1e-18 * std::abs(s_val)) break;
    c *= -(a + static_cast<double>(s)) * (b + static_cast<double>(s)) / (s + 1.0);
  }
  if (best > 1e-11 * std::abs(s_val))
    throw SeriesNotApplicable("far-field series cannot reach seed tolerance; move x outward");
  const Cplx pref = std::exp(beta * logz - z / 2.0);
  return {pref * s_val, pref * (s_val * (beta / z - 0.5) + s_der)};
}

}  // namespace

ValueDeriv seed_from_series(SolutionKind kind, const WhittakerParams& p, double x) {
  if (!(x > 0.0)) throw DomainError("seed_from_series: need x > 0");
  switch (kind) {
    case SolutionKind::RegularHyper:
      return frobenius(p.beta, p.m, Cplx(0.25), inv_gamma(1.0 + 2.0 * p.m), x);
    case SolutionKind::RegularTrig:
      return frobenius(p.beta, p.m, Cplx(-0.25), inv_gamma(1.0 + 2.0 * p.m), x);
    case SolutionKind::ZeroEnergyRegular: {
      const Cplx d0 = std::sqrt(pi) * std::exp((0.25 + p.m) * std::log(p.beta)) *
                      inv_gamma(1.0 + 2.0 * p.m);
      return frobenius(p.beta, p.m, Cplx(0.0), d0, x);
    }
    case SolutionKind::ZeroEnergySecond: {
      // Ycal = [cos(2 pi m) Jcal_{m} - Jcal_{-m}] / sin(2 pi m) at the level
      // of the two Frobenius branches (exponents 1/2 +/- m).
      const Cplx s2m = std::sin(2.0 * pi * p.m);
      if (std::abs(s2m) < seed_degeneracy_guard)
        throw SeriesNotApplicable("zero-energy second seed needs 2m away from the integers");
      const Cplx d0p = std::sqrt(pi) * std::exp((0.25 + p.m) * std::log(p.beta)) *
                       inv_gamma(1.0 + 2.0 * p.m);
      const Cplx d0m = std::sqrt(pi) * std::exp((0.25 - p.m) * std::log(p.beta)) *
                       inv_gamma(1.0 - 2.0 * p.m);
      const ValueDeriv plus = frobenius(p.beta, p.m, Cplx(0.0), d0p, x);
      const ValueDeriv minus = frobenius(p.beta, -p.m, Cplx(0.0), d0m, x);
      const Cplx c = std::cos(2.0 * pi * p.m);
      return {(c * plus.f - minus.f) / s2m, (c * plus.df - minus.df) / s2m};
    }
    default:
      throw SeriesNotApplicable("seed_from_series: kind is seeded at infinity");
  }
}

ValueDeriv seed_from_asymptotic(SolutionKind kind, const WhittakerParams& p, double x) {
  if (!(x > 0.0)) throw DomainError("seed_from_asymptotic: need x > 0");
  switch (kind) {
    case SolutionKind::DecayingHyper:
      return far_series(p.beta, p.m, Cplx(x));
    case SolutionKind::OutgoingWave:
    case SolutionKind::IncomingWave: {
      // H±(x) = e^{∓ i pi (1/2+m)/2} K_{± i beta, m}(e^{∓ i pi/2} x): rotate
      // the decaying far field; the chain rule brings e^{∓ i pi/2} into v'.
      const double s = (kind == SolutionKind::OutgoingWave) ? 1.0 : -1.0;
      const Cplx phase = std::exp(Cplx(0.0, -s * pi / 2.0) * (0.5 + p.m));
      const Cplx rot = Cplx(0.0, -s);
      const ValueDeriv k = far_series(Cplx(0.0, s) * p.beta, p.m, rot * x);
      return {phase * k.f, phase * rot * k.df};
    }
    default:
      throw SeriesNotApplicable("seed_from_asymptotic: kind is seeded at zero");
  }
}

std::vector<ValueDeriv> integrate(const OdeProblem& prob,
                                  const std::vector<double>& sample_points,
                                  double tol) {
  namespace odeint = boost::numeric::odeint;
  using State = std::array<double, 4>;

  const double dir = prob.x_end >= prob.x_start ? 1.0 : -1.0;
  const double span = std::abs(prob.x_end - prob.x_start);
  if (span <= 0.0) throw DomainError("integrate: empty interval");
  double prev = prob.x_start;
  for (double s : sample_points) {
    if ((s - prev) * dir < 0.0 || (prob.x_end - s) * dir < 0.0)
      throw DomainError("integrate: sample points must run monotonically toward x_end");
    prev = s;
  }

  const Cplx m2q = prob.params.m * prob.params.m - 0.25;
  const Cplx beta = prob.params.beta;
  const Cplx e = prob.energy_term;
  auto rhs = [&](const State& s, State& ds, double x) {
    const Cplx v(s[0], s[1]), dv(s[2], s[3]);
    const Cplx ddv = (m2q / (x * x) - beta / x + e) * v;
    ds[0] = dv.real();
    ds[1] = dv.imag();
    ds[2] = ddv.real();
    ds[3] = ddv.imag();
  };

  auto stepper = odeint::make_controlled(1e-14, tol, odeint::runge_kutta_fehlberg78<State>());
  // The equation is linear, so rescale the seed to unit size: the stepper's
  // absolute error floor would otherwise dominate a seed like e^{-30} (a
  // far-field decaying solution) and destroy its relative accuracy.
  const double scale = std::abs(prob.seed.f) + std::abs(prob.seed.df);
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw DomainError("integrate: seed must be nonzero and finite");
  State s{prob.seed.f.real() / scale, prob.seed.f.imag() / scale,
          prob.seed.df.real() / scale, prob.seed.df.imag() / scale};
  double x = prob.x_start;
  double dt = dir * std::min(1e-3, span / 16.0);
  const double dt_floor = 1e-13 * span;

  std::vector<ValueDeriv> out;
  out.reserve(sample_points.size());
  for (double target : sample_points) {
    while (std::abs(target - x) > dt_floor) {
      if ((x + dt - target) * dir > 0.0) dt = target - x;  // land exactly
      const auto res = stepper.try_step(rhs, s, x, dt);
      if (res == odeint::fail && std::abs(dt) < dt_floor)
        throw StiffnessFailure("integrate: step size collapsed");
    }
    x = target;
    out.push_back({scale * Cplx(s[0], s[1]), scale * Cplx(s[2], s[3])});
  }
  return out;
}

}  // namespace whittaker
