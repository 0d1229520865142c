// SPDX-License-Identifier: Apache-2.0
#include "whittaker/functions.hpp"

#include <cmath>
#include <complex>

#include "whittaker/errors.hpp"
#include "whittaker/gamma.hpp"
#include "whittaker/hypergeometric.hpp"
#include "whittaker/tuning.hpp"

namespace whittaker {

namespace {

// Route the regularized confluent series: power series up to |z| = z_switch,
// compound large-argument expansion beyond, falling back to the (slow but
// compensated) series when the expansion cannot reach tolerance.
Cplx f_routed(const Cplx& a, const Cplx& c, PolarZ z) {
  if (z.mod > tuning::z_switch) {
    try {
      return regularized_1f1_asymptotic(a, c, z);
    } catch (const AsymptoticDivergence&) {
      return regularized_1f1(a, c, z.value());
    }
  }
  return regularized_1f1(a, c, z.value());
}

}  // namespace

ValueDeriv eval_I(const WhittakerParams& p, PolarZ z) {
  if (!(z.mod > 0.0)) throw BranchPointError("eval_I: argument at branch point");
  const Cplx a = 0.5 + p.m - p.beta;
  const Cplx c = 1.0 + 2.0 * p.m;
  const Cplx zv = z.value();
  const Cplx f0 = f_routed(a, c, z);
  const Cplx f1 = f_routed(a + 1.0, c + 1.0, z);
  const Cplx pref = std::exp((0.5 + p.m) * z.log() - zv / 2.0);
  const Cplx val = pref * f0;
  // d/dz of the regularized series shifts both parameters up by one.
  const Cplx dval = ((0.5 + p.m) / zv - 0.5) * val + pref * a * f1;
  return {val, dval};
}

ValueDeriv eval_K(const WhittakerParams& p, PolarZ z) {
  if (!(z.mod > 0.0)) throw BranchPointError("eval_K: argument at branch point");
  const Cplx a = 0.5 + p.m - p.beta;
  const Cplx c = 1.0 + 2.0 * p.m;
  const Cplx zv = z.value();
  const Cplx u0 = tricomi_u(a, c, z);
  const Cplx u1 = tricomi_u(a + 1.0, c + 1.0, z);
  const Cplx pref = std::exp((0.5 + p.m) * z.log() - zv / 2.0);
  const Cplx val = pref * u0;
  const Cplx dval = ((0.5 + p.m) / zv - 0.5) * val - pref * a * u1;
  return {val, dval};
}

ValueDeriv eval_H(int sign, const WhittakerParams& p, PolarZ z) {
  const double s = sign >= 0 ? 1.0 : -1.0;
  const Cplx phase = std::exp(Cplx(0.0, -s * pi / 2.0) * (0.5 + p.m));
  const Cplx rot = Cplx(0.0, -s);  // e^{-i s pi/2}, the argument rotation
  const WhittakerParams q{Cplx(0.0, s) * p.beta, p.m};
  const ValueDeriv k = eval_K(q, z.rotated(-s * pi / 2.0));
  return {phase * k.f, phase * rot * k.df};
}

JPair eval_J_detail(const WhittakerParams& p, PolarZ z) {
  auto one_rotation = [&p, &z](double s) -> ValueDeriv {
    const Cplx phase = std::exp(Cplx(0.0, -s * pi / 2.0) * (0.5 + p.m));
    const Cplx rot = Cplx(0.0, s);  // e^{i s pi/2}
    const WhittakerParams q{Cplx(0.0, -s) * p.beta, p.m};
    const ValueDeriv i = eval_I(q, z.rotated(s * pi / 2.0));
    return {phase * i.f, phase * rot * i.df};
  };
  const ValueDeriv upper = one_rotation(1.0);
  const ValueDeriv lower = one_rotation(-1.0);
  const ValueDeriv mean{0.5 * (upper.f + lower.f), 0.5 * (upper.df + lower.df)};
  const double scale = std::abs(upper.f) + std::abs(lower.f) + 1e-300;
  return {mean, std::abs(upper.f - lower.f) / scale};
}

ValueDeriv eval_J(const WhittakerParams& p, PolarZ z) {
  return eval_J_detail(p, z).mean;
}

Cplx eval_I_value(const WhittakerParams& p, PolarZ z) {
  if (!(z.mod > 0.0)) throw BranchPointError("eval_I: argument at branch point");
  const Cplx a = 0.5 + p.m - p.beta;
  const Cplx c = 1.0 + 2.0 * p.m;
  const Cplx pref = std::exp((0.5 + p.m) * z.log() - z.value() / 2.0);
  return pref * f_routed(a, c, z);
}

Cplx eval_K_value(const WhittakerParams& p, PolarZ z) {
  if (!(z.mod > 0.0)) throw BranchPointError("eval_K: argument at branch point");
  const Cplx a = 0.5 + p.m - p.beta;
  const Cplx c = 1.0 + 2.0 * p.m;
  const Cplx pref = std::exp((0.5 + p.m) * z.log() - z.value() / 2.0);
  return pref * tricomi_u(a, c, z);
}

Cplx eval_H_value(int sign, const WhittakerParams& p, PolarZ z) {
  const double s = sign >= 0 ? 1.0 : -1.0;
  const Cplx phase = std::exp(Cplx(0.0, -s * pi / 2.0) * (0.5 + p.m));
  const WhittakerParams q{Cplx(0.0, s) * p.beta, p.m};
  return phase * eval_K_value(q, z.rotated(-s * pi / 2.0));
}

Cplx eval_J_value(const WhittakerParams& p, PolarZ z) {
  auto one_rotation = [&p, &z](double s) -> Cplx {
    const Cplx phase = std::exp(Cplx(0.0, -s * pi / 2.0) * (0.5 + p.m));
    const WhittakerParams q{Cplx(0.0, -s) * p.beta, p.m};
    return phase * eval_I_value(q, z.rotated(s * pi / 2.0));
  };
  return 0.5 * (one_rotation(1.0) + one_rotation(-1.0));
}

namespace {

// Half-line Bessel-type solution Jcal_mu(w) = sqrt(pi w / 2) J_mu(w) by its
// power series (small w only; the alternating tail loses ~e^w of precision).
// Used where Gamma(1/2+mu) has a pole, i.e. mu near -1/2 - n: mu + k stays
// well away from the integers, so the coefficient ratio below is safe.
ValueDeriv bessel_j_series(const Cplx& mu, const Cplx& w) {
  const double root_half_pi = std::sqrt(pi / 2.0);
  const Cplx logw = std::log(w);  // callers keep w off the negative real axis
  Cplx sum = 0.0, dsum = 0.0;
  // coef_k = (-1)^k 2^{-mu-2k} / (k! Gamma(mu+k+1))
  Cplx coef = inv_gamma(mu + 1.0) * std::exp(-mu * std::log(2.0));
  double prev = 1e300;
  for (int k = 0; k < 200; ++k) {
    if (k > 0) {
      const double kk = static_cast<double>(k);
      coef *= -0.25 / (kk * (mu + kk));
    }
    const Cplx expo = 0.5 + mu + 2.0 * static_cast<double>(k);
    const Cplx t = coef * std::exp(expo * logw);
    sum += t;
    dsum += t * expo;
    const double at = std::abs(t);
    if (k >= 8 && at <= tuning::tol_series * std::abs(sum) && at <= prev) break;
    prev = at;
  }
  return {root_half_pi * sum, root_half_pi * dsum / w};
}

}  // namespace

ValueDeriv zero_energy_j(const WhittakerParams& p, double x) {
  if (p.beta == Cplx(0.0)) throw DomainError("zero_energy_j: beta must be nonzero");
  if (!(x > 0.0)) throw DomainError("zero_energy_j: x must be positive");
  const Cplx mu = 2.0 * p.m;
  const Cplx sw = std::sqrt(p.beta * x);  // sqrt(beta x), principal branch
  const Cplx w = 2.0 * sw;
  const double x4 = std::pow(x, 0.25);
  ValueDeriv jw;  // Jcal_mu(w) and d/dw
  if (dist_to_nonpositive_int(0.5 + mu) < tuning::tol_degen) {
    // Gamma(1/2+mu) pole: the generic composition below is 0 * inf.
    if (std::abs(w) <= 8.0) {
      jw = bessel_j_series(mu, w);
    } else {
      // Hankel average J = (H+ + H-)/2 in the same normalization.
      const WhittakerParams q{Cplx(0.0), mu};
      const PolarZ z2 = PolarZ::principal(2.0 * w);
      const ValueDeriv hp = eval_H(+1, q, z2);
      const ValueDeriv hm = eval_H(-1, q, z2);
      jw = {0.5 * (hp.f + hm.f), (hp.df + hm.df)};  // d/dw = 2 * d/d(2w) * 1/2
    }
  } else {
    // Jcal_mu(w) = Gamma(1/2+mu)/2 * J_{0,mu}(2w).
    const Cplx g = gamma(0.5 + mu);
    const WhittakerParams q{Cplx(0.0), mu};
    const ValueDeriv j0 = eval_J(q, PolarZ::principal(2.0 * w));
    jw = {0.5 * g * j0.f, g * j0.df};  // chain rule in w: * 2 * 1/2
  }
  const Cplx val = x4 * jw.f;
  const Cplx dwdx = sw / x;  // d/dx of 2 sqrt(beta x)
  const Cplx dval = val / (4.0 * x) + x4 * jw.df * dwdx;
  return {val, dval};
}

ValueDeriv zero_energy_y(const WhittakerParams& p, double x) {
  if (p.beta == Cplx(0.0)) throw DomainError("zero_energy_y: beta must be nonzero");
  if (!(x > 0.0)) throw DomainError("zero_energy_y: x must be positive");
  const Cplx mu = 2.0 * p.m;
  const Cplx sw = std::sqrt(p.beta * x);
  const Cplx w = 2.0 * sw;
  const double x4 = std::pow(x, 0.25);
  // Ycal_mu(w) = (H+_mu(w) - H-_mu(w)) / (2i), pole-free in mu.
  const WhittakerParams q{Cplx(0.0), mu};
  const PolarZ z2 = PolarZ::principal(2.0 * w);
  const ValueDeriv hp = eval_H(+1, q, z2);
  const ValueDeriv hm = eval_H(-1, q, z2);
  // d/dw of Hcal±(w) = (eval_H at 2w) picks up the factor 2 from the chain rule.
  const ValueDeriv yw{(hp.f - hm.f) / Cplx(0.0, 2.0), (hp.df - hm.df) / Cplx(0.0, 1.0)};
  const Cplx val = x4 * yw.f;
  const Cplx dwdx = sw / x;
  const Cplx dval = val / (4.0 * x) + x4 * yw.df * dwdx;
  return {val, dval};
}

}  // namespace whittaker
