// SPDX-License-Identifier: Apache-2.0
#include "whittaker/gamma.hpp"

#include <cmath>

#include "whittaker/errors.hpp"
#include "whittaker/tuning.hpp"

namespace whittaker {

namespace {

// Lanczos approximation, g = 607/128, 15 coefficients.  Relative accuracy
// ~1e-15 throughout Re z >= 0.5.
constexpr double lanczos_g = 4.7421875;
constexpr double lanczos_c[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};
constexpr double half_log_two_pi = 0.91893853320467274178032973640561764;

// Valid for Re z >= 0.5.
Cplx log_gamma_lanczos(Cplx z) {
  Cplx acc = lanczos_c[0];
  for (int k = 1; k < 15; ++k) acc += lanczos_c[k] / (z + Cplx(k - 1, 0.0));
  const Cplx t = z + (lanczos_g - 0.5);
  return half_log_two_pi + (z - 0.5) * std::log(t) - t + std::log(acc);
}

// e^w - 1 with full relative accuracy for small |w|.
Cplx expm1_c(Cplx w) {
  if (std::abs(w) > 0.5) return std::exp(w) - 1.0;
  Cplx sum = 0.0, term = 1.0;
  for (int k = 1; k <= 24; ++k) {
    term *= w / static_cast<double>(k);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

void require_no_pole(Cplx z) {
  if (near_nonpositive_int(z, tuning::tol_pole))
    throw PoleError("gamma-type function evaluated at a non-positive integer");
}

// log sin(pi z) for Im z >= 0: the branch  -log 2 + i pi/2 - i pi z
// + Log(1 - e^{2 pi i z}), reduced about the nearest integer so the last
// factor is computed as -expm1(2 pi i (z - n)) without cancellation.
Cplx log_sin_pi_upper(Cplx z) {
  const double n = std::round(z.real());
  const Cplx eps = z - n;
  const Cplx one_minus_e = -expm1_c(Cplx(0.0, 2.0 * pi) * eps);
  return -std::log(2.0) + Cplx(0.0, pi / 2.0) - Cplx(0.0, pi) * z +
         std::log(one_minus_e);
}

}  // namespace

double log_gamma_real(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma_real requires x > 0");
  return std::lgamma(x);
}

Cplx log_sin_pi(Cplx z) {
  if (z.imag() < 0.0) return std::conj(log_sin_pi_upper(std::conj(z)));
  return log_sin_pi_upper(z);
}

Cplx log_gamma(Cplx z) {
  require_no_pole(z);
  if (z.imag() == 0.0 && z.real() > 0.0) return {std::lgamma(z.real()), 0.0};
  if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));
  if (z.real() >= 0.5) return log_gamma_lanczos(z);
  // Reflection; 1 - z has Re >= 0.5.  Holomorphic for Im z > 0 and matching
  // the principal branch there, hence equal to it.
  return std::log(pi) - log_sin_pi_upper(z) - log_gamma_lanczos(1.0 - z);
}

Cplx gamma(Cplx z) { return std::exp(log_gamma(z)); }

Cplx inv_gamma(Cplx z) {
  const double d = dist_to_nonpositive_int(z);
  if (d < 1e-8) {
    // 1/Gamma(z) = (-1)^q q! w (1 - psi(q+1) w + O(w^2)),  w = z + q.
    const long q = -nearest_int(z.real());
    const Cplx w = z + static_cast<double>(q);
    if (w == Cplx(0.0, 0.0)) return 0.0;
    const double sign = (q % 2 == 0) ? 1.0 : -1.0;
    const Cplx psi1 = digamma(Cplx(static_cast<double>(q) + 1.0, 0.0));
    return sign * std::exp(std::lgamma(static_cast<double>(q) + 1.0) + std::log(w)) *
           (1.0 - psi1 * w);
  }
  return std::exp(-log_gamma(z));
}

Cplx digamma(Cplx z) {
  require_no_pole(z);
  if (z.imag() < 0.0) return std::conj(digamma(std::conj(z)));
  if (z.real() < 0.5) {
    // psi(z) = psi(1-z) - pi cot(pi z), with the cotangent reduced about the
    // nearest integer for accuracy.
    const double n = std::round(z.real());
    const Cplx eps = z - n;
    const Cplx pe = pi * eps;
    const Cplx cot = std::cos(pe) / std::sin(pe);
    return digamma(1.0 - z) - pi * cot;
  }
  Cplx acc = 0.0;
  Cplx w = z;
  while (w.real() < 12.0) {
    acc -= 1.0 / w;
    w += 1.0;
  }
  // Asymptotic tail: ln w - 1/(2w) - sum B_{2n}/(2n w^{2n}).
  static constexpr double b[7] = {
      1.0 / 12.0,  -1.0 / 120.0,      1.0 / 252.0, -1.0 / 240.0,
      1.0 / 132.0, -691.0 / 32760.0,  1.0 / 12.0,
  };
  const Cplx inv2 = 1.0 / (w * w);
  Cplx tail = 0.0, p = inv2;
  for (int k = 0; k < 7; ++k) {
    tail += b[k] * p;
    p *= inv2;
  }
  return acc + std::log(w) - 0.5 / w - tail;
}

Cplx pochhammer(Cplx a, int n) {
  Cplx p = 1.0;
  for (int k = 0; k < n; ++k) p *= a + static_cast<double>(k);
  return p;
}

Cplx laguerre(int n, Cplx alpha, Cplx x) {
  if (n == 0) return 1.0;
  Cplx lm1 = 1.0;
  Cplx l = 1.0 + alpha - x;
  for (int k = 2; k <= n; ++k) {
    const double kk = static_cast<double>(k);
    const Cplx lnext =
        ((2.0 * kk - 1.0 + alpha - x) * l - (kk - 1.0 + alpha) * lm1) / kk;
    lm1 = l;
    l = lnext;
  }
  return l;
}

}  // namespace whittaker
