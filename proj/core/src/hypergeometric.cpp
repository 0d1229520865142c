// SPDX-License-Identifier: Apache-2.0
#include "whittaker/hypergeometric.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "whittaker/double_double.hpp"
#include "whittaker/errors.hpp"
#include "whittaker/gamma.hpp"
#include "whittaker/tuning.hpp"

namespace whittaker {

namespace {

inline double abs_of(Cplx z) { return std::abs(z); }
inline double abs_of(const ddc& z) { return abs_est(z); }

inline double dist_int_any(Cplx c) {
  return std::abs(c - std::round(c.real()));
}

// sin(pi c), reduced about the nearest integer so it stays relatively
// accurate arbitrarily close to the zeros.
Cplx sin_pi(Cplx c) {
  const double n = std::round(c.real());
  const Cplx s = std::sin(pi * (c - n));
  return (static_cast<long>(n) % 2 == 0) ? s : -s;
}

struct SumInfo {
  double max_over_sum = 0.0;  // cancellation gauge: max |term| / |sum|
  std::size_t terms = 0;
  double final_ratio = 0.0;
  bool converged = false;
};

// Regularized Kummer series in scalar type CT (Cplx for the fast pass, ddc
// for the compensated re-run).  The caller has already reflected to
// Re z >= 0.  If snap_q >= 0, c is treated as exactly -snap_q and summation
// starts at the first surviving term.
template <typename CT>
CT reg_series(Cplx a, Cplx c, Cplx z, long snap_q, SumInfo* info) {
  CT t;
  long k0 = 0;
  // Factors like a + k are assembled inside CT (exact two_sum for the
  // double-double pass); pre-rounding them to double would put double-level
  // noise on every term and defeat the compensated summation.
  if (snap_q >= 0) {
    // c == -q: the terms k <= q vanish; t_{q+1} = (a)_{q+1} z^{q+1} / (q+1)!.
    k0 = snap_q + 1;
    t = CT(Cplx(1.0, 0.0));
    for (long j = 0; j < k0; ++j)
      t = t * (CT(a) + CT(Cplx(static_cast<double>(j), 0.0))) * CT(z) /
          CT(Cplx(j + 1.0, 0.0));
    c = Cplx(static_cast<double>(-snap_q), 0.0);
  } else {
    t = CT(inv_gamma(c));
  }
  CT sum = t;
  double max_t = abs_of(t);
  double prev = max_t;
  std::size_t used = 1;
  bool ok = false;
  double ratio = 0.0;
  for (long k = k0; k < static_cast<long>(tuning::max_terms); ++k) {
    const double kk = static_cast<double>(k);
    const CT kc = CT(Cplx(kk, 0.0));
    t = t * (CT(a) + kc) * CT(z) /
        ((CT(c) + kc) * CT(Cplx(kk + 1.0, 0.0)));
    sum = sum + t;
    ++used;
    const double at = abs_of(t);
    max_t = std::max(max_t, at);
    const double asum = abs_of(sum);
    if (at <= tuning::tol_series * asum && at <= prev) {
      ok = true;
      ratio = asum > 0.0 ? at / asum : 0.0;
      break;
    }
    prev = at;
  }
  if (info) {
    info->terms = used;
    info->converged = ok;
    info->final_ratio = ratio;
    const double asum = abs_of(sum);
    info->max_over_sum =
        asum > 0.0 ? max_t / asum : (max_t > 0.0 ? 1e300 : 0.0);
  }
  if (!ok) throw NoConvergence("confluent series exceeded its term budget");
  return sum;
}

long snap_index(Cplx c) {
  return near_nonpositive_int(c, 1e-12) ? -nearest_int(c.real()) : -1;
}

Cplx regularized_1f1_impl(Cplx a, Cplx c, Cplx z, SeriesDiagnostics* diag) {
  // Reflect to Re z >= 0: keeps the dominant exponential out of the terms.
  Cplx pref = 1.0;
  if (z.real() < 0.0) {
    pref = std::exp(z);
    a = c - a;
    z = -z;
  }
  const long q = snap_index(c);
  SumInfo info;
  Cplx s = reg_series<Cplx>(a, c, z, q, &info);
  if (info.max_over_sum > tuning::dd_retrigger) {
    SumInfo info2;
    s = reg_series<ddc>(a, c, z, q, &info2).to_cplx();
    info.terms += info2.terms;
    info.final_ratio = info2.final_ratio;
  }
  if (diag) {
    diag->terms_used += info.terms;
    diag->last_term_ratio = std::max(diag->last_term_ratio, info.final_ratio);
    diag->converged = info.converged;
  }
  return pref * s;
}

// Compensated evaluation used when a two-term combination cancels: the whole
// series in double-double, gamma-type prefactors in double.
ddc regularized_1f1_ddc(Cplx a, Cplx c, Cplx z) {
  Cplx pref = 1.0;
  if (z.real() < 0.0) {
    pref = std::exp(z);
    a = c - a;
    z = -z;
  }
  SumInfo info;
  ddc s = reg_series<ddc>(a, c, z, snap_index(c), &info);
  return s * ddc(pref);
}

Cplx laguerre_terminating_u(Cplx a, Cplx c, Cplx zv) {
  const long s = -nearest_int(a.real());
  if (s > 300) throw UnsupportedCase("terminating case of unreasonable degree");
  const double sign = (s % 2 == 0) ? 1.0 : -1.0;
  return sign * std::exp(std::lgamma(static_cast<double>(s) + 1.0)) *
         laguerre(static_cast<int>(s), c - 1.0, zv);
}

// One rotated-contour Laplace integral:
// Gamma(A) U(A,c,z) = e^{-i theta A} int_0^inf e^{-z e^{-i theta} s}
//                     s^{A-1} (1 + e^{-i theta} s)^{c-A-1} ds,
// |theta| <= pi/2 so that 1 + e^{-i theta} s keeps Re >= 1.
Cplx u_laplace_one(Cplx A, Cplx c, PolarZ z, double theta) {
  const Cplx rot{std::cos(theta), -std::sin(theta)};  // e^{-i theta}
  const Cplx zr = z.value() * rot;
  const Cplx am1 = A - 1.0;
  const Cplx pw = c - A - 1.0;
  auto f = [&](double s) -> Cplx {
    return std::exp(-zr * s + am1 * std::log(s) + pw * std::log(1.0 + rot * s));
  };
  static thread_local boost::math::quadrature::exp_sinh<double> integrator;
  double err = 0.0, l1 = 0.0;
  const Cplx q = integrator.integrate(f, 1e-13, &err, &l1);
  return std::exp(Cplx(0.0, -theta) * A) * inv_gamma(A) * q;
}

Cplx u_laplace(Cplx a, Cplx c, PolarZ z) {
  // Contour angle: follow arg z but never beyond +-pi/2 (the branch point of
  // (1+t) forbids more); decay rate |z| cos(ang - theta) stays positive for
  // |ang| <= 3pi/4, which the router guarantees.
  const double theta = std::clamp(z.ang, -pi / 2.0, pi / 2.0);
  const int K =
      a.real() < 0.6 ? static_cast<int>(std::ceil(0.6 - a.real())) : 0;
  const Cplx A = a + static_cast<double>(K);
  Cplx u_lo = u_laplace_one(A, c, z, theta);
  if (K == 0) return u_lo;
  Cplx u_hi = u_laplace_one(A + 1.0, c, z, theta);
  // Downward recurrence in the first parameter (the growing direction):
  // U(α-1) = (2α - c + z) U(α) - α (α - c + 1) U(α+1).
  const Cplx zv = z.value();
  Cplx alpha = A;
  for (int j = 0; j < K; ++j) {
    const Cplx u_prev =
        (2.0 * alpha - c + zv) * u_lo - alpha * (alpha - c + 1.0) * u_hi;
    u_hi = u_lo;
    u_lo = u_prev;
    alpha -= 1.0;
  }
  return u_lo;
}

// U(a, c, z) for c an exact integer nc (the logarithmic case), |z| modest.
Cplx u_integer_c(Cplx a, long nc, PolarZ z, SeriesDiagnostics* diag) {
  if (nc <= 0) {
    // U(a,c,z) = z^{1-c} U(a-c+1, 2-c, z); the target index 2-nc is >= 2.
    const Cplx ashift = a - static_cast<double>(nc) + 1.0;
    return z.pow(Cplx(1.0 - static_cast<double>(nc), 0.0)) *
           u_integer_c(ashift, 2 - nc, z, diag);
  }
  const long n = nc - 1;
  const Cplx zv = z.value();
  const Cplx lnz = z.log();
  Cplx coef = 1.0;
  Cplx psi_a = digamma(a);
  Cplx psi_1{-euler_gamma, 0.0};
  Cplx psi_n1 = digamma(Cplx(static_cast<double>(n) + 1.0, 0.0));
  Cplx sum1 = 0.0;
  bool ok = false;
  std::size_t used = 0;
  for (long k = 0; k < static_cast<long>(tuning::max_terms); ++k) {
    const double kk = static_cast<double>(k);
    sum1 += coef * (lnz + psi_a - psi_1 - psi_n1);
    ++used;
    const double bound =
        std::abs(coef) *
        (std::abs(lnz) + std::abs(psi_a) + std::abs(psi_1) + std::abs(psi_n1));
    if (k > 0 && bound <= tuning::tol_series * std::abs(sum1)) {
      ok = true;
      break;
    }
    psi_a += 1.0 / (a + kk);
    psi_1 += 1.0 / (1.0 + kk);
    psi_n1 += 1.0 / (static_cast<double>(n) + 1.0 + kk);
    coef *= (a + kk) * zv /
            ((static_cast<double>(n) + 1.0 + kk) * (kk + 1.0));
  }
  if (!ok) throw NoConvergence("logarithmic confluent series did not converge");
  const double sgn = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{n+1}
  const Cplx pref1 =
      sgn * inv_gamma(a - static_cast<double>(n)) *
      std::exp(-std::lgamma(static_cast<double>(n) + 1.0));
  Cplx result = pref1 * sum1;
  if (n >= 1) {
    Cplx t = 1.0, s2 = t;
    for (long k = 0; k < n - 1; ++k) {
      const double kk = static_cast<double>(k);
      t *= (a - static_cast<double>(n) + kk) * zv /
           ((1.0 - static_cast<double>(n) + kk) * (kk + 1.0));
      s2 += t;
    }
    const Cplx pref2 = std::exp(std::lgamma(static_cast<double>(n))) *
                       inv_gamma(a) * z.pow(Cplx(-static_cast<double>(n), 0.0));
    result += pref2 * s2;
  }
  if (diag) {
    diag->terms_used += used;
    diag->converged = ok;
  }
  return result;
}

// Two-term connection through the regularized Kummer pair, with a
// double-double re-run of both series when the combination cancels.
Cplx u_connection(Cplx a, Cplx c, PolarZ z, SeriesDiagnostics* diag) {
  const Cplx zv = z.value();
  const Cplx ig1 = inv_gamma(a - c + 1.0);
  const Cplx ig2 = inv_gamma(a);
  const Cplx zp = z.pow(1.0 - c);
  const Cplx t1 = regularized_1f1_impl(a, c, zv, diag) * ig1;
  const Cplx t2 = zp * regularized_1f1_impl(a - c + 1.0, 2.0 - c, zv, diag) * ig2;
  Cplx diff = t1 - t2;
  const double big = std::max(std::abs(t1), std::abs(t2));
  if (std::abs(diff) < tuning::cancel_guard * big) {
    // The combination cancels.  Strong cancellation comes from the e^{Re z}
    // growth of both Kummer terms, so |z| is moderate-or-large here and the
    // cancellation-free Laplace integral is applicable whenever its contour
    // condition holds.  Otherwise fall back to a double-double re-run of the
    // two series; its prefactors are double-rounded, which caps that path at
    // roughly 1e-16 * (cancellation ratio) -- acceptable only in the small-z
    // corner where the ratio itself stays mild.
    if (z.mod >= 3.0 && std::abs(z.ang) <= 0.75 * pi) return u_laplace(a, c, z);
    const ddc d1 = regularized_1f1_ddc(a, c, zv) * ddc(ig1);
    const ddc d2 = ddc(zp) * regularized_1f1_ddc(a - c + 1.0, 2.0 - c, zv) * ddc(ig2);
    diff = (d1 - d2).to_cplx();
  }
  return (pi / sin_pi(c)) * diff;
}

}  // namespace

Cplx regularized_1f1(Cplx a, Cplx c, Cplx z, SeriesDiagnostics* diag) {
  if (diag) *diag = SeriesDiagnostics{};
  return regularized_1f1_impl(a, c, z, diag);
}

Cplx kummer_1f1(Cplx a, Cplx c, Cplx z, SeriesDiagnostics* diag) {
  return gamma(c) * regularized_1f1(a, c, z, diag);
}

Cplx f20_asymptotic(Cplx a, Cplx b, Cplx w, SeriesDiagnostics* diag) {
  if (diag) *diag = SeriesDiagnostics{};
  if (std::abs(w) > tuning::w_max_2f0)
    throw DomainError("2F0 tail requested outside its smallness window");
  Cplx t = 1.0, sum = 1.0;
  double prev = 1.0;
  double est = 0.0;
  std::size_t used = 1;
  bool stopped = false;
  for (long k = 0; k < static_cast<long>(tuning::max_terms); ++k) {
    const double kk = static_cast<double>(k);
    const Cplx next = t * (a + kk) * (b + kk) * w / (kk + 1.0);
    const double an = std::abs(next);
    if (k == 0 && an >= 1.0 && an > tuning::tol_series)
      throw AsymptoticDivergence("2F0 terms grow from the first step");
    if (an >= prev) {  // optimal truncation point reached
      est = an;
      stopped = true;
      break;
    }
    t = next;
    sum += t;
    ++used;
    prev = an;
    if (an <= tuning::tol_series * std::abs(sum)) {
      est = an;
      stopped = true;
      break;
    }
  }
  if (!stopped) throw NoConvergence("2F0 tail failed to truncate");
  if (diag) {
    diag->terms_used = used;
    diag->last_term_ratio = est / std::abs(sum);
    diag->converged = est <= 1e-10 * std::abs(sum);
  }
  return sum;
}

Cplx regularized_1f1_asymptotic(Cplx a, Cplx c, PolarZ z,
                                SeriesDiagnostics* diag) {
  if (diag) *diag = SeriesDiagnostics{};
  const Cplx zv = z.value();
  const double sigma = z.ang >= 0.0 ? 1.0 : -1.0;
  SeriesDiagnostics d1, d2;
  const Cplx f1 = f20_asymptotic(a, a - c + 1.0, -1.0 / zv, &d1);
  const Cplx p1 =
      std::exp(Cplx(0.0, sigma * pi) * a - a * z.log()) * inv_gamma(c - a) * f1;
  const Cplx f2 = f20_asymptotic(c - a, 1.0 - a, 1.0 / zv, &d2);
  const Cplx p2 = std::exp(zv + (a - c) * z.log()) * inv_gamma(a) * f2;
  if (diag) {
    diag->terms_used = d1.terms_used + d2.terms_used;
    diag->last_term_ratio = std::max(d1.last_term_ratio, d2.last_term_ratio);
    diag->converged = d1.converged && d2.converged;
  }
  return p1 + p2;
}

Cplx tricomi_u(Cplx a, Cplx c, PolarZ z, SeriesDiagnostics* diag) {
  if (diag) *diag = SeriesDiagnostics{};
  if (std::abs(z.ang) > pi + 1e-9)
    throw DomainError("tricomi_u requires the principal sheet |ang| <= pi");
  if (!(z.mod > 0.0))
    throw BranchPointError("tricomi_u: z = 0 is a branch point");

  if (near_nonpositive_int(a, tuning::tol_pole))
    return laguerre_terminating_u(a, c, z.value());

  const double r = z.mod;
  const double abs_ang = std::abs(z.ang);
  const double dc = dist_int_any(c);

  if (r > tuning::z_switch) {
    try {
      const Cplx f = f20_asymptotic(a, a - c + 1.0, -1.0 / z.value(), diag);
      return z.pow(-a) * f;
    } catch (const AsymptoticDivergence&) {
      if (abs_ang <= 0.75 * pi + 1e-12) return u_laplace(a, c, z);
      return u_connection(a, c, z, diag);
    }
  }
  if (dc < 1e-10 && r < tuning::z_quadrature)
    return u_integer_c(a, nearest_int(c.real()), z, diag);
  if (dc < 3e-5) {
    if (abs_ang <= 0.75 * pi + 1e-12) return u_laplace(a, c, z);
    throw UnsupportedCase(
        "near-integer third parameter outside the contour sector");
  }
  if (r >= tuning::z_quadrature && abs_ang <= 0.5 * pi + 1e-12)
    return u_laplace(a, c, z);
  return u_connection(a, c, z, diag);
}

}  // namespace whittaker
