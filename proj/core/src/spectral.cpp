// SPDX-License-Identifier: Apache-2.0
#include "whittaker/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "whittaker/errors.hpp"
#include "whittaker/gamma.hpp"
#include "whittaker/tuning.hpp"

namespace whittaker {

namespace {

bool is_exactly(const Cplx& z, double re) { return z.real() == re && z.imag() == 0.0; }

// The operator family is singular at (beta, m) = (0, -1/2); for beta != 0 the
// m = -1/2 member coincides with the m = +1/2 one and is evaluated there.
Cplx routed_m(const WhittakerParams& p) {
  if (is_exactly(p.m, -0.5)) {
    if (p.beta == Cplx(0.0))
      throw SingularFamilyPoint("(beta, m) = (0, -1/2): the family has no member here");
    return Cplx(0.5, 0.0);
  }
  return p.m;
}

void require_family_domain(const WhittakerParams& p) {
  if (!(p.m.real() > -1.0))
    throw DomainError("operator family requires Re(m) > -1");
}

}  // namespace

const char* to_string(SpectralKind k) {
  switch (k) {
    case SpectralKind::Eigenvalue: return "eigenvalue";
    case SpectralKind::Resonance: return "resonance";
    default: return "undefined";
  }
}

std::vector<EigenRecord> eigenvalues(const WhittakerParams& p, int n_max) {
  require_family_domain(p);
  std::vector<EigenRecord> out;
  if (p.beta == Cplx(0.0)) {
    if (is_exactly(p.m, -0.5))
      throw SingularFamilyPoint("(beta, m) = (0, -1/2): the family has no member here");
    return out;  // no discrete spectrum at beta = 0
  }
  const bool skip_zero = is_exactly(p.m, -0.5);  // this member equals m = +1/2
  for (int n = skip_zero ? 1 : 0; n <= n_max; ++n) {
    const Cplx d = static_cast<double>(n) + p.m + 0.5;
    const double t = (p.beta * std::conj(d)).real();
    const double thr = tuning::classify_tol * std::abs(p.beta) * std::abs(d);
    SpectralKind kind = SpectralKind::Undefined;
    if (t > thr)
      kind = SpectralKind::Eigenvalue;
    else if (t < -thr)
      kind = SpectralKind::Resonance;
    out.push_back({n, -p.beta * p.beta / (4.0 * d * d), kind, p.beta / (2.0 * d)});
  }
  return out;
}

Cplx resolvent_kernel(const WhittakerParams& p, Cplx k, double x, double y) {
  require_family_domain(p);
  if (!(k.real() > 0.0)) throw DomainError("resolvent_kernel: need Re(k) > 0");
  if (!(x > 0.0) || !(y > 0.0)) throw DomainError("resolvent_kernel: need x, y > 0");
  const WhittakerParams q{p.beta / (2.0 * k), routed_m(p)};
  const Cplx a = 0.5 + q.m - q.beta;
  if (dist_to_nonpositive_int(a) < tuning::tol_pole)
    throw PoleAtEigenvalue("resolvent_kernel: -k^2 at a discrete eigenvalue");
  const double lo = std::min(x, y), hi = std::max(x, y);
  const Cplx g = gamma(a);
  const Cplx iv = eval_I_value(q, PolarZ::principal(2.0 * k * lo));
  const Cplx kv = eval_K_value(q, PolarZ::principal(2.0 * k * hi));
  return g * iv * kv / (2.0 * k);
}

GridFunction apply_resolvent(const WhittakerParams& p, Cplx k, const GridFunction& f) {
  require_family_domain(p);
  if (!(k.real() > 0.0)) throw DomainError("apply_resolvent: need Re(k) > 0");
  const WhittakerParams q{p.beta / (2.0 * k), routed_m(p)};
  const Cplx a = 0.5 + q.m - q.beta;
  if (dist_to_nonpositive_int(a) < tuning::tol_pole)
    throw PoleAtEigenvalue("apply_resolvent: -k^2 at a discrete eigenvalue");
  const std::size_t n = f.size();
  const Cplx c = gamma(a) / (2.0 * k);
  std::vector<Cplx> iv(n), kv(n);
  for (std::size_t j = 0; j < n; ++j) {
    const PolarZ z = PolarZ::principal(2.0 * k * f.nodes[j]);
    iv[j] = eval_I_value(q, z);
    kv[j] = eval_K_value(q, z);
  }
  // g(x_i) = c * [ K_i * sum_{j<=i} w_j I_j f_j + I_i * sum_{j>i} w_j K_j f_j ].
  std::vector<Cplx> out(n);
  Cplx suffix = 0.0;
  for (std::size_t j = 0; j < n; ++j) suffix += f.weights[j] * kv[j] * f.values[j];
  Cplx prefix = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    prefix += f.weights[i] * iv[i] * f.values[i];
    suffix -= f.weights[i] * kv[i] * f.values[i];
    out[i] = c * (kv[i] * prefix + iv[i] * suffix);
  }
  GridFunction g = f;
  g.values = std::move(out);
  return g;
}

Cplx resolvent_boundary_kernel(const WhittakerParams& p, int side, double k, double x, double y) {
  require_family_domain(p);
  if (!(k > 0.0)) throw DomainError("resolvent_boundary_kernel: need k > 0");
  if (!(x > 0.0) || !(y > 0.0)) throw DomainError("resolvent_boundary_kernel: need x, y > 0");
  const double s = side >= 0 ? 1.0 : -1.0;
  const WhittakerParams q{p.beta / (2.0 * k), routed_m(p)};
  const Cplx garg = 0.5 + q.m - Cplx(0.0, s) * q.beta;  // 1/2 + m -/+ i beta/2k
  if (dist_to_nonpositive_int(garg) < tuning::exceptional_guard)
    throw ExceptionalEnergy("resolvent_boundary_kernel: exceptional energy");
  const double lo = std::min(x, y), hi = std::max(x, y);
  const Cplx jv = eval_J_value(q, PolarZ::from_positive(2.0 * k * lo));
  const Cplx hv = eval_H_value(side, q, PolarZ::from_positive(2.0 * k * hi));
  return s * Cplx(0.0, 1.0) / (2.0 * k) * gamma(garg) * jv * hv;
}

Cplx spectral_density_kernel(const WhittakerParams& p, double k, double x, double y) {
  require_family_domain(p);
  if (!(k > 0.0)) throw DomainError("spectral_density_kernel: need k > 0");
  if (!(x > 0.0) || !(y > 0.0)) throw DomainError("spectral_density_kernel: need x, y > 0");
  const WhittakerParams q{p.beta / (2.0 * k), routed_m(p)};
  for (double s : {1.0, -1.0}) {
    if (dist_to_nonpositive_int(0.5 + q.m + Cplx(0.0, s) * q.beta) < tuning::exceptional_guard)
      throw ExceptionalEnergy("spectral_density_kernel: exceptional energy");
  }
  // Log-space prefactor keeps e^{pi beta / 2k} Gamma(..)Gamma(..) overflow-free.
  const Cplx logpref = pi * q.beta + log_gamma(0.5 + q.m + Cplx(0.0, 1.0) * q.beta) +
                       log_gamma(0.5 + q.m - Cplx(0.0, 1.0) * q.beta);
  const Cplx jx = eval_J_value(q, PolarZ::from_positive(2.0 * k * x));
  const Cplx jy = eval_J_value(q, PolarZ::from_positive(2.0 * k * y));
  return std::exp(logpref) / (4.0 * pi * k) * jx * jy;
}

Cplx riesz_projection_kernel(const WhittakerParams& p, int N, double x, double y) {
  require_family_domain(p);
  if (!(x > 0.0) || !(y > 0.0)) throw DomainError("riesz_projection_kernel: need x, y > 0");
  const auto records = eigenvalues(p, N);
  const auto it = std::find_if(records.begin(), records.end(),
                               [N](const EigenRecord& r) { return r.N == N; });
  if (it == records.end())
    throw NotAnEigenvalue("riesz_projection_kernel: index has no record for these parameters");
  if (it->kind != SpectralKind::Eigenvalue)
    throw NotAnEigenvalue("riesz_projection_kernel: record is not an eigenvalue");
  const Cplx d = static_cast<double>(N) + p.m + 0.5;
  const Cplx kap = p.beta / d;
  // Log-space prefactor: beta/(2 d^2) * N!/Gamma(1+2m+N) * kappa^{1+2m}
  //                      * e^{-kappa (x+y)/2} * (xy)^{1/2+m}.
  const Cplx logpref = log_gamma(Cplx(N + 1.0)) - log_gamma(1.0 + 2.0 * p.m + static_cast<double>(N)) +
                       (1.0 + 2.0 * p.m) * std::log(kap) - kap * (x + y) / 2.0 +
                       (0.5 + p.m) * std::log(Cplx(x * y));
  return p.beta / (2.0 * d * d) * std::exp(logpref) *
         laguerre(N, 2.0 * p.m, kap * x) * laguerre(N, 2.0 * p.m, kap * y);
}

SpectrumDescriptor spectrum_descriptor(const WhittakerParams& p, double phi, int n_max,
                                       int trajectory_samples) {
  require_family_domain(p);
  SpectrumDescriptor d;
  d.params = p;
  d.rotation_phase = phi;
  d.ray_angle = -2.0 * phi;
  d.points = eigenvalues(p, n_max);
  const double b2 = std::norm(p.beta);
  const double im = p.m.imag();
  if (trajectory_samples > 1 && b2 > 0.0) {
    d.trajectory.reserve(trajectory_samples);
    for (int i = 0; i < trajectory_samples; ++i) {
      // t = tan(u) sweeps the whole real line (plus infinity at the ends).
      const double u = -pi / 2.0 + pi * (i + 0.5) / trajectory_samples;
      const double t = std::tan(u);
      const Cplx den = Cplx(t, im);
      if (std::abs(den) < 1e-8) continue;
      d.trajectory.push_back(-b2 / (4.0 * den * den));
    }
  }
  return d;
}

}  // namespace whittaker
