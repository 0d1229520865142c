// SPDX-License-Identifier: Apache-2.0
#include "whittaker/scattering.hpp"

#include <algorithm>
#include <cmath>

#include "whittaker/errors.hpp"
#include "whittaker/gamma.hpp"
#include "whittaker/tuning.hpp"

namespace whittaker {

namespace {

constexpr double inv_sqrt_2pi = 0.39894228040143267793994605993438;  // 1/sqrt(2 pi)
constexpr double sqrt_2_over_pi = 0.79788456080286535587989211986876;

bool real_params(const WhittakerParams& p) {
  return p.beta.imag() == 0.0 && p.m.imag() == 0.0;
}

// Log of the outgoing/incoming prefactor (everything except the J factor).
Cplx pm_log_prefactor(int sign, const WhittakerParams& p, double k) {
  const double s = sign >= 0 ? 1.0 : -1.0;
  const Cplx q = p.beta / (2.0 * k);
  const Cplx garg = 0.5 + p.m + Cplx(0.0, s) * q;
  if (dist_to_nonpositive_int(garg) < tuning::exceptional_guard)
    throw ExceptionalEnergy("hw_kernel: exceptional energy");
  return Cplx(0.0, s * pi / 2.0) * p.m + pi * q / 2.0 + log_gamma(garg);
}

}  // namespace

const char* to_string(GBoundedness b) {
  switch (b) {
    case GBoundedness::Unitary: return "unitary";
    case GBoundedness::BoundedInvertible: return "bounded-invertible";
    default: return "ill-behaved";
  }
}

Cplx hw_kernel(TransformKind kind, const WhittakerParams& p, double x, double k) {
  if (!(x > 0.0) || !(k > 0.0)) throw DomainError("hw_kernel: need x, k > 0");
  switch (kind) {
    case TransformKind::Dirichlet:
      return sqrt_2_over_pi * std::sin(x * k);
    case TransformKind::Neumann:
      return sqrt_2_over_pi * std::cos(x * k);
    case TransformKind::RealSymmetric: {
      if (!real_params(p))
        throw RealOnly("hw_kernel: real-symmetric kernel needs real beta, m");
      const Cplx q = p.beta / (2.0 * k);
      const Cplx garg = 0.5 + p.m + Cplx(0.0, 1.0) * q;
      if (dist_to_nonpositive_int(garg) < tuning::exceptional_guard)
        throw ExceptionalEnergy("hw_kernel: exceptional energy");
      // |Gamma| = exp(Re log Gamma); phase-free variant.
      const double logpref = (pi * q / 2.0 + log_gamma(garg)).real();
      const WhittakerParams qq{q, p.m};
      return inv_sqrt_2pi * std::exp(logpref) *
             eval_J_value(qq, PolarZ::from_positive(2.0 * x * k));
    }
    case TransformKind::Outgoing:
    case TransformKind::Incoming: {
      const int sign = (kind == TransformKind::Outgoing) ? +1 : -1;
      const Cplx logpref = pm_log_prefactor(sign, p, k);
      const WhittakerParams qq{p.beta / (2.0 * k), p.m};
      return inv_sqrt_2pi * std::exp(logpref) *
             eval_J_value(qq, PolarZ::from_positive(2.0 * x * k));
    }
  }
  throw DomainError("hw_kernel: unknown kind");
}

ScatteringValue g_scattering(const WhittakerParams& p, double k) {
  if (!(k > 0.0)) throw DomainError("g_scattering: need k > 0");
  const Cplx q = p.beta / (2.0 * k);
  const Cplx wm = 0.5 + p.m - Cplx(0.0, 1.0) * q;
  const Cplx wp = 0.5 + p.m + Cplx(0.0, 1.0) * q;
  // Log space: g = e^{-i pi m} Gamma(wm)/Gamma(wp) survives Stirling growth.
  const Cplx log_g = Cplx(0.0, -pi) * p.m + log_gamma(wm) - log_gamma(wp);
  return {k, std::exp(log_g), log_g / Cplx(0.0, 2.0)};
}

GBoundedness classify_intrinsic(const WhittakerParams& p) {
  if (p.beta.imag() == 0.0) {
    if (p.m.imag() == 0.0) return GBoundedness::Unitary;
    if (std::abs(p.m.real() + 0.5) > tuning::classify_tol)
      return GBoundedness::BoundedInvertible;
  }
  return GBoundedness::IllBehaved;
}

bool g_blowup_flag(const WhittakerParams& p, double k) {
  const Cplx q = p.beta / (2.0 * k);
  const Cplx log_g = Cplx(0.0, -pi) * p.m + log_gamma(0.5 + p.m - Cplx(0.0, 1.0) * q) -
                     log_gamma(0.5 + p.m + Cplx(0.0, 1.0) * q);
  return std::abs(log_g.real()) > tuning::log_g_unbounded;
}

std::vector<double> exceptional_energies(const WhittakerParams& p, double k_min, double k_max) {
  if (!(k_min > 0.0) || !(k_max >= k_min))
    throw DomainError("exceptional_energies: need 0 < k_min <= k_max");
  std::vector<double> out;
  if (p.beta == Cplx(0.0)) return out;
  for (double s : {1.0, -1.0}) {
    for (int n = 0; n < 1000; ++n) {
      // Solve 1/2 + m + s i beta/(2k) = -n for k.
      const Cplx den = 2.0 * (0.5 + p.m + static_cast<double>(n));
      if (std::abs(den) < 1e-300) continue;
      const Cplx k = -Cplx(0.0, s) * p.beta / den;
      if (std::abs(k) < k_min - tuning::exceptional_guard) break;  // shrinking in n
      if (std::abs(k.imag()) <= tuning::exceptional_guard &&
          k.real() >= k_min - tuning::exceptional_guard &&
          k.real() <= k_max + tuning::exceptional_guard)
        out.push_back(k.real());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](double a, double b) { return std::abs(a - b) < 1e-12; }),
            out.end());
  return out;
}

GridFunction apply_transform(TransformKind kind, const WhittakerParams& p,
                             const GridFunction& f, const Grid& out_nodes) {
  std::vector<Cplx> out(out_nodes.size(), Cplx(0.0));
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double k = f.nodes[j];
    const Cplx wf = f.weights[j] * f.values[j];
    if (wf == Cplx(0.0)) continue;
    for (std::size_t i = 0; i < out_nodes.size(); ++i)
      out[i] += wf * hw_kernel(kind, p, out_nodes.nodes[i], k);
  }
  return make_grid_function(out_nodes, std::move(out));
}

GridFunction apply_transform_transpose(TransformKind kind, const WhittakerParams& p,
                                       const GridFunction& f, const Grid& out_nodes) {
  std::vector<Cplx> out(out_nodes.size(), Cplx(0.0));
  for (std::size_t i = 0; i < out_nodes.size(); ++i) {
    const double k = out_nodes.nodes[i];
    Cplx acc = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j)
      acc += f.weights[j] * f.values[j] * hw_kernel(kind, p, f.nodes[j], k);
    out[i] = acc;
  }
  return make_grid_function(out_nodes, std::move(out));
}

double g_relation_check(const WhittakerParams& p, double k, const std::vector<double>& xs) {
  const Cplx g = g_scattering(p, k).g;
  double worst = 0.0;
  for (double x : xs) {
    const Cplx fp = hw_kernel(TransformKind::Outgoing, p, x, k);
    const Cplx fm = hw_kernel(TransformKind::Incoming, p, x, k);
    worst = std::max(worst, std::abs(fp * g - fm) / std::abs(fm));
  }
  return worst;
}

GridFunction moller_apply(int sign, const WhittakerParams& p, const GridFunction& f,
                          const Grid& k_grid, const Grid& out_nodes) {
  if (!real_params(p))
    throw RealOnly("moller_apply: defined for real beta, m only");
  const double s = sign >= 0 ? 1.0 : -1.0;
  // W± = F± e^{∓ i pi/4} F_D^#: the scalar phase of F_D^∓ passes through #.
  GridFunction mid = apply_transform_transpose(TransformKind::Dirichlet, p, f, k_grid);
  const Cplx phase = std::exp(Cplx(0.0, -s * pi / 4.0));
  for (auto& v : mid.values) v *= phase;
  return apply_transform(s > 0 ? TransformKind::Outgoing : TransformKind::Incoming, p, mid,
                         out_nodes);
}

}  // namespace whittaker
