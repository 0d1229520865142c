// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "whittaker/complex_ops.hpp"
#include "whittaker/functions.hpp"
#include "whittaker/grid.hpp"

namespace whittaker {

// Transform kernels on (x, k) in R+ x R+:
//   Outgoing/Incoming: (1/sqrt(2 pi)) e^{± i pi m/2} e^{pi beta/4k}
//                      Gamma(1/2+m ± i beta/2k) J_{beta/2k,m}(2xk);
//   RealSymmetric:     same with |Gamma| and no phase (real beta, m only);
//   Dirichlet:         sqrt(2/pi) sin(xk);
//   Neumann:           sqrt(2/pi) cos(xk).
enum class TransformKind { Outgoing, Incoming, RealSymmetric, Dirichlet, Neumann };

struct ScatteringValue {
  double k;
  Cplx g;      // intrinsic scattering multiplier
  Cplx delta;  // phase shift, g = e^{2 i delta}; real for real parameters
};

// Boundedness classification of the intrinsic scattering multiplier family:
// unitary (beta, m real), bounded with bounded inverse (beta real,
// Re m != -1/2), or unbounded/unboundedly-invertible otherwise.
enum class GBoundedness { Unitary, BoundedInvertible, IllBehaved };

const char* to_string(GBoundedness b);

Cplx hw_kernel(TransformKind kind, const WhittakerParams& p, double x, double k);

ScatteringValue g_scattering(const WhittakerParams& p, double k);

GBoundedness classify_intrinsic(const WhittakerParams& p);

// True when |log |g(k)|| exceeds the blow-up threshold: the sampled point is
// treated as evidence of an unbounded multiplier (or inverse).
bool g_blowup_flag(const WhittakerParams& p, double k);

// Real k values in [k_min, k_max] where Gamma(1/2+m ± i beta/2k) has a pole
// (finite set; empty for generic parameters).  A guard band of width
// tuning::exceptional_guard applies around each.
std::vector<double> exceptional_energies(const WhittakerParams& p, double k_min, double k_max);

// (T f)(x_i) = sum_j w_j T(x_i, k_j) f(k_j): input sampled in k, output on
// out_nodes in x.
GridFunction apply_transform(TransformKind kind, const WhittakerParams& p,
                             const GridFunction& f, const Grid& out_nodes);

// The transposed action (the # operation, no conjugation):
// (T^# f)(k_i) = sum_j w_j T(x_j, k_i) f(x_j).
GridFunction apply_transform_transpose(TransformKind kind, const WhittakerParams& p,
                                       const GridFunction& f, const Grid& out_nodes);

// Max over xs of |F+(x,k) g(k) - F-(x,k)| / |F-(x,k)|.
double g_relation_check(const WhittakerParams& p, double k, const std::vector<double>& xs);

// Moller operator applied to a position-space function: W± f =
// F±_{beta,m} (F_D^{∓#} f), realized as two quadrature transforms through
// the intermediate k-grid.  Real beta, m only.
GridFunction moller_apply(int sign, const WhittakerParams& p, const GridFunction& f,
                          const Grid& k_grid, const Grid& out_nodes);

}  // namespace whittaker
