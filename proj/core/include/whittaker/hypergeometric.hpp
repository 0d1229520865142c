// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "whittaker/complex_ops.hpp"

namespace whittaker {

struct SeriesDiagnostics {
  std::size_t terms_used = 0;
  double last_term_ratio = 0.0;  // |last accepted or first dropped term| / |sum|
  bool converged = false;
};

// Regularized Kummer function  F(a;c;z) = sum_k (a)_k z^k / (Gamma(c+k) k!),
// entire in c (non-positive-integer c handled by starting past the vanishing
// terms).  When Re z < 0 the e^z reflection of the series is summed instead,
// which keeps the terms from cancelling internally; residual cancellation is
// detected and the series is re-run in double-double arithmetic.
Cplx regularized_1f1(Cplx a, Cplx c, Cplx z, SeriesDiagnostics* diag = nullptr);

// Unregularized Kummer M(a;c;z); throws PoleError at non-positive integer c.
Cplx kummer_1f1(Cplx a, Cplx c, Cplx z, SeriesDiagnostics* diag = nullptr);

// Optimally truncated formal series 2F0(a,b;;w) = sum_k (a)_k (b)_k w^k / k!.
// Requires |w| <= tuning::w_max_2f0.  Accumulation stops before the first
// non-decreasing term; its size (relative to the sum) is the error estimate,
// reported in diag->last_term_ratio.  Throws AsymptoticDivergence when the
// terms grow from the start.
Cplx f20_asymptotic(Cplx a, Cplx b, Cplx w, SeriesDiagnostics* diag = nullptr);

// Large-|z| compound expansion of the regularized Kummer function (both
// exponential regimes, recessive + dominant).  z carries its sheet.
Cplx regularized_1f1_asymptotic(Cplx a, Cplx c, PolarZ z,
                                SeriesDiagnostics* diag = nullptr);

// Tricomi U(a,c,z) on the principal sheet |ang| <= pi.  Route selection:
// polynomial (a a non-positive integer), small-z connection, integer-c
// logarithmic series, rotated-contour Laplace integral, or large-z
// asymptotics; see README for the error budget behind the switch points.
Cplx tricomi_u(Cplx a, Cplx c, PolarZ z, SeriesDiagnostics* diag = nullptr);

}  // namespace whittaker
