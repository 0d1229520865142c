// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "whittaker/complex_ops.hpp"

namespace whittaker {

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243104;

// Principal branch of log Gamma (the continuation that is real on (0,inf)),
// conjugate-symmetric: log_gamma(conj z) == conj(log_gamma(z)) exactly.
// Values on the negative real axis are the limits from the upper half-plane.
// Throws PoleError within tuning::tol_pole of a non-positive integer.
Cplx log_gamma(Cplx z);

// Gamma via exp(log_gamma).  Throws PoleError at poles.
Cplx gamma(Cplx z);

// 1/Gamma as an entire function: never throws; near non-positive integers it
// evaluates the local zero to first order instead of dividing by a huge value.
Cplx inv_gamma(Cplx z);

// Digamma (psi).  Throws PoleError at non-positive integers.
Cplx digamma(Cplx z);

// Rising factorial (a)_n = a (a+1) ... (a+n-1); n >= 0.
Cplx pochhammer(Cplx a, int n);

// A branch of log(sin(pi z)) that is holomorphic for Im z > 0 and agrees with
// the principal value on (0,1); evaluated stably near integers and for large
// |Im z|.  For Im z < 0 the conjugate-symmetric extension is returned.
Cplx log_sin_pi(Cplx z);

// log Gamma for real x > 0 (thin wrapper over the C library).
double log_gamma_real(double x);

// Generalized Laguerre polynomial L_n^{(alpha)}(x) by the three-term recurrence.
Cplx laguerre(int n, Cplx alpha, Cplx x);

}  // namespace whittaker
