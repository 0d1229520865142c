// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "whittaker/complex_ops.hpp"

namespace whittaker {

// Coupling beta and index m of the operator family
//   -d^2/dx^2 + (m^2 - 1/4)/x^2 - beta/x   on the half-line.
struct WhittakerParams {
  Cplx beta;
  Cplx m;
};

// A solution value together with its derivative in the same variable,
// so Wronskians and ODE seeds need no finite differencing.
struct ValueDeriv {
  Cplx f;
  Cplx df;
};

// Result of evaluating the oscillatory regular solution by both admissible
// rotations: their mean and the relative split between them (a consistency
// gauge; large values flag accuracy loss).
struct JPair {
  ValueDeriv mean;
  double discrepancy;
};

inline Cplx wronskian(const ValueDeriv& f, const ValueDeriv& g) {
  return f.f * g.df - f.df * g.f;
}

// Recessive-at-zero solution of the hyperbolic-type equation:
//   I(z) = z^{1/2+m} e^{-z/2} F(1/2+m-beta; 1+2m; z),
// entire in m (the regularized series absorbs non-positive integer 1+2m).
ValueDeriv eval_I(const WhittakerParams& p, PolarZ z);

// Recessive-at-infinity solution:
//   K(z) = z^{1/2+m} e^{-z/2} U(1/2+m-beta; 1+2m; z);  K(m) == K(-m).
ValueDeriv eval_K(const WhittakerParams& p, PolarZ z);

// Outgoing (+1) / incoming (-1) wave solutions of the trigonometric-type
// equation: H±(z) = e^{∓i pi (1/2+m)/2} K_{±i beta, m}(e^{∓i pi/2} z).
ValueDeriv eval_H(int sign, const WhittakerParams& p, PolarZ z);

// Regular solution of the trigonometric-type equation,
//   J(z) = e^{∓i pi (1/2+m)/2} I_{∓i beta, m}(e^{±i pi/2} z),
// evaluated by both rotations and averaged.
ValueDeriv eval_J(const WhittakerParams& p, PolarZ z);
JPair eval_J_detail(const WhittakerParams& p, PolarZ z);

// Value-only fast paths (skip the derivative's second series); used by the
// kernel-heavy spectral and transform layers.
Cplx eval_I_value(const WhittakerParams& p, PolarZ z);
Cplx eval_K_value(const WhittakerParams& p, PolarZ z);
Cplx eval_H_value(int sign, const WhittakerParams& p, PolarZ z);
Cplx eval_J_value(const WhittakerParams& p, PolarZ z);

// Zero-energy solutions on the half-line (beta != 0):
//   j(x) = x^{1/4} Jcal_{2m}(2 sqrt(beta x)),
//   y(x) = x^{1/4} Ycal_{2m}(2 sqrt(beta x)),
// with Wronskian W(j, y) = sqrt(beta).  Derivatives are in x.
ValueDeriv zero_energy_j(const WhittakerParams& p, double x);
ValueDeriv zero_energy_y(const WhittakerParams& p, double x);

}  // namespace whittaker
