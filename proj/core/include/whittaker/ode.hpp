// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "whittaker/complex_ops.hpp"
#include "whittaker/functions.hpp"

namespace whittaker {

// Which canonical solution an oracle run follows.  The first four live in the
// equation v'' = [(m^2-1/4)/x^2 - beta/x + E] v with E = +1/4 (Regular/
// Decaying) or E = -1/4 (RegularOsc/Outgoing/Incoming); the zero-energy pair
// has E = 0.
enum class SolutionKind {
  RegularHyper,      // recessive at 0, E = +1/4  (matches eval_I)
  DecayingHyper,     // recessive at infinity, E = +1/4  (matches eval_K)
  RegularTrig,       // recessive at 0, E = -1/4  (matches eval_J)
  OutgoingWave,      // e^{+ix/2}-wave at infinity  (matches eval_H(+1))
  IncomingWave,      // e^{-ix/2}-wave at infinity  (matches eval_H(-1))
  ZeroEnergyRegular, // recessive at 0, E = 0  (matches zero_energy_j)
  ZeroEnergySecond,  // second zero-energy solution  (matches zero_energy_y)
};

struct OdeProblem {
  WhittakerParams params;
  Cplx energy_term;  // E in v'' = [(m^2-1/4)/x^2 - beta/x + E] v
  double x_start;    // seed location; may exceed x_end (inward integration)
  double x_end;
  ValueDeriv seed;   // (v, v') at x_start
};

// Truncated Frobenius seed x^{1/2+m} sum_j d_j x^j at small x for the
// solutions recessive at 0.  The coefficients come from the raw three-term
// recurrence d_j = [-beta d_{j-1} + E d_{j-2}] / (j (j+2m)), deliberately
// bypassing the confluent-series machinery.
ValueDeriv seed_from_series(SolutionKind kind, const WhittakerParams& p, double x);

// Far-field seed for the solutions characterized at infinity, from the
// divergent inverse-power series z^{beta} e^{-z/2} sum_s c_s z^{-s}
// truncated at its smallest term (x >= 60 keeps that term below 1e-12).
ValueDeriv seed_from_asymptotic(SolutionKind kind, const WhittakerParams& p, double x);

// Adaptive 8th-order integration of prob from x_start toward x_end, landing
// exactly on each of sample_points (which must be strictly monotone in the
// direction of integration and lie between the endpoints).  Returns (v, v')
// at each sample point.
std::vector<ValueDeriv> integrate(const OdeProblem& prob,
                                  const std::vector<double>& sample_points,
                                  double tol = 1e-10);

}  // namespace whittaker
