// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

// Central knobs for series truncation, route switching, and guard bands.
// Values were fixed by error-budget analysis; see README for the rationale.
namespace whittaker::tuning {

// Proximity to a gamma pole (distance of the argument from a non-positive
// integer) below which pole handling kicks in.
inline constexpr double tol_pole = 1e-10;

// Relative floor for power-series term accumulation: stop when the running
// tail bound drops below this times the partial sum.
inline constexpr double tol_series = 1e-16;

// Hard cap on series terms before declaring NoConvergence.
inline constexpr std::size_t max_terms = 5000;

// |z| above which confluent evaluators switch to the large-argument route.
inline constexpr double z_switch = 40.0;

// |z| above which (and up to z_switch, for |arg z| <= pi/2) the irregular
// confluent solution is evaluated by its Laplace-type integral instead of
// the two-term small-z connection, which cancels catastrophically there.
inline constexpr double z_quadrature = 12.0;

// Largest |w| accepted by the formal 2F0 tail evaluator.
inline constexpr double w_max_2f0 = 0.2;

// Distance from a degenerate parameter point below which limit formulas
// (or the centered parameter-difference fallback) replace direct evaluation.
inline constexpr double tol_degen = 1e-6;

// Step used by the centered parameter-difference fallback at degenerate points.
inline constexpr double h_degen = 1e-4;

// Two-term combinations whose sum is smaller than this times the larger
// term are re-evaluated in compensated (double-double) arithmetic.  The
// generous threshold means even ~20x amplification gets the compensated
// pass; the cost is isolated to those calls.
inline constexpr double cancel_guard = 5e-2;

// A series whose largest term exceeded this multiple of its sum is re-run
// in double-double arithmetic (internal cancellation).
inline constexpr double dd_retrigger = 1e2;

// |Re(beta * conj(N + m + 1/2))| below this classifies as boundary/undefined
// rather than eigenvalue or resonance.
inline constexpr double classify_tol = 1e-13;

// Distance of 1/2 + m +- i beta/(2k) from a non-positive integer below which
// an energy is treated as exceptional for the scattering transforms.
inline constexpr double exceptional_guard = 1e-8;

// |log|g|| beyond which the intrinsic scattering function is flagged as
// numerically blown up (unbounded regime).
inline constexpr double log_g_unbounded = 30.0;

}  // namespace whittaker::tuning
