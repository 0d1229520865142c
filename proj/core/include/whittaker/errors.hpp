// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace whittaker {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation requested exactly at (or too close to) a pole of the function.
struct PoleError : Error {
  using Error::Error;
};

// Evaluation requested at a branch point (typically z = 0 with non-positive exponent).
struct BranchPointError : Error {
  using Error::Error;
};

// A series or iteration failed to converge within its term budget.
struct NoConvergence : Error {
  using Error::Error;
};

// An optimally truncated asymptotic series cannot deliver: terms grow from the start.
struct AsymptoticDivergence : Error {
  using Error::Error;
};

// A finite-difference limit across a degenerate parameter point lost too much accuracy.
struct DegenerateLimitUnstable : Error {
  using Error::Error;
};

// The requested combination lies on a degenerate parameter set the routine does not cover.
struct DegenerateCase : Error {
  using Error::Error;
};

// Valid mathematics, but outside what this implementation supports.
struct UnsupportedCase : Error {
  using Error::Error;
};

// A series seed was requested where its defining formula breaks down.
struct SeriesNotApplicable : Error {
  using Error::Error;
};

// The adaptive ODE stepper collapsed its step size below useful resolution.
struct StiffnessFailure : Error {
  using Error::Error;
};

// An argument lies outside the routine's domain (e.g. x <= 0 on the half-line).
struct DomainError : Error {
  using Error::Error;
};

// The operator family has no member at this parameter point (beta=0, m=-1/2).
struct SingularFamilyPoint : Error {
  using Error::Error;
};

// A resolvent-type kernel was requested at a spectral point where it has a pole.
struct PoleAtEigenvalue : Error {
  using Error::Error;
};

// A scattering quantity was requested at an exceptional energy where it is undefined.
struct ExceptionalEnergy : Error {
  using Error::Error;
};

// An eigen-quantity was requested at an index that is not an eigenvalue for these parameters.
struct NotAnEigenvalue : Error {
  using Error::Error;
};

// The requested quantity is only defined for real parameters.
struct RealOnly : Error {
  using Error::Error;
};

}  // namespace whittaker
