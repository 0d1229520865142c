// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "whittaker/complex_ops.hpp"

namespace whittaker::verify {

// Portable deterministic uniform draws: identical output on every platform
// for a given seed.  The engine's bit stream is fully specified by the
// standard; only the mapping to doubles (53-bit mantissa scaling) is ours,
// because std::uniform_real_distribution is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double uniform(double a, double b) {
    const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    return a + (b - a) * u;
  }

 private:
  std::mt19937_64 eng_;
};

struct CaseResult {
  std::string inputs;  // full inputs, serialized for replay
  double residual;
  bool pass;
};

struct SuiteReport {
  std::string suite;
  double tolerance = 0.0;
  int cases = 0;
  double worst = 0.0;
  std::string worst_inputs;
  bool pass = true;
  std::vector<CaseResult> failures;
  double seconds = 0.0;

  void add(const std::string& inputs, double residual, double tol);
};

// |W(I, K; x) + 1/Gamma(1/2+m-beta)| / |1/Gamma| over random parameter draws
// and x in {0.3, 1, 3, 10, 30}.
SuiteReport wronskian_suite(std::uint64_t seed, int draws = 100);

// Inter-solution identities: K from the two I branches, K(m) = K(-m),
// J from the H± pair, and the H± m-reflection.
SuiteReport connection_suite(std::uint64_t seed, int draws = 40);

// Every closed-form evaluator against independent adaptive integration
// seeded by raw series/far-field data, on x in [0.1, 20].
SuiteReport ode_suite(std::uint64_t seed, int draws_per_kind = 10);

// Riesz projection idempotency, unit trace, and eigen-residual on fixed
// parameter sets (deterministic; no draws).
SuiteReport projection_suite();

// Transform round-trip (desk-scale quadrature isometry) on fixed real
// parameter sets (deterministic; no draws).
SuiteReport isometry_suite();

// Intrinsic scattering multiplier: |g| = 1 on real draws, the phase-shift
// relation, and the boundedness classification spot checks.
SuiteReport scattering_suite(std::uint64_t seed, int draws = 200);

}  // namespace whittaker::verify
