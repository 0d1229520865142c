// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "whittaker/complex_ops.hpp"

namespace whittaker {

// Quadrature rule: strictly increasing nodes with positive weights.
struct Grid {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::size_t size() const { return nodes.size(); }
};

// A sampled function: values attached to a quadrature rule.
struct GridFunction {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<Cplx> values;
  std::size_t size() const { return nodes.size(); }
};

GridFunction make_grid_function(const Grid& g, std::vector<Cplx> values);

// Gauss-Legendre rule on (-1, 1) (Newton iteration on the Legendre
// recurrence; nodes symmetric, weights positive).
Grid gauss_legendre(int n);

// The same rule mapped onto (a, b).
Grid gauss_legendre(double a, double b, int n);

// Composite rule with panel widths growing geometrically from `a` by
// `ratio` until `b` is reached (graded toward the left endpoint).
Grid geometric_panels(double a, double b, double ratio, int per_panel);

// Composite rule with n_panels equal panels on (a, b).
Grid uniform_panels(double a, double b, int n_panels, int per_panel);

// Uniformly spaced nodes with trapezoid weights (n_points >= 2).
Grid uniform_trapezoid(double a, double b, std::size_t n_points);

Cplx integrate(const Grid& g, const std::vector<Cplx>& values);
double l2_norm(const Grid& g, const std::vector<Cplx>& values);

}  // namespace whittaker
