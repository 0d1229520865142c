// SPDX-License-Identifier: Apache-2.0
#include "whittaker/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "whittaker/errors.hpp"

namespace whittaker {

GridFunction make_grid_function(const Grid& g, std::vector<Cplx> values) {
  if (values.size() != g.nodes.size())
    throw DomainError("make_grid_function: value/node length mismatch");
  return {g.nodes, g.weights, std::move(values)};
}

Grid gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: need n >= 1");
  Grid g;
  g.nodes.resize(n);
  g.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-like initial guess for the i-th root (descending order).
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence for P_n(x) and derivative.
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    g.nodes[i] = -x;  // store ascending
    g.weights[i] = w;
    g.nodes[n - 1 - i] = x;
    g.weights[n - 1 - i] = w;
  }
  return g;
}

Grid gauss_legendre(double a, double b, int n) {
  if (!(b > a)) throw DomainError("gauss_legendre: need b > a");
  Grid ref = gauss_legendre(n);
  const double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    ref.nodes[i] = mid + hw * ref.nodes[i];
    ref.weights[i] *= hw;
  }
  return ref;
}

namespace {

Grid composite(const std::vector<double>& breaks, int per_panel) {
  Grid out;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const Grid panel = gauss_legendre(breaks[p], breaks[p + 1], per_panel);
    out.nodes.insert(out.nodes.end(), panel.nodes.begin(), panel.nodes.end());
    out.weights.insert(out.weights.end(), panel.weights.begin(), panel.weights.end());
  }
  return out;
}

}  // namespace

Grid geometric_panels(double a, double b, double ratio, int per_panel) {
  if (!(a > 0.0) || !(b > a) || !(ratio > 1.0))
    throw DomainError("geometric_panels: need 0 < a < b and ratio > 1");
  std::vector<double> breaks{a};
  double edge = a;
  while (edge < b) {
    edge *= ratio;
    breaks.push_back(edge < b ? edge : b);
  }
  return composite(breaks, per_panel);
}

Grid uniform_panels(double a, double b, int n_panels, int per_panel) {
  if (!(b > a) || n_panels < 1)
    throw DomainError("uniform_panels: need b > a and n_panels >= 1");
  std::vector<double> breaks(n_panels + 1);
  for (int i = 0; i <= n_panels; ++i)
    breaks[i] = a + (b - a) * static_cast<double>(i) / n_panels;
  return composite(breaks, per_panel);
}

Grid uniform_trapezoid(double a, double b, std::size_t n_points) {
  if (!(b > a) || n_points < 2)
    throw DomainError("uniform_trapezoid: need b > a and n_points >= 2");
  Grid g;
  g.nodes.resize(n_points);
  g.weights.assign(n_points, 0.0);
  const double h = (b - a) / static_cast<double>(n_points - 1);
  for (std::size_t i = 0; i < n_points; ++i) {
    g.nodes[i] = a + h * static_cast<double>(i);
    g.weights[i] = h;
  }
  g.weights.front() = 0.5 * h;
  g.weights.back() = 0.5 * h;
  return g;
}

Cplx integrate(const Grid& g, const std::vector<Cplx>& values) {
  if (values.size() != g.nodes.size())
    throw DomainError("integrate: value/node length mismatch");
  Cplx s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) s += g.weights[i] * values[i];
  return s;
}

double l2_norm(const Grid& g, const std::vector<Cplx>& values) {
  if (values.size() != g.nodes.size())
    throw DomainError("l2_norm: value/node length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) s += g.weights[i] * std::norm(values[i]);
  return std::sqrt(s);
}

}  // namespace whittaker
