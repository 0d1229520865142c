// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "whittaker/complex_ops.hpp"
#include "whittaker/functions.hpp"
#include "whittaker/grid.hpp"

namespace whittaker {

// Classification of a discrete-spectrum candidate: a genuine eigenvalue
// (pole of the resolvent on the physical half-plane Re k > 0), a resonance
// (pole hidden on the other sheet), or a boundary case left unclassified.
enum class SpectralKind { Eigenvalue, Resonance, Undefined };

const char* to_string(SpectralKind k);

struct EigenRecord {
  int N;              // index in the family lambda_N = -beta^2 / (4 (N+m+1/2)^2)
  Cplx lambda;        // the energy
  SpectralKind kind;
  Cplx k_pole;        // resolvent-pole location k = beta / (2 (N+m+1/2))
};

// Discrete-spectrum enumeration for N = 0..n_max.  For m = -1/2 (beta != 0)
// the N = 0 index is skipped: that operator coincides with the m = +1/2 one,
// whose index set starts one step later in this labeling.
std::vector<EigenRecord> eigenvalues(const WhittakerParams& p, int n_max);

// Kernel of (H + k^2)^{-1} for Re k > 0:
//   (1/2k) Gamma(1/2+m-beta/2k) I_{beta/2k,m}(2k min) K_{beta/2k,m}(2k max).
Cplx resolvent_kernel(const WhittakerParams& p, Cplx k, double x, double y);

// Quadrature application g(x_i) = sum_j w_j R(x_i, x_j) f(x_j), organized
// as prefix sums over the separable min/max kernel (O(n) after the node
// evaluations).
GridFunction apply_resolvent(const WhittakerParams& p, Cplx k, const GridFunction& f);

// Boundary values of the resolvent kernel on the continuous spectrum:
//   ±(i/2k) Gamma(1/2+m∓i beta/2k) J_{beta/2k,m}(2k min) H±_{beta/2k,m}(2k max).
Cplx resolvent_boundary_kernel(const WhittakerParams& p, int side, double k, double x, double y);

// Spectral density kernel
//   p(k^2; x, y) = (e^{pi beta/2k} / 4 pi k) Gamma(1/2+m+i beta/2k)
//                  Gamma(1/2+m-i beta/2k) J(2kx) J(2ky).
Cplx spectral_density_kernel(const WhittakerParams& p, double k, double x, double y);

// Rank-one Riesz projection kernel at eigenvalue index N, with
// kappa = beta/(N+m+1/2):
//   P_N(x,y) = beta/(2 (N+m+1/2)^2) * N!/Gamma(1+2m+N) * kappa^{1+2m}
//              e^{-kappa(x+y)/2} (xy)^{1/2+m} L_N^{(2m)}(kappa x) L_N^{(2m)}(kappa y).
Cplx riesz_projection_kernel(const WhittakerParams& p, int N, double x, double y);

// Plot-ready description of the spectrum: the continuous ray rotated by the
// dilation presentation angle, the curve on which the whole discrete family
// lies, and the classified points themselves (which do not move with phi).
struct SpectrumDescriptor {
  WhittakerParams params;
  double rotation_phase;      // phi
  double ray_angle;           // -2 phi: continuous spectrum e^{-2 i phi} [0, inf)
  std::vector<Cplx> trajectory;  // samples of -|beta|^2 / (4 (t + i Im m)^2)
  std::vector<EigenRecord> points;
};

SpectrumDescriptor spectrum_descriptor(const WhittakerParams& p, double phi, int n_max,
                                       int trajectory_samples = 601);

}  // namespace whittaker
