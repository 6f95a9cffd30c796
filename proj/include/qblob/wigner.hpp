#pragma once

#include "qblob/gaussian.hpp"
#include "qblob/symplectic.hpp"
#include "qblob/types.hpp"

namespace qblob {

/// Wigner shape matrix of a squeezed state,
///   G = [[X + Y X^{-1} Y, Y X^{-1}], [X^{-1} Y, X^{-1}]],
/// certified SPD and symplectic. G carries no hbar.
Mat g_matrix(const Mat& X, const Mat& Y);

/// The lower block-triangular symplectic S = [[X^{1/2}, 0],
/// [X^{-1/2} Y, X^{-1/2}]] with S^T S = g_matrix(X, Y).
SymplecticMatrix s_from_xy(const Mat& X, const Mat& Y);

/// Inverse of g_matrix: X = (G_22)^{-1}, Y = X G_21 (symmetrized). The (1,1)
/// block of G is recomputed as a consistency certificate.
struct XYRecovery {
  Mat X;
  Mat Y;
  double asymmetry;          // max |Y - Y^T| before symmetrization
  double block_consistency;  // max |G_11 - (X + Y X^{-1} Y)|
};
XYRecovery xy_from_g(const Mat& g);

/// Closed-form Wigner transform of a Gaussian state:
///   W(z) = (pi hbar)^{-n} e^{-G(z - z0).(z - z0)/hbar}.
struct WignerGaussian {
  int n = 1;
  double hbar = 1.0;
  Mat G;
  Vec z0;
  double prefactor = 1.0;  // (pi hbar)^{-n}

  double value(const Vec& z) const;
};
WignerGaussian wigner_gaussian(const GaussianState& state);

/// Real-valued Wigner samples on a rectangular (x, p) grid (n = 1).
struct PhaseSpaceGrid {
  Vec xs;
  Vec ps;
  Mat w;  // w(i, j) = W(xs[i], ps[j])
  double hbar = 1.0;
  double max_imag = 0.0;          // largest |Im| discarded when taking Re
  bool truncation_warning = false;  // boundary amplitude was not negligible
};

/// Quadrature Wigner transform of a sampled wavefunction:
///   W(x, p) = (2 pi hbar)^{-1} \int e^{-i p y/hbar} psi(x + y/2)
///             psi*(x - y/2) dy,
/// with y running over even multiples of the grid spacing so that no
/// interpolation is needed. Requested x samples must lie on the input grid.
PhaseSpaceGrid wigner_numeric(const WavefunctionGrid& psi, double xmin,
                              double xmax, int xres, double pmin, double pmax,
                              int pres);

}  // namespace qblob
