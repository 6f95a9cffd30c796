#pragma once

#include "qblob/symplectic.hpp"
#include "qblob/types.hpp"

namespace qblob {

/// Squeezed coherent state with complex width matrix M = X + iY, phase-space
/// center z0 = (x0, p0) and global phase gamma (action units). The represented
/// wavefunction is
///   e^{i gamma/hbar} e^{(i/hbar)(p0.x - p0.x0/2)}
///     (pi hbar)^{-n/4} (det X)^{1/4} e^{-(X+iY)(x-x0).(x-x0)/(2 hbar)}.
class GaussianState {
 public:
  GaussianState(int n, double hbar, Mat X, Mat Y, Vec z0, double gamma = 0.0);

  int n;
  double hbar;
  Mat X;  // symmetric positive definite
  Mat Y;  // symmetric
  Vec z0;
  double gamma;

  Vec x0() const { return z0.head(n); }
  Vec p0() const { return z0.tail(n); }
};

/// The vacuum state: X = I, Y = 0, z0 = 0, gamma = 0.
GaussianState fiducial(int n, double hbar = 1.0);

/// Pointwise amplitude of the state at configuration point x.
Complex evaluate(const GaussianState& state, const Vec& x);

/// Heisenberg-Weyl translation by dz. The phase picks up the cocycle
/// sigma(dz, z0)/2 so that composing translations reproduces the operator
/// composition law.
GaussianState translate(const GaussianState& state, const Vec& dz);

/// Parameter action of the metaplectic operator of S, computed by pushing the
/// Wigner matrix G forward: G' = (S^{-1})^T G S^{-1}, then recovering (X', Y')
/// from the blocks of G'. The center maps to S z0; gamma is left untouched
/// (the operator phase has no closed form here).
GaussianState metaplectic_param_action(const SymplecticMatrix& s,
                                       const GaussianState& state);

/// Literal evaluation of M_S = i(AM + iB)(CM + iD)^{-1}. Kept as a comparison
/// route: it agrees with metaplectic_param_action for some S (e.g. S = J) and
/// disagrees for shears; both behaviors are regression-tested.
CMat sc1_literal(const SymplecticMatrix& s, const Mat& X, const Mat& Y);

/// Moebius map M_S = -i(C + iDM)(A + iBM)^{-1}; closed-form fast path that
/// matches the Wigner pushforward route (verified against the n=1 integral
/// oracle).
CMat mobius_param_map(const SymplecticMatrix& s, const Mat& X, const Mat& Y);

/// Uniformly sampled one-dimensional wavefunction.
struct WavefunctionGrid {
  Vec xs;       // strictly increasing, uniform spacing
  CVec values;  // amplitudes at xs
  double hbar = 1.0;

  double spacing() const;
};

/// Sample a state (n = 1) on [xmin, xmax] with npoints points.
WavefunctionGrid sample_state(const GaussianState& state, double xmin,
                              double xmax, int npoints);

/// L2 norm and inner product by trapezoid rule; grids must share sampling.
double grid_norm(const WavefunctionGrid& g);
Complex grid_overlap(const WavefunctionGrid& a, const WavefunctionGrid& b);

/// Output grid request for the integral oracle.
struct GridSpec {
  double xmin = -10.0;
  double xmax = 10.0;
  int npoints = 1025;
};

/// Quadrature evaluation of the metaplectic integral operator at n = 1,
///   (S psi)(x) = (2 pi i hbar)^{-1/2} Delta(W) \int e^{iW(x,x')/hbar} psi(x') dx',
/// with W the generating quadratic form of S (requires |det B| > 1e-10) and
/// Delta(W) = i^m sqrt(|det B^{-1}|), m in {0,1}. The overall sign ambiguity
/// (+-S) is inherent and accepted.
WavefunctionGrid metaplectic_apply_numeric(const SymplecticMatrix& s,
                                           const GaussianState& state,
                                           const GridSpec& out,
                                           int quadrature_points = 4001);

}  // namespace qblob
