#include "qblob/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qblob/errors.hpp"
#include "qblob/linalg.hpp"
#include "qblob/wigner.hpp"

namespace qblob {

namespace {
constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);
}  // namespace

GaussianState::GaussianState(int n_, double hbar_, Mat X_, Mat Y_, Vec z0_,
                             double gamma_)
    : n(n_), hbar(hbar_), X(std::move(X_)), Y(std::move(Y_)),
      z0(std::move(z0_)), gamma(gamma_) {
  if (n < 1) throw domain_error("GaussianState: n must be >= 1");
  if (hbar <= 0.0) throw domain_error("GaussianState: hbar must be > 0");
  if (X.rows() != n || X.cols() != n || Y.rows() != n || Y.cols() != n)
    throw dimension_error("GaussianState: X and Y must be n x n");
  if (z0.size() != 2 * n)
    throw dimension_error("GaussianState: z0 must have length 2n");
  if (!is_spd(X)) throw domain_error("GaussianState: X must be SPD");
  if (!is_symmetric(Y, 1e-10))
    throw domain_error("GaussianState: Y must be symmetric");
}

GaussianState fiducial(int n, double hbar) {
  return GaussianState(n, hbar, Mat::Identity(n, n), Mat::Zero(n, n),
                       Vec::Zero(2 * n), 0.0);
}

Complex evaluate(const GaussianState& state, const Vec& x) {
  if (x.size() != state.n)
    throw dimension_error("evaluate: x must have length n");
  const Vec dx = x - state.x0();
  const Vec xdx = state.X * dx;
  const Vec ydx = state.Y * dx;
  const Complex quad(dx.dot(xdx), dx.dot(ydx));
  const double phase =
      (state.gamma + state.p0().dot(x) - 0.5 * state.p0().dot(state.x0())) /
      state.hbar;
  const double amp = std::pow(kPi * state.hbar, -0.25 * state.n) *
                     std::pow(state.X.determinant(), 0.25);
  return std::exp(kI * phase) * amp * std::exp(-quad / (2.0 * state.hbar));
}

GaussianState translate(const GaussianState& state, const Vec& dz) {
  if (dz.size() != 2 * state.n)
    throw dimension_error("translate: dz must have length 2n");
  GaussianState out = state;
  out.gamma = state.gamma + 0.5 * symplectic_form(dz, state.z0);
  out.z0 = state.z0 + dz;
  return out;
}

GaussianState metaplectic_param_action(const SymplecticMatrix& s,
                                       const GaussianState& state) {
  if (s.modes() != state.n)
    throw dimension_error("metaplectic_param_action: mode counts differ");
  const Mat g = g_matrix(state.X, state.Y);
  const Mat sinv = s.inverse().entries();
  const Mat gp = symmetrized(sinv.transpose() * g * sinv);
  const XYRecovery rec = xy_from_g(gp);
  return GaussianState(state.n, state.hbar, rec.X, rec.Y,
                       s.entries() * state.z0, state.gamma);
}

namespace {

CMat complex_m(const Mat& X, const Mat& Y) {
  return X.cast<Complex>() + kI * Y.cast<Complex>();
}

}  // namespace

CMat sc1_literal(const SymplecticMatrix& s, const Mat& X, const Mat& Y) {
  const CMat m = complex_m(X, Y);
  const CMat num = s.blockA().cast<Complex>() * m + kI * s.blockB().cast<Complex>();
  const CMat den = s.blockC().cast<Complex>() * m + kI * s.blockD().cast<Complex>();
  Eigen::JacobiSVD<CMat> svd(den);
  const double smin = svd.singularValues().minCoeff();
  const double smax = svd.singularValues().maxCoeff();
  if (smin <= 0.0 || smax / smin > 1e12) {
    std::ostringstream os;
    os << "sc1_literal: CM + iD numerically singular (condition "
       << (smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity())
       << "), contradicting its stated invertibility";
    throw numerical_error(os.str());
  }
  return kI * num * den.inverse();
}

CMat mobius_param_map(const SymplecticMatrix& s, const Mat& X, const Mat& Y) {
  const CMat m = complex_m(X, Y);
  const CMat num = s.blockC().cast<Complex>() + kI * s.blockD().cast<Complex>() * m;
  const CMat den = s.blockA().cast<Complex>() + kI * s.blockB().cast<Complex>() * m;
  return -kI * num * den.inverse();
}

double WavefunctionGrid::spacing() const {
  if (xs.size() < 2)
    throw dimension_error("WavefunctionGrid: need at least 2 points");
  return (xs[xs.size() - 1] - xs[0]) / static_cast<double>(xs.size() - 1);
}

WavefunctionGrid sample_state(const GaussianState& state, double xmin,
                              double xmax, int npoints) {
  if (state.n != 1)
    throw dimension_error("sample_state: only n = 1 is supported");
  if (npoints < 2 || !(xmax > xmin))
    throw validation_error("sample_state: bad grid request");
  WavefunctionGrid grid;
  grid.hbar = state.hbar;
  grid.xs = Vec::LinSpaced(npoints, xmin, xmax);
  grid.values = CVec(npoints);
  Vec x(1);
  for (int i = 0; i < npoints; ++i) {
    x[0] = grid.xs[i];
    grid.values[i] = evaluate(state, x);
  }
  return grid;
}

double grid_norm(const WavefunctionGrid& g) {
  return std::sqrt(std::abs(grid_overlap(g, g)));
}

Complex grid_overlap(const WavefunctionGrid& a, const WavefunctionGrid& b) {
  if (a.xs.size() != b.xs.size())
    throw dimension_error("grid_overlap: grids differ in size");
  if (std::abs(a.xs[0] - b.xs[0]) > 1e-12 ||
      std::abs(a.xs[a.xs.size() - 1] - b.xs[b.xs.size() - 1]) > 1e-12)
    throw validation_error("grid_overlap: grids differ in range");
  const double h = a.spacing();
  Complex acc(0.0, 0.0);
  for (int i = 0; i < a.values.size(); ++i) {
    Complex term = std::conj(a.values[i]) * b.values[i];
    if (i == 0 || i + 1 == a.values.size()) term *= 0.5;
    acc += term;
  }
  return acc * h;
}

WavefunctionGrid metaplectic_apply_numeric(const SymplecticMatrix& s,
                                           const GaussianState& state,
                                           const GridSpec& out,
                                           int quadrature_points) {
  if (state.n != 1 || s.modes() != 1)
    throw dimension_error("metaplectic_apply_numeric: only n = 1 is supported");
  if (quadrature_points < 101)
    throw validation_error("metaplectic_apply_numeric: too few quadrature points");
  const double b = s.blockB()(0, 0);
  if (std::abs(b) <= 1e-10)
    throw domain_error("metaplectic_apply_numeric: |det B| <= 1e-10");
  const double a = s.blockA()(0, 0);
  const double d = s.blockD()(0, 0);
  const double hbar = state.hbar;

  // W(x, x') = (d/2b) x^2 - (1/b) x x' + (a/2b) x'^2.
  const double w_xx = d / (2.0 * b);
  const double w_xxp = -1.0 / b;
  const double w_xpxp = a / (2.0 * b);

  // Maslov representative in {0, 1}: Delta(W) = i^m sqrt(|det B^{-1}|).
  Complex delta = std::sqrt(std::abs(1.0 / b));
  if (1.0 / b < 0.0) delta *= kI;
  const Complex prefactor =
      delta / std::sqrt(2.0 * kPi * hbar) * std::exp(-kI * (kPi / 4.0));

  // Quadrature interval centered on the state, wide enough that the Gaussian
  // tail is below 1e-30.
  const double sigma = std::sqrt(hbar / state.X(0, 0));
  const double x0 = state.x0()[0];
  const double lo = x0 - 12.0 * sigma;
  const double hi = x0 + 12.0 * sigma;
  const double h = (hi - lo) / (quadrature_points - 1);

  CVec weighted(quadrature_points);
  Vec nodes(quadrature_points);
  Vec xv(1);
  for (int j = 0; j < quadrature_points; ++j) {
    const double xp = lo + j * h;
    nodes[j] = xp;
    xv[0] = xp;
    double w = (j == 0 || j + 1 == quadrature_points) ? 0.5 * h : h;
    weighted[j] = w * evaluate(state, xv) *
                  std::exp(kI * (w_xpxp * xp * xp) / hbar);
  }

  WavefunctionGrid result;
  result.hbar = hbar;
  result.xs = Vec::LinSpaced(out.npoints, out.xmin, out.xmax);
  result.values = CVec(out.npoints);
  for (int i = 0; i < out.npoints; ++i) {
    const double x = result.xs[i];
    Complex acc(0.0, 0.0);
    for (int j = 0; j < quadrature_points; ++j)
      acc += weighted[j] * std::exp(kI * (w_xxp * x * nodes[j]) / hbar);
    result.values[i] =
        prefactor * std::exp(kI * (w_xx * x * x) / hbar) * acc;
  }
  return result;
}

}  // namespace qblob
