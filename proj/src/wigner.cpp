#include "qblob/wigner.hpp"

#include <cmath>
#include <numbers>

#include "qblob/errors.hpp"
#include "qblob/linalg.hpp"

namespace qblob {

namespace {
constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);
}  // namespace

Mat g_matrix(const Mat& X, const Mat& Y) {
  const int n = static_cast<int>(X.rows());
  if (X.cols() != n || Y.rows() != n || Y.cols() != n)
    throw dimension_error("g_matrix: X and Y must be square of equal size");
  if (!is_spd(X)) throw domain_error("g_matrix: X must be SPD");
  if (!is_symmetric(Y, 1e-10)) throw domain_error("g_matrix: Y must be symmetric");

  const Mat xinv = X.llt().solve(Mat::Identity(n, n));
  Mat g(2 * n, 2 * n);
  g.topLeftCorner(n, n) = X + Y * xinv * Y;
  g.topRightCorner(n, n) = Y * xinv;
  g.bottomLeftCorner(n, n) = xinv * Y;
  g.bottomRightCorner(n, n) = xinv;
  g = symmetrized(g);

  if (!is_spd(g)) throw numerical_error("g_matrix: result is not SPD");
  if (!is_symplectic(g, 1e-9))
    throw numerical_error("g_matrix: result is not symplectic");
  return g;
}

SymplecticMatrix s_from_xy(const Mat& X, const Mat& Y) {
  const int n = static_cast<int>(X.rows());
  if (X.cols() != n || Y.rows() != n || Y.cols() != n)
    throw dimension_error("s_from_xy: X and Y must be square of equal size");
  if (!is_spd(X)) throw domain_error("s_from_xy: X must be SPD");
  if (!is_symmetric(Y, 1e-10))
    throw domain_error("s_from_xy: Y must be symmetric");

  const Mat xh = spd_sqrt(X);
  const Mat xmh = spd_inv_sqrt(X);
  Mat s(2 * n, 2 * n);
  s.topLeftCorner(n, n) = xh;
  s.topRightCorner(n, n) = Mat::Zero(n, n);
  s.bottomLeftCorner(n, n) = xmh * Y;
  s.bottomRightCorner(n, n) = xmh;
  SymplecticMatrix result(std::move(s), 1e-9);

  const Mat gram = result.entries().transpose() * result.entries();
  if (max_abs(gram - g_matrix(X, Y)) >
      1e-10 * std::max(1.0, max_abs(gram)))
    throw numerical_error("s_from_xy: S^T S does not reproduce g_matrix");
  return result;
}

XYRecovery xy_from_g(const Mat& g) {
  if (g.rows() != g.cols() || g.rows() % 2 != 0 || g.rows() == 0)
    throw dimension_error("xy_from_g: matrix must be 2n x 2n");
  const int n = static_cast<int>(g.rows()) / 2;
  if (!is_spd(g)) throw domain_error("xy_from_g: G must be SPD");

  XYRecovery rec;
  const Mat g22 = symmetrized(g.bottomRightCorner(n, n));
  rec.X = symmetrized(g22.llt().solve(Mat::Identity(n, n)));
  const Mat y_raw = rec.X * g.bottomLeftCorner(n, n);
  rec.asymmetry = max_abs(y_raw - y_raw.transpose());
  rec.Y = symmetrized(y_raw);

  const Mat xinv = rec.X.llt().solve(Mat::Identity(n, n));
  rec.block_consistency =
      max_abs(g.topLeftCorner(n, n) - (rec.X + rec.Y * xinv * rec.Y));
  const double scale = std::max(1.0, max_abs(g));
  if (rec.block_consistency > 1e-8 * scale)
    throw numerical_error("xy_from_g: (1,1) block inconsistent with recovery");
  return rec;
}

double WignerGaussian::value(const Vec& z) const {
  if (z.size() != 2 * n)
    throw dimension_error("WignerGaussian::value: z must have length 2n");
  const Vec dz = z - z0;
  return prefactor * std::exp(-dz.dot(G * dz) / hbar);
}

WignerGaussian wigner_gaussian(const GaussianState& state) {
  WignerGaussian w;
  w.n = state.n;
  w.hbar = state.hbar;
  w.G = g_matrix(state.X, state.Y);  // gamma drops out: the transform is phase-blind
  w.z0 = state.z0;
  w.prefactor = std::pow(kPi * state.hbar, -state.n);
  return w;
}

PhaseSpaceGrid wigner_numeric(const WavefunctionGrid& psi, double xmin,
                              double xmax, int xres, double pmin, double pmax,
                              int pres) {
  const int npsi = static_cast<int>(psi.xs.size());
  if (npsi < 3) throw dimension_error("wigner_numeric: input grid too small");
  if (xres < 1 || pres < 1 || !(xmax >= xmin) || !(pmax >= pmin))
    throw validation_error("wigner_numeric: bad output grid request");
  const double h = psi.spacing();
  const double hbar = psi.hbar;

  PhaseSpaceGrid out;
  out.hbar = hbar;
  out.xs = Vec::LinSpaced(xres, xmin, xmax);
  out.ps = Vec::LinSpaced(pres, pmin, pmax);

  const double amp_max = psi.values.cwiseAbs().maxCoeff();
  const double edge = std::max(std::abs(psi.values[0]),
                               std::abs(psi.values[npsi - 1]));
  out.truncation_warning = edge > 1e-12 * amp_max;

  // Map requested x samples onto input grid indices (no interpolation).
  std::vector<int> ix(xres);
  for (int i = 0; i < xres; ++i) {
    const double pos = (out.xs[i] - psi.xs[0]) / h;
    const int idx = static_cast<int>(std::lround(pos));
    if (idx < 0 || idx >= npsi || std::abs(pos - idx) > 1e-6)
      throw validation_error(
          "wigner_numeric: requested x sample is not a point of the input grid");
    ix[i] = idx;
  }

  // Correlation values F(j, i) = psi(x_i + j h) psi*(x_i - j h) for
  // y = 2 j h; out-of-grid factors are treated as zero (tail decay).
  const int jmax = npsi - 1;
  const int ny = 2 * jmax + 1;
  CMat f = CMat::Zero(ny, xres);
  for (int i = 0; i < xres; ++i) {
    const int c = ix[i];
    for (int j = -jmax; j <= jmax; ++j) {
      const int a = c + j;
      const int b = c - j;
      if (a < 0 || a >= npsi || b < 0 || b >= npsi) continue;
      f(j + jmax, i) = psi.values[a] * std::conj(psi.values[b]);
    }
  }

  CMat kernel(pres, ny);
  for (int k = 0; k < pres; ++k)
    for (int j = -jmax; j <= jmax; ++j)
      kernel(k, j + jmax) = std::exp(-kI * (out.ps[k] * 2.0 * j * h) / hbar);

  const double scale = 2.0 * h / (2.0 * kPi * hbar);
  const CMat wc = kernel * f;  // (pres x xres)
  out.w = Mat(xres, pres);
  out.max_imag = 0.0;
  for (int i = 0; i < xres; ++i)
    for (int k = 0; k < pres; ++k) {
      const Complex v = scale * wc(k, i);
      out.w(i, k) = v.real();
      out.max_imag = std::max(out.max_imag, std::abs(v.imag()));
    }
  return out;
}

}  // namespace qblob
