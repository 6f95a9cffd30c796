#include "qblob/blob.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qblob/errors.hpp"
#include "qblob/linalg.hpp"
#include "qblob/wigner.hpp"

namespace qblob {

namespace {
constexpr double kPi = std::numbers::pi;
}

QuantumBlob::QuantumBlob(int n_, double hbar_, Vec center_, Mat G_, double tol)
    : n(n_), hbar(hbar_), center(std::move(center_)), G(std::move(G_)) {
  if (n < 1) throw domain_error("QuantumBlob: n must be >= 1");
  if (hbar <= 0.0) throw domain_error("QuantumBlob: hbar must be > 0");
  if (G.rows() != 2 * n || G.cols() != 2 * n)
    throw dimension_error("QuantumBlob: G must be 2n x 2n");
  if (center.size() != 2 * n)
    throw dimension_error("QuantumBlob: center must have length 2n");
  if (!is_spd(G)) throw domain_error("QuantumBlob: G must be SPD");
  if (!is_symplectic(G, tol))
    throw domain_error("QuantumBlob: G must be symplectic (Prop.-2 criterion)");
  const SymplecticSpectrum spec = symplectic_spectrum(G);
  const double spec_tol = std::max(kSpectrumTol, tol);
  for (double lam : spec.values)
    if (std::abs(lam - 1.0) > spec_tol) {
      std::ostringstream os;
      os << "QuantumBlob: symplectic spectrum entry " << lam
         << " deviates from 1";
      throw domain_error(os.str());
    }
}

bool QuantumBlob::contains(const Vec& z) const {
  if (z.size() != 2 * n)
    throw dimension_error("QuantumBlob::contains: z must have length 2n");
  const Vec dz = z - center;
  return dz.dot(G * dz) <= hbar;
}

PhaseSpaceEllipsoid::PhaseSpaceEllipsoid(int n_, double hbar_, Vec center_,
                                         Mat shape_)
    : n(n_), hbar(hbar_), center(std::move(center_)), shape(std::move(shape_)) {
  if (n < 1) throw domain_error("PhaseSpaceEllipsoid: n must be >= 1");
  if (hbar <= 0.0) throw domain_error("PhaseSpaceEllipsoid: hbar must be > 0");
  if (shape.rows() != 2 * n || shape.cols() != 2 * n)
    throw dimension_error("PhaseSpaceEllipsoid: shape must be 2n x 2n");
  if (center.size() != 2 * n)
    throw dimension_error("PhaseSpaceEllipsoid: center must have length 2n");
  if (!is_spd(shape))
    throw domain_error("PhaseSpaceEllipsoid: shape must be SPD");
}

QuantumBlob blob_from_state(const GaussianState& state) {
  return QuantumBlob(state.n, state.hbar, state.z0,
                     g_matrix(state.X, state.Y));
}

GaussianState state_from_blob(const QuantumBlob& blob) {
  const SymplecticMatrix ball_to_blob = polar_S_from_G(blob.G);  // G^{-1/2}
  const PreIwasawaFactors f = pre_iwasawa(ball_to_blob);

  const Mat linv = spd_inv_sqrt(f.L * f.L);
  const Mat x = symmetrized(linv * linv);
  const Mat y_raw = -f.Q * linv;
  if (max_abs(y_raw - y_raw.transpose()) >
      1e-8 * std::max(1.0, max_abs(y_raw)))
    throw numerical_error(
        "state_from_blob: recovered Y is asymmetric (symplectic structure violated)");
  GaussianState state(blob.n, blob.hbar, x, symmetrized(y_raw), blob.center,
                      0.0);

  const double scale = std::max(1.0, max_abs(blob.G));
  if (max_abs(g_matrix(state.X, state.Y) - blob.G) > 1e-9 * scale)
    throw numerical_error("state_from_blob: roundtrip does not reproduce blob");
  return state;
}

QuantumBlob blob_from_map(const SymplecticMatrix& s, const Vec& center,
                          double hbar) {
  const Mat sinv = s.inverse().entries();
  return QuantumBlob(s.modes(), hbar, center,
                     symmetrized(sinv.transpose() * sinv));
}

QuantumBlob blob_transform(const SymplecticMatrix& s, const QuantumBlob& blob) {
  if (s.modes() != blob.n)
    throw dimension_error("blob_transform: mode counts differ");
  const Mat sinv = s.inverse().entries();
  return QuantumBlob(blob.n, blob.hbar, s.entries() * blob.center,
                     symmetrized(sinv.transpose() * blob.G * sinv));
}

bool blob_equal(const QuantumBlob& a, const QuantumBlob& b, double tol) {
  if (a.n != b.n) return false;
  if (std::abs(a.hbar - b.hbar) > tol) return false;
  return (a.center - b.center).cwiseAbs().maxCoeff() <= tol &&
         max_abs(a.G - b.G) <= tol;
}

double blob_volume(int n, double hbar) {
  if (n < 1) throw domain_error("blob_volume: n must be >= 1");
  if (hbar <= 0.0) throw domain_error("blob_volume: hbar must be > 0");
  double vol = 1.0;
  for (int k = 1; k <= n; ++k) vol *= kPi * hbar / k;
  return vol;
}

namespace {

Mat conjugate_plane_submatrix(const Mat& m, int n, int j) {
  Mat sub(2, 2);
  const int a = j - 1, b = n + j - 1;
  sub << m(a, a), m(a, b), m(b, a), m(b, b);
  return sub;
}

void require_mode(const QuantumBlob& blob, int j, const char* who) {
  if (j < 1 || j > blob.n) {
    std::ostringstream os;
    os << who << ": mode index " << j << " outside 1.." << blob.n;
    throw domain_error(os.str());
  }
}

}  // namespace

double section_area(const QuantumBlob& blob, int j) {
  require_mode(blob, j, "section_area");
  const Mat sub = conjugate_plane_submatrix(blob.G, blob.n, j);
  return kPi * blob.hbar / std::sqrt(sub.determinant());
}

double projection_area(const QuantumBlob& blob, int j) {
  require_mode(blob, j, "projection_area");
  const Mat ginv = blob.G.llt().solve(Mat::Identity(2 * blob.n, 2 * blob.n));
  const Mat sub = conjugate_plane_submatrix(ginv, blob.n, j);
  return kPi * blob.hbar * std::sqrt(sub.determinant());
}

std::vector<std::pair<double, double>> section_boundary(const QuantumBlob& blob,
                                                        int j, int npoints) {
  require_mode(blob, j, "section_boundary");
  if (npoints < 3) throw validation_error("section_boundary: need >= 3 points");
  const Mat sub = conjugate_plane_submatrix(blob.G, blob.n, j);
  const Mat half = spd_inv_sqrt(sub);  // maps unit circle to section boundary
  const double r = std::sqrt(blob.hbar);
  const double cx = blob.center[j - 1];
  const double cp = blob.center[blob.n + j - 1];
  std::vector<std::pair<double, double>> pts;
  pts.reserve(npoints);
  for (int k = 0; k < npoints; ++k) {
    const double th = 2.0 * kPi * k / (npoints - 1);
    const double u = r * std::cos(th), v = r * std::sin(th);
    pts.emplace_back(cx + half(0, 0) * u + half(0, 1) * v,
                     cp + half(1, 0) * u + half(1, 1) * v);
  }
  return pts;
}

}  // namespace qblob
