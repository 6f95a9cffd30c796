#include "qblob/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qblob/errors.hpp"
#include "qblob/linalg.hpp"

namespace qblob {

Mat standard_J(int n) {
  if (n < 1) throw domain_error("standard_J: n must be >= 1");
  Mat j = Mat::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = Mat::Identity(n, n);
  j.bottomLeftCorner(n, n) = -Mat::Identity(n, n);
  return j;
}

double symplectic_form(const Vec& a, const Vec& b) {
  if (a.size() != b.size() || a.size() % 2 != 0)
    throw dimension_error("symplectic_form: vectors must share an even size");
  const int n = static_cast<int>(a.size()) / 2;
  return a.tail(n).dot(b.head(n)) - b.tail(n).dot(a.head(n));
}

namespace {

void require_even_square(const Mat& m, const char* who) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << who << ": matrix must be square, got " << m.rows() << "x" << m.cols();
    throw dimension_error(os.str());
  }
  if (m.rows() % 2 != 0 || m.rows() == 0) {
    std::ostringstream os;
    os << who << ": matrix dimension must be even and positive, got "
       << m.rows();
    throw dimension_error(os.str());
  }
}

double symplectic_residual(const Mat& m) {
  const int n = static_cast<int>(m.rows()) / 2;
  const Mat j = standard_J(n);
  return max_abs(m.transpose() * j * m - j);
}

}  // namespace

bool is_symplectic(const Mat& m, double tol) {
  require_even_square(m, "is_symplectic");
  return symplectic_residual(m) <= tol;
}

bool is_symplectic_rotation(const Mat& u, double tol) {
  if (u.rows() != u.cols() || u.rows() % 2 != 0 || u.rows() == 0) return false;
  if (symplectic_residual(u) > tol) return false;
  const Mat id = Mat::Identity(u.rows(), u.cols());
  return max_abs(u.transpose() * u - id) <= tol;
}

SymplecticMatrix::SymplecticMatrix(Mat entries, double tol)
    : s_(std::move(entries)) {
  require_even_square(s_, "SymplecticMatrix");
  n_ = static_cast<int>(s_.rows()) / 2;
  residual_ = symplectic_residual(s_);
  if (residual_ > tol) {
    std::ostringstream os;
    os << "SymplecticMatrix: ||S^T J S - J||_max = " << residual_
       << " exceeds tolerance " << tol;
    throw domain_error(os.str());
  }
}

SymplecticMatrix SymplecticMatrix::inverse() const {
  Mat inv(2 * n_, 2 * n_);
  inv.topLeftCorner(n_, n_) = blockD().transpose();
  inv.topRightCorner(n_, n_) = -blockB().transpose();
  inv.bottomLeftCorner(n_, n_) = -blockC().transpose();
  inv.bottomRightCorner(n_, n_) = blockA().transpose();
  return SymplecticMatrix(std::move(inv), std::max(1e-9, 10 * residual_));
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& rhs) const {
  if (rhs.n_ != n_)
    throw dimension_error("SymplecticMatrix product: mode counts differ");
  return SymplecticMatrix(s_ * rhs.s_, 1e-8);
}

SymplecticSpectrum symplectic_spectrum(const Mat& m) {
  require_even_square(m, "symplectic_spectrum");
  if (!is_spd(m))
    throw domain_error("symplectic_spectrum: matrix is not SPD");
  const int n = static_cast<int>(m.rows()) / 2;
  const Mat root = spd_sqrt(symmetrized(m));
  Mat k = root * standard_J(n) * root;
  k = 0.5 * (k - k.transpose());  // exact skew-symmetry
  // Singular values of a skew-symmetric matrix come in equal pairs
  // (lambda_j, lambda_j); keep one of each.
  Eigen::JacobiSVD<Mat> svd(k);
  SymplecticSpectrum spectrum;
  spectrum.values.reserve(n);
  for (int i = 0; i < n; ++i)
    spectrum.values.push_back(svd.singularValues()[2 * i]);
  return spectrum;
}

SymplecticMatrix polar_S_from_G(const Mat& g, double tol) {
  require_even_square(g, "polar_S_from_G");
  if (!is_spd(g)) throw domain_error("polar_S_from_G: G is not SPD");
  if (!is_symplectic(g, std::max(tol, 1e-9)))
    throw domain_error("polar_S_from_G: G is not symplectic");
  SymplecticMatrix s(spd_inv_sqrt(g), 1e-9);
  const Mat sinv = s.inverse().entries();
  if (max_abs(sinv.transpose() * sinv - g) >
      1e-10 * std::max(1.0, max_abs(g)))
    throw numerical_error("polar_S_from_G: (S^{-1})^T S^{-1} != G");
  return s;
}

PreIwasawaFactors pre_iwasawa(const SymplecticMatrix& t, double tol) {
  const int n = t.modes();
  const Mat a = t.blockA(), b = t.blockB(), c = t.blockC(), d = t.blockD();

  PreIwasawaFactors f;
  f.L = spd_sqrt(symmetrized(a * a.transpose() + b * b.transpose()));
  const Mat linv = spd_inv_sqrt(f.L * f.L);
  f.Q = (c * a.transpose() + d * b.transpose()) * linv;

  Mat p(2 * n, 2 * n);
  p.topLeftCorner(n, n) = f.L;
  p.topRightCorner(n, n) = Mat::Zero(n, n);
  p.bottomLeftCorner(n, n) = f.Q;
  p.bottomRightCorner(n, n) = linv;

  // P^{-1} = [[L^{-1}, 0], [-L Q L^{-1}, L]] for this block shape.
  Mat pinv(2 * n, 2 * n);
  pinv.topLeftCorner(n, n) = linv;
  pinv.topRightCorner(n, n) = Mat::Zero(n, n);
  pinv.bottomLeftCorner(n, n) = -f.L * f.Q * linv;
  pinv.bottomRightCorner(n, n) = f.L;

  f.U = pinv * t.entries();

  const double scale = std::max(1.0, max_abs(t.entries()));
  if (max_abs(p * f.U - t.entries()) > tol * scale)
    throw numerical_error("pre_iwasawa: reassembly does not reproduce input");
  return f;
}

SymplecticMatrix random_symplectic_rotation(int n, std::uint64_t seed) {
  if (n < 1) throw domain_error("random_symplectic_rotation: n must be >= 1");
  Rng rng(seed);
  CMat z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = Complex(rng.normal(), rng.normal());
  Eigen::HouseholderQR<CMat> qr(z);
  CMat q = qr.householderQ();
  const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    const Complex rii = r(i, i);
    const double mag = std::abs(rii);
    q.col(i) *= (mag > 0.0) ? rii / mag : Complex(1.0, 0.0);
  }
  Mat u(2 * n, 2 * n);
  u.topLeftCorner(n, n) = q.real();
  u.topRightCorner(n, n) = -q.imag();
  u.bottomLeftCorner(n, n) = q.imag();
  u.bottomRightCorner(n, n) = q.real();
  return SymplecticMatrix(std::move(u), 1e-12);
}

SymplecticMatrix random_symplectic(int n, std::uint64_t seed, double spread) {
  if (n < 1) throw domain_error("random_symplectic: n must be >= 1");
  if (spread <= 0.0) throw domain_error("random_symplectic: spread must be > 0");
  Rng rng(seed);

  const Mat id = Mat::Identity(n, n);
  const Mat c = random_symmetric(rng, n, spread);
  const Mat cp = random_symmetric(rng, n, spread);

  Mat lower = Mat::Identity(2 * n, 2 * n);
  lower.bottomLeftCorner(n, n) = c;
  Mat upper = Mat::Identity(2 * n, 2 * n);
  upper.topRightCorner(n, n) = cp;

  Vec lam(n);
  for (int i = 0; i < n; ++i)
    lam[i] = std::exp(rng.uniform(-0.5 * spread, 0.5 * spread));
  Mat squeeze = Mat::Zero(2 * n, 2 * n);
  squeeze.topLeftCorner(n, n) = lam.asDiagonal();
  squeeze.bottomRightCorner(n, n) =
      lam.cwiseInverse().asDiagonal().toDenseMatrix();

  const SymplecticMatrix rot =
      random_symplectic_rotation(n, rng.engine()());

  Mat s = rot.entries() * lower * squeeze * upper;
  return SymplecticMatrix(std::move(s), 1e-10);
}

}  // namespace qblob
