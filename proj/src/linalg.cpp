#include "qblob/linalg.hpp"

#include <cmath>
#include <numbers>

#include "qblob/errors.hpp"

namespace qblob {

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

bool is_symmetric(const Mat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, max_abs(m));
  return max_abs(m - m.transpose()) <= tol * scale;
}

Mat symmetrized(const Mat& m) { return 0.5 * (m + m.transpose()); }

bool is_spd(const Mat& m, double asym_tol) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  if (!is_symmetric(m, asym_tol)) return false;
  Eigen::SelfAdjointEigenSolver<Mat> es(symmetrized(m),
                                        Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() > 0.0;
}

namespace {

Mat spd_power(const Mat& m, double exponent) {
  if (m.rows() != m.cols())
    throw dimension_error("spd_power: matrix must be square");
  Eigen::SelfAdjointEigenSolver<Mat> es(symmetrized(m));
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw domain_error("matrix is not symmetric positive definite");
  Vec d = es.eigenvalues();
  for (int i = 0; i < d.size(); ++i) d[i] = std::pow(d[i], exponent);
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace

Mat spd_sqrt(const Mat& m) { return spd_power(m, 0.5); }
Mat spd_inv_sqrt(const Mat& m) { return spd_power(m, -0.5); }

Mat expm(const Mat& a) {
  if (a.rows() != a.cols()) throw dimension_error("expm: matrix must be square");
  const int n = static_cast<int>(a.rows());
  const Mat id = Mat::Identity(n, n);

  // Pade(13) coefficients (Higham 2005).
  static const double b[] = {64764752532480000.0, 32382376266240000.0,
                             7771770303897600.0,  1187353796428800.0,
                             129060195264000.0,   10559470521600.0,
                             670442572800.0,      33522128640.0,
                             1323241920.0,        40840800.0,
                             960960.0,            16380.0,
                             182.0,               1.0};
  const double theta13 = 5.371920351148152;

  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > theta13)
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));
  const Mat as = a / std::pow(2.0, squarings);

  const Mat a2 = as * as;
  const Mat a4 = a2 * a2;
  const Mat a6 = a4 * a2;
  const Mat u = as * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) +
                      b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
  const Mat v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) +
                b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;

  Mat r = (v - u).partialPivLu().solve(v + u);
  for (int i = 0; i < squarings; ++i) r = r * r;
  return r;
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(
    int npoints) {
  if (npoints < 1) throw domain_error("gauss_legendre: need at least 1 node");
  std::vector<double> x(npoints), w(npoints);
  const int m = (npoints + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton iteration from the Chebyshev-based initial guess.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (npoints + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < npoints; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = npoints * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[npoints - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[npoints - 1 - i] = w[i];
  }
  return {x, w};
}

double Rng::uniform(double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(engine_);
}

double Rng::normal() {
  std::normal_distribution<double> dist(0.0, 1.0);
  return dist(engine_);
}

int Rng::uniform_int(int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  return dist(engine_);
}

Mat random_symmetric(Rng& rng, int dim, double spread) {
  Mat m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) m(i, j) = m(j, i) = rng.uniform(-spread, spread);
  return m;
}

Mat random_spd(Rng& rng, int dim, double eig_lo, double eig_hi) {
  if (eig_lo <= 0.0 || eig_hi < eig_lo)
    throw domain_error("random_spd: eigenvalue bounds must satisfy 0 < lo <= hi");
  Mat z(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) z(i, j) = rng.normal();
  Eigen::HouseholderQR<Mat> qr(z);
  Mat q = qr.householderQ();
  Vec d(dim);
  for (int i = 0; i < dim; ++i) d[i] = rng.uniform(eig_lo, eig_hi);
  return symmetrized(q * d.asDiagonal() * q.transpose());
}

}  // namespace qblob
