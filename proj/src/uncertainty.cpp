#include "qblob/uncertainty.hpp"

#include <cmath>
#include <numbers>

#include "qblob/errors.hpp"
#include "qblob/linalg.hpp"
#include "qblob/wigner.hpp"

namespace qblob {

namespace {
constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);
}  // namespace

CovarianceMatrix::CovarianceMatrix(int n_, double hbar_, Mat sigma_)
    : n(n_), hbar(hbar_), sigma(std::move(sigma_)) {
  if (n < 1) throw domain_error("CovarianceMatrix: n must be >= 1");
  if (hbar <= 0.0) throw domain_error("CovarianceMatrix: hbar must be > 0");
  if (sigma.rows() != 2 * n || sigma.cols() != 2 * n)
    throw dimension_error("CovarianceMatrix: Sigma must be 2n x 2n");
  if (!is_spd(sigma))
    throw domain_error("CovarianceMatrix: Sigma must be SPD");
}

double CovarianceMatrix::var_x(int j) const { return sigma(j - 1, j - 1); }
double CovarianceMatrix::var_p(int j) const {
  return sigma(n + j - 1, n + j - 1);
}
double CovarianceMatrix::cov_xp(int j) const { return sigma(j - 1, n + j - 1); }

CapacityValue capacity_ellipsoid(const PhaseSpaceEllipsoid& e) {
  const SymplecticSpectrum spec = symplectic_spectrum(e.shape);
  return CapacityValue{kPi * e.hbar / spec.values.front()};
}

CapacityValue capacity_blob(const QuantumBlob& blob) {
  return capacity_ellipsoid(
      PhaseSpaceEllipsoid(blob.n, blob.hbar, blob.center, blob.G));
}

CovarianceMatrix covariance_from_state(const GaussianState& state) {
  const Mat g = g_matrix(state.X, state.Y);
  const Mat ginv = g.llt().solve(Mat::Identity(2 * state.n, 2 * state.n));
  return CovarianceMatrix(state.n, state.hbar,
                          symmetrized(0.5 * state.hbar * ginv));
}

std::vector<RsModeReport> rs_check(const CovarianceMatrix& cov) {
  std::vector<RsModeReport> report;
  report.reserve(cov.n);
  const double tol = 1e-12 * cov.hbar * cov.hbar;
  for (int j = 1; j <= cov.n; ++j) {
    RsModeReport r;
    r.mode = j;
    r.lhs = cov.var_x(j) * cov.var_p(j);
    const double c = cov.cov_xp(j);
    r.rhs = c * c + 0.25 * cov.hbar * cov.hbar;
    r.slack = r.lhs - r.rhs;
    r.pass = r.slack >= -tol;
    report.push_back(r);
  }
  return report;
}

PsdReport sigma_psd_check(const CovarianceMatrix& cov) {
  const CMat h = cov.sigma.cast<Complex>() +
                 kI * (0.5 * cov.hbar) * standard_J(cov.n).cast<Complex>();
  Eigen::SelfAdjointEigenSolver<CMat> es(h, Eigen::EigenvaluesOnly);
  PsdReport r;
  r.min_eigenvalue = es.eigenvalues().minCoeff();
  r.pass = r.min_eigenvalue >= -1e-10 * cov.hbar;
  return r;
}

CapacityConditionReport capacity_condition(const CovarianceMatrix& cov) {
  const Mat shape = symmetrized(
      0.5 * cov.hbar *
      cov.sigma.llt().solve(Mat::Identity(2 * cov.n, 2 * cov.n)));
  const PhaseSpaceEllipsoid e(cov.n, cov.hbar, Vec::Zero(2 * cov.n), shape);
  CapacityConditionReport r;
  r.capacity = capacity_ellipsoid(e).value;
  r.pass = r.capacity >= kPi * cov.hbar - 1e-10;
  return r;
}

AxiomSuiteReport capacity_axiom_suite(std::uint64_t seed) {
  Rng rng(seed);
  AxiomSuiteReport report;
  const double hbar = 1.0;

  auto cap = [&](const Mat& shape) {
    return capacity_ellipsoid(PhaseSpaceEllipsoid(
               static_cast<int>(shape.rows()) / 2, hbar,
               Vec::Zero(shape.rows()), shape))
        .value;
  };

  // SC2: invariance under random symplectic images.
  report.invariance = {"SC2-symplectic-invariance", 0.0, 1e-9, false};
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.uniform_int(1, 3);
    const Mat shape = random_spd(rng, 2 * n, 0.2, 5.0);
    const SymplecticMatrix s = random_symplectic(n, rng.engine()(), 1.0);
    const Mat sinv = s.inverse().entries();
    const Mat moved = symmetrized(sinv.transpose() * shape * sinv);
    const double c0 = cap(shape);
    const double drift = std::abs(cap(moved) - c0) / c0;
    report.invariance.max_error = std::max(report.invariance.max_error, drift);
  }
  report.invariance.pass =
      report.invariance.max_error <= report.invariance.threshold;

  // SC3: c(lambda Omega) = lambda^2 c(Omega); lambda Omega has shape M/lambda^2.
  report.scaling = {"SC3-scaling", 0.0, 1e-12, false};
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.uniform_int(1, 3);
    const Mat shape = random_spd(rng, 2 * n, 0.2, 5.0);
    const double lam = (trial == 0) ? 2.0 : rng.uniform(0.3, 3.0);
    const double c0 = cap(shape);
    const double cs = cap(shape / (lam * lam));
    const double err = std::abs(cs - lam * lam * c0) / (lam * lam * c0);
    report.scaling.max_error = std::max(report.scaling.max_error, err);
  }
  report.scaling.pass = report.scaling.max_error <= report.scaling.threshold;

  // SC4: balls. Shape (hbar/R^2) I gives |z| <= R, capacity pi R^2.
  report.ball_value = {"SC4-ball-normalization", 0.0, 1e-12, false};
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.uniform_int(1, 3);
    const double radius = rng.uniform(0.2, 3.0);
    const Mat shape =
        (hbar / (radius * radius)) * Mat::Identity(2 * n, 2 * n);
    const double expected = kPi * radius * radius;
    const double err = std::abs(cap(shape) - expected) / expected;
    report.ball_value.max_error = std::max(report.ball_value.max_error, err);
  }
  report.ball_value.pass =
      report.ball_value.max_error <= report.ball_value.threshold;

  // SC1: adding a PSD term shrinks the set, so capacity must not grow.
  report.monotonicity = {"SC1-monotonicity", 0.0, 1e-12, false};
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.uniform_int(1, 3);
    const Mat shape = random_spd(rng, 2 * n, 0.2, 5.0);
    Mat bump = random_spd(rng, 2 * n, 1e-6, rng.uniform(0.1, 2.0));
    const double c_outer = cap(shape);
    const double c_inner = cap(symmetrized(shape + bump));
    const double viol = std::max(0.0, (c_inner - c_outer) / c_outer);
    report.monotonicity.max_error =
        std::max(report.monotonicity.max_error, viol);
  }
  report.monotonicity.pass =
      report.monotonicity.max_error <= report.monotonicity.threshold;

  report.all_pass = report.invariance.pass && report.scaling.pass &&
                    report.ball_value.pass && report.monotonicity.pass;
  return report;
}

}  // namespace qblob
