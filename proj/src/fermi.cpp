#include "qblob/fermi.hpp"

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

FermiEllipsoid::FermiEllipsoid(int n_, double hbar_, Vec center_, Mat mf)
    : n(n_), hbar(hbar_), center(std::move(center_)), M_F(std::move(mf)) {
  if (n < 1) throw domain_error("FermiEllipsoid: n must be >= 1");
  if (hbar <= 0.0) throw domain_error("FermiEllipsoid: hbar must be > 0");
  if (M_F.rows() != 2 * n || M_F.cols() != 2 * n)
    throw dimension_error("FermiEllipsoid: M_F must be 2n x 2n");
  if (center.size() != 2 * n)
    throw dimension_error("FermiEllipsoid: center must have length 2n");
  if (!is_spd(M_F)) throw domain_error("FermiEllipsoid: M_F must be SPD");
}

double fermi_function(const GaussianState& state, const Vec& z) {
  if (z.size() != 2 * state.n)
    throw dimension_error("fermi_function: z must have length 2n");
  const int n = state.n;
  const Vec x = z.head(n) - state.x0();
  const Vec p = z.tail(n) - state.p0();
  const Vec u = p + state.Y * x;
  const Vec xx = state.X * x;
  return u.dot(u) + xx.dot(xx) - state.hbar * state.X.trace();
}

FermiEllipsoid fermi_ellipsoid(const GaussianState& state) {
  const int n = state.n;
  const double tr = state.X.trace();
  Mat mf(2 * n, 2 * n);
  mf.topLeftCorner(n, n) = state.X * state.X + state.Y * state.Y;
  mf.topRightCorner(n, n) = state.Y;
  mf.bottomLeftCorner(n, n) = state.Y;
  mf.bottomRightCorner(n, n) = Mat::Identity(n, n);
  mf = symmetrized(mf / tr);

  // Factorization certificate: M_F = (1/Tr X) S^T diag(X, X) S.
  const Mat s = s_from_xy(state.X, state.Y).entries();
  Mat xx = Mat::Zero(2 * n, 2 * n);
  xx.topLeftCorner(n, n) = state.X;
  xx.bottomRightCorner(n, n) = state.X;
  const Mat factored = s.transpose() * xx * s / tr;
  if (max_abs(mf - factored) > 1e-10 * std::max(1.0, max_abs(mf)))
    throw numerical_error("fermi_ellipsoid: factorization check failed");

  return FermiEllipsoid(n, state.hbar, state.z0, std::move(mf));
}

FermiNormalForm fermi_normal_form(const GaussianState& state) {
  Eigen::SelfAdjointEigenSolver<Mat> es(symmetrized(state.X),
                                        Eigen::EigenvaluesOnly);
  FermiNormalForm form;
  form.trace_x = state.X.trace();
  form.lambdas.assign(es.eigenvalues().data(),
                      es.eigenvalues().data() + state.n);
  std::reverse(form.lambdas.begin(), form.lambdas.end());  // descending
  return form;
}

CapacityValue fermi_capacity(const GaussianState& state) {
  const FermiNormalForm form = fermi_normal_form(state);
  const double value =
      kPi * state.hbar * form.trace_x / form.lambdas.front();

  const FermiEllipsoid fe = fermi_ellipsoid(state);
  const double via_spectrum =
      capacity_ellipsoid(
          PhaseSpaceEllipsoid(fe.n, fe.hbar, fe.center, fe.M_F))
          .value;
  if (std::abs(value - via_spectrum) > 1e-9 * value)
    throw numerical_error(
        "fermi_capacity: normal-form value disagrees with the symplectic spectrum route");

  const double lo = kPi * state.hbar * (1.0 - 1e-12);
  const double hi = state.n * kPi * state.hbar * (1.0 + 1e-12);
  if (value < lo || value > hi) {
    std::ostringstream os;
    os << "fermi_capacity: value " << value << " violates bounds ["
       << kPi * state.hbar << ", " << state.n * kPi * state.hbar << "]";
    throw numerical_error(os.str());
  }
  return CapacityValue{value};
}

bool fermi_contains_blob(const GaussianState& state) {
  const FermiNormalForm form = fermi_normal_form(state);
  for (double lam : form.lambdas)
    if (lam / form.trace_x > 1.0 + 1e-12)
      throw numerical_error(
          "fermi_contains_blob: lambda/TrX > 1, containment violated");
  return true;
}

double fermi_operator_residual(const GaussianState& state,
                               const GridSpec& grid) {
  if (state.n != 1)
    throw dimension_error("fermi_operator_residual: only n = 1 is supported");
  const double hbar = state.hbar;
  const double X = state.X(0, 0);
  const double Y = state.Y(0, 0);
  const double x0 = state.x0()[0];
  const double p0 = state.p0()[0];

  double sup_res = 0.0, sup_psi = 0.0;
  Vec xv(1);
  for (int i = 0; i < grid.npoints; ++i) {
    const double x =
        grid.xmin + (grid.xmax - grid.xmin) * i / (grid.npoints - 1);
    const double u = x - x0;
    xv[0] = x;
    const Complex psi = evaluate(state, xv);

    // Complex-exponent derivatives of psi.
    const Complex m(X, Y);
    const Complex eprime = kI * p0 / hbar - m * u / hbar;
    const Complex psi1 = eprime * psi;
    const Complex psi2 = (-m / hbar + eprime * eprime) * psi;

    // Polar data: Phi = gamma + p0 x - p0 x0/2 - Y u^2/2, R = |psi|.
    const double phi1 = p0 - Y * u;
    const double phi2 = -Y;
    const double lapR_over_R = (X * X * u * u / (hbar * hbar)) - X / hbar;

    const Complex gf = -hbar * hbar * psi2 + 2.0 * kI * hbar * phi1 * psi1 +
                       (kI * hbar * phi2 + phi1 * phi1 +
                        hbar * hbar * lapR_over_R) *
                           psi;
    sup_res = std::max(sup_res, std::abs(gf));
    sup_psi = std::max(sup_psi, std::abs(psi));
  }
  if (sup_psi <= 0.0)
    throw domain_error("fermi_operator_residual: state vanished on grid");
  return sup_res / sup_psi;
}

double hermite_oscillator_residual(double hbar, const GridSpec& grid) {
  if (hbar <= 0.0)
    throw domain_error("hermite_oscillator_residual: hbar must be > 0");
  double sup_res = 0.0, sup_psi = 0.0;
  for (int i = 0; i < grid.npoints; ++i) {
    const double x =
        grid.xmin + (grid.xmax - grid.xmin) * i / (grid.npoints - 1);
    const double g = std::exp(-x * x / (2.0 * hbar));
    const double psi = x * g;
    const double psi2 = (x * x * x / (hbar * hbar) - 3.0 * x / hbar) * g;
    const double r = -hbar * hbar * psi2 + x * x * psi - 3.0 * hbar * psi;
    sup_res = std::max(sup_res, std::abs(r));
    sup_psi = std::max(sup_psi, std::abs(psi));
  }
  return sup_res / sup_psi;
}

}  // namespace qblob
