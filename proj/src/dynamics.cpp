#include "qblob/dynamics.hpp"

#include <cmath>
#include <sstream>

#include "qblob/errors.hpp"
#include "qblob/linalg.hpp"
#include "qblob/wigner.hpp"

namespace qblob {

namespace {
const Complex kI(0.0, 1.0);
}

QuadraticHamiltonian::QuadraticHamiltonian(int n_, double hbar_, Mat R_)
    : n(n_), hbar(hbar_), R(std::move(R_)) {
  if (n < 1) throw domain_error("QuadraticHamiltonian: n must be >= 1");
  if (hbar <= 0.0) throw domain_error("QuadraticHamiltonian: hbar must be > 0");
  if (R.rows() != 2 * n || R.cols() != 2 * n)
    throw dimension_error("QuadraticHamiltonian: R must be 2n x 2n");
  if (!is_symmetric(R, 1e-10))
    throw domain_error("QuadraticHamiltonian: R must be symmetric");
}

double QuadraticHamiltonian::value(const Vec& z) const {
  if (z.size() != 2 * n)
    throw dimension_error("QuadraticHamiltonian::value: z must have length 2n");
  return 0.5 * z.dot(R * z);
}

QuadraticHamiltonian QuadraticHamiltonian::kinetic_plus_potential(
    int n, double hbar, const Mat& omega, double mass) {
  if (mass <= 0.0)
    throw domain_error("kinetic_plus_potential: mass must be > 0");
  if (omega.rows() != n || omega.cols() != n)
    throw dimension_error("kinetic_plus_potential: Omega must be n x n");
  Mat r = Mat::Zero(2 * n, 2 * n);
  r.topLeftCorner(n, n) = omega;
  r.bottomRightCorner(n, n) = Mat::Identity(n, n) / mass;
  return QuadraticHamiltonian(n, hbar, std::move(r));
}

Mat generator(const QuadraticHamiltonian& h) {
  const Mat j = standard_J(h.n);
  const Mat k = j * h.R;
  // Lie-algebra certificate: KJ + JK^T = 0.
  if (max_abs(k * j + j * k.transpose()) >
      1e-12 * std::max(1.0, max_abs(k)))
    throw numerical_error("generator: K = JR is not in sp(2n)");
  return k;
}

SymplecticMatrix flow(const QuadraticHamiltonian& h, double t) {
  const Mat st = expm(t * generator(h));
  const Mat j = standard_J(h.n);
  const double drift = max_abs(st.transpose() * j * st - j);
  if (drift > 1e-6) {
    std::ostringstream os;
    os << "flow: symplectic drift " << drift << " exceeds 1e-6 at t = " << t;
    throw numerical_error(os.str());
  }
  return SymplecticMatrix(st, 1e-6);
}

GaussianState FlowResult::state() const {
  return GaussianState(S_t.modes(), hbar, X_t, Y_t, z_t, gamma_t);
}

FlowResult evolve_state(const GaussianState& state0,
                        const QuadraticHamiltonian& h, double t,
                        int quadrature_nodes) {
  if (state0.n != h.n)
    throw dimension_error("evolve_state: state and Hamiltonian mode counts differ");
  if (quadrature_nodes < 2)
    throw validation_error("evolve_state: need at least 2 quadrature nodes");

  const SymplecticMatrix st = flow(h, t);
  const Mat sinv = st.inverse().entries();
  const Mat g0 = g_matrix(state0.X, state0.Y);
  const XYRecovery rec = xy_from_g(symmetrized(sinv.transpose() * g0 * sinv));

  // Symmetrized action integral along z_tau = S_tau z0.
  const Mat k = generator(h);
  double gamma = state0.gamma;
  if (t != 0.0) {
    const auto [nodes, weights] = gauss_legendre(quadrature_nodes);
    double integral = 0.0;
    for (int i = 0; i < quadrature_nodes; ++i) {
      const double tau = 0.5 * t * (nodes[i] + 1.0);
      const Vec z = flow(h, tau).entries() * state0.z0;
      const Vec zdot = k * z;
      integral += 0.5 * t * weights[i] *
                  (0.5 * symplectic_form(z, zdot) - h.value(z));
    }
    gamma += integral;
  }

  FlowResult result{t, state0.hbar, st, st.entries() * state0.z0,
                    rec.X, rec.Y, gamma};
  return result;
}

QuantumBlob evolve_blob(const QuantumBlob& blob0, const QuadraticHamiltonian& h,
                        double t) {
  if (blob0.n != h.n)
    throw dimension_error("evolve_blob: blob and Hamiltonian mode counts differ");
  return blob_transform(flow(h, t), blob0);
}

namespace {

// Second derivative of the Gaussian amplitude from its complex exponent:
// psi = A e^{E(x)}, psi'' = (E'' + E'^2) psi.
struct GaussianDerivatives {
  Complex value;
  Complex second;
};

GaussianDerivatives eval_with_second(const GaussianState& s, double x) {
  Vec xv(1);
  xv[0] = x;
  const Complex psi = evaluate(s, xv);
  const Complex m(s.X(0, 0), s.Y(0, 0));
  const double x0 = s.x0()[0];
  const double p0 = s.p0()[0];
  const Complex eprime = kI * p0 / s.hbar - m * (x - x0) / s.hbar;
  const Complex esecond = -m / s.hbar;
  return {psi, (esecond + eprime * eprime) * psi};
}

}  // namespace

ResidualReport schrodinger_residual(const GaussianState& state0,
                                    const QuadraticHamiltonian& h, double t,
                                    const GridSpec& grid) {
  if (state0.n != 1 || h.n != 1)
    throw dimension_error("schrodinger_residual: only n = 1 is supported");
  const double scale = std::max(1.0, max_abs(h.R));
  if (std::abs(h.R(0, 1)) > 1e-12 * scale)
    throw domain_error(
        "schrodinger_residual: R must be diag(omega, 1/m) (no cross term)");
  const double omega = h.R(0, 0);
  const double kinetic = h.R(1, 1);  // 1/m; may be 0 for the trivial Hamiltonian
  const double hbar = state0.hbar;

  const GaussianState now = evolve_state(state0, h, t).state();
  const double dt = 1e-5;
  const GaussianState fwd = evolve_state(state0, h, t + dt).state();
  const GaussianState bwd = evolve_state(state0, h, t - dt).state();

  const int npts = grid.npoints;
  CVec psi(npts), residual(npts);
  const Vec xs = Vec::LinSpaced(npts, grid.xmin, grid.xmax);
  Vec xv(1);
  for (int i = 0; i < npts; ++i) {
    const double x = xs[i];
    const GaussianDerivatives d = eval_with_second(now, x);
    xv[0] = x;
    const Complex dpsi_dt =
        (evaluate(fwd, xv) - evaluate(bwd, xv)) / (2.0 * dt);
    const Complex hpsi =
        -0.5 * hbar * hbar * kinetic * d.second +
        0.5 * omega * x * x * d.value;
    psi[i] = d.value;
    residual[i] = kI * hbar * dpsi_dt - hpsi;
  }

  // Trapezoid inner products on the grid.
  const double hstep = (grid.xmax - grid.xmin) / (npts - 1);
  auto dot = [&](const CVec& a, const CVec& b) {
    Complex acc(0.0, 0.0);
    for (int i = 0; i < npts; ++i) {
      Complex term = std::conj(a[i]) * b[i];
      if (i == 0 || i + 1 == npts) term *= 0.5;
      acc += term;
    }
    return acc * hstep;
  };

  const Complex norm2 = dot(psi, psi);
  ResidualReport report;
  report.lambda_t = dot(psi, residual) / norm2;
  const CVec defect_vec = residual - report.lambda_t * psi;
  report.defect =
      std::sqrt(std::abs(dot(defect_vec, defect_vec) / norm2));
  return report;
}

}  // namespace qblob
