#pragma once

#include "qblob/blob.hpp"
#include "qblob/gaussian.hpp"
#include "qblob/symplectic.hpp"
#include "qblob/types.hpp"

namespace qblob {

/// Quadratic Hamiltonian H(z) = R z . z / 2 with symmetric R.
class QuadraticHamiltonian {
 public:
  QuadraticHamiltonian(int n, double hbar, Mat R);

  int n;
  double hbar;
  Mat R;

  double value(const Vec& z) const;

  /// Kinetic-plus-potential form diag(Omega, I/m).
  static QuadraticHamiltonian kinetic_plus_potential(int n, double hbar,
                                                     const Mat& omega,
                                                     double mass);
};

/// Hamiltonian vector-field matrix K = J R, so that zdot = K z. Certified to
/// lie in the symplectic Lie algebra: K J + J K^T = 0 within 1e-12.
Mat generator(const QuadraticHamiltonian& h);

/// The flow S_t = exp(t K), certified symplectic. Residuals above 1e-6 are an
/// accuracy error; no re-orthogonalization is applied.
SymplecticMatrix flow(const QuadraticHamiltonian& h, double t);

/// Evolved Gaussian parameters at time t: z_t = S_t z0, (X_t, Y_t) from the
/// Wigner pushforward G_t = (S_t^{-1})^T G_0 S_t^{-1}, and gamma_t from the
/// symmetrized action integral (Gauss-Legendre along the analytic trajectory).
struct FlowResult {
  double t = 0.0;
  double hbar = 1.0;
  SymplecticMatrix S_t;
  Vec z_t;
  Mat X_t;
  Mat Y_t;
  double gamma_t = 0.0;

  GaussianState state() const;
};
FlowResult evolve_state(const GaussianState& state0,
                        const QuadraticHamiltonian& h, double t,
                        int quadrature_nodes = 64);

/// Classical transport of the blob by the flow.
QuantumBlob evolve_blob(const QuantumBlob& blob0, const QuadraticHamiltonian& h,
                        double t);

/// How far the evolved state is from solving the Schroedinger equation up to
/// a global time-dependent phase: r = i hbar dPsi/dt - H Psi should be
/// proportional to Psi. Returns lambda_t = <Psi, r>/<Psi, Psi> and the defect
/// ||r - lambda_t Psi|| / ||Psi||. Requires n = 1 and R = diag(omega, 1/m).
struct ResidualReport {
  double defect = 0.0;
  Complex lambda_t{0.0, 0.0};
};
ResidualReport schrodinger_residual(const GaussianState& state0,
                                    const QuadraticHamiltonian& h, double t,
                                    const GridSpec& grid);

}  // namespace qblob
