#pragma once

#include <vector>

#include "qblob/gaussian.hpp"
#include "qblob/types.hpp"
#include "qblob/uncertainty.hpp"

namespace qblob {

/// Fermi ellipsoid of a Gaussian state: the region M_F z.z <= hbar (relative
/// to the state's center) with
///   M_F = (1/Tr X) [[X^2 + Y^2, Y], [Y, I]].
class FermiEllipsoid {
 public:
  FermiEllipsoid(int n, double hbar, Vec center, Mat M_F);

  int n;
  double hbar;
  Vec center;
  Mat M_F;
};

/// Fermi's function of the state at z, relative to the state's center:
///   g_F(z) = (p + Yx).(p + Yx) + X^2 x.x - hbar Tr X  with (x, p) = z - z0.
double fermi_function(const GaussianState& state, const Vec& z);

/// Builds M_F and verifies the factorization
///   M_F = (1/Tr X) S^T diag(X, X) S, S = s_from_xy(X, Y), to 1e-10.
FermiEllipsoid fermi_ellipsoid(const GaussianState& state);

/// The symplectic normal form sum_j lambda_j (x_j^2 + p_j^2) <= hbar Tr X:
/// eigenvalues of X (descending) and Tr X.
struct FermiNormalForm {
  std::vector<double> lambdas;
  double trace_x = 0.0;
};
FermiNormalForm fermi_normal_form(const GaussianState& state);

/// c(W_F) = pi hbar Tr X / lambda_max(X); cross-checked against the symplectic
/// spectrum of M_F and the bounds pi hbar <= c <= n pi hbar.
CapacityValue fermi_capacity(const GaussianState& state);

/// The containment inequality lambda_j / Tr X <= 1 for all j (the Fermi
/// ellipsoid holds a quantum blob). Always true for valid states; evaluating
/// it is the assertion.
bool fermi_contains_blob(const GaussianState& state);

/// Sup-norm residual (relative to sup |Psi|) of the Fermi operator
///   (-i hbar grad - grad Phi)^2 Psi + hbar^2 (lap R / R) Psi
/// on the grid, with Phi and R the analytic polar data of the Gaussian and all
/// derivatives taken analytically. Requires n = 1.
double fermi_operator_residual(const GaussianState& state, const GridSpec& grid);

/// Residual of (-hbar^2 lap + x^2) psi = 3 hbar psi for the Hermite function
/// psi = x e^{-x^2/(2 hbar)}, with analytic derivatives; the n = 1 oracle for
/// the excited-state form of the Fermi equation.
double hermite_oscillator_residual(double hbar, const GridSpec& grid);

}  // namespace qblob
