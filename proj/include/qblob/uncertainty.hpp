#pragma once

#include <cstdint>
#include <vector>

#include "qblob/blob.hpp"
#include "qblob/gaussian.hpp"
#include "qblob/types.hpp"

namespace qblob {

/// Covariance matrix of a phase-space Gaussian, Sigma = (hbar/2) K^{-1},
/// blocks Delta(X,X), Delta(X,P), Delta(P,X), Delta(P,P).
class CovarianceMatrix {
 public:
  CovarianceMatrix(int n, double hbar, Mat sigma);

  int n;
  double hbar;
  Mat sigma;

  Mat dxx() const { return sigma.topLeftCorner(n, n); }      // Delta(X,X)
  Mat dxp() const { return sigma.topRightCorner(n, n); }     // Delta(X,P)
  Mat dpx() const { return sigma.bottomLeftCorner(n, n); }   // Delta(P,X)
  Mat dpp() const { return sigma.bottomRightCorner(n, n); }  // Delta(P,P)

  double var_x(int j) const;            // (Delta x_j)^2, 1-based
  double var_p(int j) const;            // (Delta p_j)^2
  double cov_xp(int j) const;           // Cov(x_j, p_j)
};

struct CapacityValue {
  double value = 0.0;  // action units
};

/// Every symplectic capacity of an ellipsoid Mz.z <= hbar equals
/// pi hbar / lambda_max with lambda_max the largest symplectic eigenvalue of
/// M; center-independent.
CapacityValue capacity_ellipsoid(const PhaseSpaceEllipsoid& e);
CapacityValue capacity_blob(const QuantumBlob& blob);

/// Sigma = (hbar/2) G^{-1} with G the Wigner shape matrix of the state.
CovarianceMatrix covariance_from_state(const GaussianState& state);

/// Robertson-Schroedinger report, one row per mode.
struct RsModeReport {
  int mode = 0;      // 1-based
  double lhs = 0.0;  // (Delta x_j)^2 (Delta p_j)^2
  double rhs = 0.0;  // Cov(x_j, p_j)^2 + hbar^2/4
  double slack = 0.0;
  bool pass = false;
};
std::vector<RsModeReport> rs_check(const CovarianceMatrix& cov);

/// Minimum eigenvalue of the Hermitian matrix Sigma + (i hbar/2) J; the state
/// condition is that it be positive semi-definite.
struct PsdReport {
  bool pass = false;
  double min_eigenvalue = 0.0;
};
PsdReport sigma_psd_check(const CovarianceMatrix& cov);

/// Capacity form of the same condition: the ellipsoid
/// (hbar/2) Sigma^{-1} z.z <= hbar must have capacity >= pi hbar.
struct CapacityConditionReport {
  bool pass = false;
  double capacity = 0.0;
};
CapacityConditionReport capacity_condition(const CovarianceMatrix& cov);

/// Property-test report for the capacity axioms, restricted to ellipsoids.
struct AxiomCheck {
  const char* id = "";
  double max_error = 0.0;
  double threshold = 0.0;
  bool pass = false;
};
struct AxiomSuiteReport {
  AxiomCheck monotonicity;   // SC1 on nested pairs
  AxiomCheck invariance;     // SC2 under random symplectic maps
  AxiomCheck scaling;        // SC3, c(lambda Omega) = lambda^2 c(Omega)
  AxiomCheck ball_value;     // SC4, c(B(R)) = pi R^2
  bool all_pass = false;
};
AxiomSuiteReport capacity_axiom_suite(std::uint64_t seed);

}  // namespace qblob
