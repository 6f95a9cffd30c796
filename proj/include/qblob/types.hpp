#pragma once

#include <Eigen/Dense>
#include <complex>

namespace qblob {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using Complex = std::complex<double>;

// Default certification tolerance for symplectic membership checks.
inline constexpr double kSymplecticTol = 1e-10;
// Tolerance for symplectic-spectrum comparisons.
inline constexpr double kSpectrumTol = 1e-8;

}  // namespace qblob
