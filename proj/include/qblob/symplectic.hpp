#pragma once

#include <cstdint>
#include <vector>

#include "qblob/types.hpp"

namespace qblob {

/// The standard symplectic matrix [[0, I], [-I, 0]] for n modes, coordinate
/// order (x_1..x_n, p_1..p_n).
Mat standard_J(int n);

/// The symplectic form sigma(a, b) = Ja . b = a_p . b_x - b_p . a_x.
double symplectic_form(const Vec& a, const Vec& b);

/// True iff ||M^T J M - J||_max <= tol. Throws dimension_error for odd or
/// non-square input.
bool is_symplectic(const Mat& m, double tol = kSymplecticTol);

/// Membership in U(n) = Sp(2n,R) ∩ O(2n,R).
bool is_symplectic_rotation(const Mat& u, double tol = kSymplecticTol);

/// A 2n x 2n real matrix certified at construction to satisfy S^T J S = J.
class SymplecticMatrix {
 public:
  explicit SymplecticMatrix(Mat entries, double tol = kSymplecticTol);

  int modes() const { return n_; }
  int dim() const { return 2 * n_; }
  const Mat& entries() const { return s_; }

  Mat blockA() const { return s_.topLeftCorner(n_, n_); }
  Mat blockB() const { return s_.topRightCorner(n_, n_); }
  Mat blockC() const { return s_.bottomLeftCorner(n_, n_); }
  Mat blockD() const { return s_.bottomRightCorner(n_, n_); }

  /// Inverse through the block identity S^{-1} = [[D^T, -B^T], [-C^T, A^T]].
  SymplecticMatrix inverse() const;
  SymplecticMatrix operator*(const SymplecticMatrix& rhs) const;

  /// ||S^T J S - J||_max as measured at construction.
  double certification_residual() const { return residual_; }

 private:
  Mat s_;
  int n_;
  double residual_;
};

/// Williamson spectrum (lambda_1 >= ... >= lambda_n > 0) of an SPD matrix,
/// computed from the skew-symmetric similarity M^{1/2} J M^{1/2}.
struct SymplecticSpectrum {
  std::vector<double> values;  // descending
};
SymplecticSpectrum symplectic_spectrum(const Mat& m);

/// For SPD symplectic G, the SPD symplectic S = G^{-1/2}, which satisfies
/// (S^{-1})^T S^{-1} = G.
SymplecticMatrix polar_S_from_G(const Mat& g, double tol = kSymplecticTol);

/// Factors of T = [[L, 0], [Q, L^{-1}]] . U with L SPD, LQ symmetric and U a
/// symplectic rotation.
struct PreIwasawaFactors {
  Mat L;
  Mat Q;
  Mat U;
};
PreIwasawaFactors pre_iwasawa(const SymplecticMatrix& t,
                              double tol = kSymplecticTol);

/// Seeded random symplectic matrix: product of a symplectic rotation, shear
/// generators [[I,0],[C,I]], [[I,C'],[0,I]] and a squeezing diag(L, L^{-1}).
SymplecticMatrix random_symplectic(int n, std::uint64_t seed,
                                   double spread = 1.0);

/// Seeded random element of U(n) embedded as [[A, -B], [B, A]].
SymplecticMatrix random_symplectic_rotation(int n, std::uint64_t seed);

}  // namespace qblob
