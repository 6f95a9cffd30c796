#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "qblob/types.hpp"

namespace qblob {

// Internal numeric helpers shared across modules. They are building blocks,
// not part of the operation surface.

double max_abs(const Mat& m);
bool is_symmetric(const Mat& m, double tol);
Mat symmetrized(const Mat& m);

/// True iff m is symmetric (within asym_tol, relative) with all eigenvalues > 0.
bool is_spd(const Mat& m, double asym_tol = 1e-8);

/// SPD square root via symmetric eigendecomposition. Throws domain_error if
/// the input is not SPD.
Mat spd_sqrt(const Mat& m);
Mat spd_inv_sqrt(const Mat& m);

/// Dense matrix exponential, scaling-and-squaring with a degree-13 Pade
/// approximant.
Mat expm(const Mat& a);

/// Gauss-Legendre nodes and weights on [-1, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int npoints);

/// Seeded generator for reproducible test inputs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi);
  double normal();
  int uniform_int(int lo, int hi);  // inclusive bounds

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

Mat random_symmetric(Rng& rng, int dim, double spread);
/// Random SPD matrix with eigenvalues in [eig_lo, eig_hi].
Mat random_spd(Rng& rng, int dim, double eig_lo, double eig_hi);

}  // namespace qblob
