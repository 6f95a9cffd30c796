#pragma once

#include <vector>

#include "qblob/gaussian.hpp"
#include "qblob/symplectic.hpp"
#include "qblob/types.hpp"

namespace qblob {

/// Phase-space ellipsoid {z : G (z - center).(z - center) <= hbar} whose shape
/// matrix G is SPD and symplectic - the canonical form of an affine symplectic
/// image of the ball B^{2n}(sqrt(hbar)). Storing (center, G) quotients out the
/// U(n) ambiguity of the generating map.
class QuantumBlob {
 public:
  QuantumBlob(int n, double hbar, Vec center, Mat G, double tol = 1e-9);

  int n;
  double hbar;
  Vec center;
  Mat G;

  bool contains(const Vec& z) const;
};

/// General ellipsoid {z : shape (z - center).(z - center) <= hbar}; shape is
/// SPD but not necessarily symplectic.
class PhaseSpaceEllipsoid {
 public:
  PhaseSpaceEllipsoid(int n, double hbar, Vec center, Mat shape);

  int n;
  double hbar;
  Vec center;
  Mat shape;
};

/// The blob of a state under the state <-> blob correspondence: center z0,
/// shape g_matrix(X, Y).
QuantumBlob blob_from_state(const GaussianState& state);

/// Inverse correspondence. The ball -> blob map G^{-1/2} is factored through
/// pre_iwasawa into [[L,0],[Q,L^{-1}]] U; the triangular factor inverts to the
/// state parameters X = L^{-2}, Y = -Q L^{-1}. Certified by rebuilding the
/// blob from the result. gamma is set to 0 (the correspondence forgets phase).
GaussianState state_from_blob(const QuantumBlob& blob);

/// Blob with the given generating map applied to the ball: shape (S S^T)^{-1}.
QuantumBlob blob_from_map(const SymplecticMatrix& s, const Vec& center,
                          double hbar);

/// Affine symplectic pushforward: center -> S center, G -> (S^{-1})^T G S^{-1}.
QuantumBlob blob_transform(const SymplecticMatrix& s, const QuantumBlob& blob);

/// Equality of the canonical representatives within tol.
bool blob_equal(const QuantumBlob& a, const QuantumBlob& b, double tol);

/// pi^n hbar^n / n!, the volume of every quantum blob (h^n / (n! 2^n)).
double blob_volume(int n, double hbar);

/// Area of the central section by the plane of conjugate coordinates
/// (x_j, p_j): pi hbar / sqrt(det G|_{j, n+j}). Mode index j is 1-based.
double section_area(const QuantumBlob& blob, int j);

/// Area of the orthogonal shadow on the (x_j, p_j) plane:
/// pi hbar sqrt(det (G^{-1})|_{j, n+j}).
double projection_area(const QuantumBlob& blob, int j);

/// Boundary polyline of the central (x_j, p_j) section, for plotting.
std::vector<std::pair<double, double>> section_boundary(const QuantumBlob& blob,
                                                        int j, int npoints);

}  // namespace qblob
