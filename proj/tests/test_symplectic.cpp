#include <doctest.h>

#include "qblob/errors.hpp"
#include "qblob/linalg.hpp"
#include "qblob/symplectic.hpp"

using namespace qblob;

TEST_CASE("standard_J") {
  SUBCASE("n = 1") {
    Mat j = standard_J(1);
    CHECK(j(0, 0) == 0.0);
    CHECK(j(0, 1) == 1.0);
    CHECK(j(1, 0) == -1.0);
    CHECK(j(1, 1) == 0.0);
  }
  SUBCASE("n = 2 block layout") {
    Mat j = standard_J(2);
    CHECK(max_abs(j.topRightCorner(2, 2) - Mat::Identity(2, 2)) == 0.0);
    CHECK(max_abs(j.bottomLeftCorner(2, 2) + Mat::Identity(2, 2)) == 0.0);
    CHECK(max_abs(j.topLeftCorner(2, 2)) == 0.0);
  }
  SUBCASE("J^2 = -I for n = 3") {
    Mat j = standard_J(3);
    CHECK(max_abs(j * j + Mat::Identity(6, 6)) == 0.0);
    CHECK(max_abs(j.transpose() + j) == 0.0);
  }
}

TEST_CASE("is_symplectic") {
  CHECK(is_symplectic(standard_J(1), 1e-12));
  Mat squeeze(2, 2);
  squeeze << 2.0, 0.0, 0.0, 0.5;
  CHECK(is_symplectic(squeeze, 1e-12));
  Mat dilate(2, 2);
  dilate << 2.0, 0.0, 0.0, 2.0;
  CHECK_FALSE(is_symplectic(dilate, 1e-10));
  CHECK_THROWS_AS(is_symplectic(Mat::Identity(3, 3), 1e-10), dimension_error);
}

TEST_CASE("SymplecticMatrix certification and block algebra") {
  CHECK_THROWS_AS(SymplecticMatrix(2.0 * Mat::Identity(2, 2)), domain_error);
  const SymplecticMatrix s = random_symplectic(2, 5, 1.0);
  const SymplecticMatrix sinv = s.inverse();
  CHECK(max_abs(s.entries() * sinv.entries() - Mat::Identity(4, 4)) < 1e-12);
  const SymplecticMatrix prod = s * sinv;
  CHECK(max_abs(prod.entries() - Mat::Identity(4, 4)) < 1e-12);
}

TEST_CASE("symplectic_spectrum") {
  SUBCASE("identity, n = 2") {
    const SymplecticSpectrum spec = symplectic_spectrum(Mat::Identity(4, 4));
    REQUIRE(spec.values.size() == 2);
    CHECK(spec.values[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(spec.values[1] == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("diag(1,4,1,1) has spectrum (2,1)") {
    Vec d(4);
    d << 1.0, 4.0, 1.0, 1.0;
    const SymplecticSpectrum spec = symplectic_spectrum(d.asDiagonal());
    REQUIRE(spec.values.size() == 2);
    CHECK(spec.values[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(spec.values[1] == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("S^T S has all-ones spectrum") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
      const SymplecticMatrix s = random_symplectic(3, seed, 1.0);
      const Mat g = s.entries().transpose() * s.entries();
      for (double lam : symplectic_spectrum(symmetrized(g)).values)
        CHECK(lam == doctest::Approx(1.0).epsilon(1e-8));
    }
  }
  SUBCASE("invariance under symplectic congruence") {
    Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
      const int n = 1 + trial % 3;
      const Mat m = random_spd(rng, 2 * n, 0.3, 4.0);
      const SymplecticMatrix s = random_symplectic(n, rng.engine()(), 1.0);
      const Mat moved =
          symmetrized(s.entries().transpose() * m * s.entries());
      const auto a = symplectic_spectrum(m).values;
      const auto b = symplectic_spectrum(moved).values;
      for (int i = 0; i < n; ++i)
        CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-8));
    }
  }
  SUBCASE("rejects non-SPD input") {
    Mat m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    CHECK_THROWS_AS(symplectic_spectrum(m), domain_error);
    CHECK_THROWS_AS(symplectic_spectrum(standard_J(1)), domain_error);
  }
}

TEST_CASE("polar_S_from_G") {
  SUBCASE("identity") {
    const SymplecticMatrix s = polar_S_from_G(Mat::Identity(2, 2));
    CHECK(max_abs(s.entries() - Mat::Identity(2, 2)) < 1e-14);
  }
  SUBCASE("diagonal squeeze") {
    Mat g(2, 2);
    g << 2.0, 0.0, 0.0, 0.5;
    const SymplecticMatrix s = polar_S_from_G(g);
    CHECK(s.entries()(0, 0) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(s.entries()(1, 1) == doctest::Approx(std::sqrt(2.0)));
    CHECK(std::abs(s.entries()(0, 1)) < 1e-14);
  }
  SUBCASE("coupled shape reproduces G") {
    Mat g(2, 2);
    g << 2.0, 1.0, 1.0, 1.0;
    const SymplecticMatrix s = polar_S_from_G(g);
    const Mat sinv = s.inverse().entries();
    CHECK(max_abs(sinv.transpose() * sinv - g) < 1e-12);
  }
  SUBCASE("random SPD symplectic inputs") {
    for (std::uint64_t seed : {4ull, 5ull, 6ull, 7ull}) {
      const SymplecticMatrix t = random_symplectic(2, seed, 1.0);
      const Mat g = symmetrized(t.entries().transpose() * t.entries());
      const SymplecticMatrix s = polar_S_from_G(g);
      const Mat sinv = s.inverse().entries();
      CHECK(max_abs(sinv.transpose() * sinv - g) <
            1e-10 * std::max(1.0, max_abs(g)));
    }
  }
  SUBCASE("rejects non-symplectic and non-SPD") {
    CHECK_THROWS_AS(polar_S_from_G(2.0 * Mat::Identity(2, 2)), domain_error);
    CHECK_THROWS_AS(polar_S_from_G(standard_J(1)), domain_error);
  }
}

TEST_CASE("pre_iwasawa") {
  SUBCASE("identity") {
    const PreIwasawaFactors f =
        pre_iwasawa(SymplecticMatrix(Mat::Identity(2, 2)));
    CHECK(max_abs(f.L - Mat::Identity(1, 1)) < 1e-14);
    CHECK(max_abs(f.Q) < 1e-14);
    CHECK(max_abs(f.U - Mat::Identity(2, 2)) < 1e-14);
  }
  SUBCASE("J splits as L = 1, Q = 0, U = J") {
    const PreIwasawaFactors f = pre_iwasawa(SymplecticMatrix(standard_J(1)));
    CHECK(f.L(0, 0) == doctest::Approx(1.0));
    CHECK(std::abs(f.Q(0, 0)) < 1e-14);
    CHECK(max_abs(f.U - standard_J(1)) < 1e-14);
  }
  SUBCASE("diagonal squeeze is its own triangular factor") {
    Mat t(2, 2);
    t << 2.0, 0.0, 0.0, 0.5;
    const PreIwasawaFactors f = pre_iwasawa(SymplecticMatrix(t));
    CHECK(f.L(0, 0) == doctest::Approx(2.0));
    CHECK(std::abs(f.Q(0, 0)) < 1e-14);
    CHECK(max_abs(f.U - Mat::Identity(2, 2)) < 1e-14);
  }
  SUBCASE("random factors: reassembly, rotation, LQ symmetry") {
    Rng rng(21);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 1 + trial % 3;
      const SymplecticMatrix t = random_symplectic(n, rng.engine()(), 1.0);
      const PreIwasawaFactors f = pre_iwasawa(t);

      Mat p(2 * n, 2 * n);
      p.topLeftCorner(n, n) = f.L;
      p.topRightCorner(n, n) = Mat::Zero(n, n);
      p.bottomLeftCorner(n, n) = f.Q;
      p.bottomRightCorner(n, n) = spd_inv_sqrt(f.L * f.L);
      CHECK(max_abs(p * f.U - t.entries()) <=
            1e-10 * std::max(1.0, max_abs(t.entries())));
      CHECK(is_symplectic_rotation(f.U, 1e-10));
      const Mat lq = f.L * f.Q;
      CHECK(max_abs(lq - lq.transpose()) <=
            1e-10 * std::max(1.0, max_abs(lq)));
      CHECK(is_spd(f.L));
    }
  }
  SUBCASE("factoring S^{-1} matches the closed block formulas in S") {
    // L = (D^T D + B^T B)^{1/2} and Q = -(C^T D + A^T B) L^{-1}.
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
      const int n = 1 + trial % 3;
      const SymplecticMatrix s = random_symplectic(n, rng.engine()(), 1.0);
      const PreIwasawaFactors f = pre_iwasawa(s.inverse());
      const Mat a = s.blockA(), b = s.blockB(), c = s.blockC(), d = s.blockD();
      const Mat l_expected =
          spd_sqrt(symmetrized(d.transpose() * d + b.transpose() * b));
      CHECK(max_abs(f.L - l_expected) <= 1e-9 * std::max(1.0, max_abs(f.L)));
      const Mat q_expected =
          -(c.transpose() * d + a.transpose() * b) * spd_inv_sqrt(f.L * f.L);
      CHECK(max_abs(f.Q - q_expected) <= 1e-9 * std::max(1.0, max_abs(f.Q)));
    }
  }
}

TEST_CASE("random_symplectic") {
  SUBCASE("certified membership") {
    const SymplecticMatrix s = random_symplectic(1, 0, 1.0);
    CHECK(s.certification_residual() <= 1e-12);
  }
  SUBCASE("deterministic in the seed") {
    const SymplecticMatrix a = random_symplectic(2, 42, 1.0);
    const SymplecticMatrix b = random_symplectic(2, 42, 1.0);
    CHECK(max_abs(a.entries() - b.entries()) == 0.0);
    const SymplecticMatrix c = random_symplectic(2, 43, 1.0);
    CHECK(max_abs(a.entries() - c.entries()) > 1e-6);
  }
  SUBCASE("n = 3, spread 2") {
    const SymplecticMatrix s = random_symplectic(3, 7, 2.0);
    CHECK(s.dim() == 6);
    CHECK(is_symplectic(s.entries(), 1e-10));
  }
  SUBCASE("det S = 1") {
    for (std::uint64_t seed : {10ull, 11ull, 12ull}) {
      const SymplecticMatrix s = random_symplectic(2, seed, 1.0);
      CHECK(s.entries().determinant() == doctest::Approx(1.0).epsilon(1e-8));
    }
  }
}

TEST_CASE("is_symplectic_rotation") {
  CHECK(is_symplectic_rotation(standard_J(1), 1e-12));
  Mat squeeze(2, 2);
  squeeze << 2.0, 0.0, 0.0, 0.5;
  CHECK_FALSE(is_symplectic_rotation(squeeze, 1e-10));
  const double th = 0.77;
  Mat rot(2, 2);
  rot << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
  CHECK(is_symplectic_rotation(rot, 1e-12));
  const SymplecticMatrix u = random_symplectic_rotation(3, 9);
  CHECK(is_symplectic_rotation(u.entries(), 1e-10));
}

TEST_CASE("symplectic_form matches the J pairing") {
  Rng rng(77);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 1 + trial % 3;
    Vec a(2 * n), b(2 * n);
    for (int i = 0; i < 2 * n; ++i) {
      a[i] = rng.uniform(-2.0, 2.0);
      b[i] = rng.uniform(-2.0, 2.0);
    }
    const double expected = (standard_J(n) * a).dot(b);
    CHECK(symplectic_form(a, b) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(symplectic_form(a, a) == doctest::Approx(0.0));
  }
}
