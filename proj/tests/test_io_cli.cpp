#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qblob/cli.hpp"
#include "qblob/errors.hpp"
#include "qblob/io.hpp"
#include "qblob/linalg.hpp"
#include "qblob/selfcheck.hpp"

using namespace qblob;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("qblob_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int counter() {
    static int c = 0;
    return c++;
  }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("qblob");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}


bool bit_equal(double a, double b) {
  return std::memcmp(&a, &b, sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("JSON round-trips are bitwise on doubles") {
  Rng rng(111);
  SUBCASE("gaussian state") {
    for (int trial = 0; trial < 5; ++trial) {
      const int n = 1 + trial % 3;
      Vec z0(2 * n);
      for (int i = 0; i < 2 * n; ++i) z0[i] = rng.uniform(-2.0, 2.0);
      const GaussianState s(n, 1.0, random_spd(rng, n, 0.4, 2.5),
                            random_symmetric(rng, n, 1.2), z0,
                            rng.uniform(-3.0, 3.0));
      const GaussianState back =
          state_from_json(Json::parse(state_to_json(s).dump()));
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          CHECK(bit_equal(s.X(i, k), back.X(i, k)));
          CHECK(bit_equal(s.Y(i, k), back.Y(i, k)));
        }
      for (int i = 0; i < 2 * n; ++i) CHECK(bit_equal(s.z0[i], back.z0[i]));
      CHECK(bit_equal(s.gamma, back.gamma));
    }
  }
  SUBCASE("blob and symplectic matrix") {
    const SymplecticMatrix s = random_symplectic(2, rng.engine()(), 1.0);
    const SymplecticMatrix s_back =
        symplectic_from_json(Json::parse(symplectic_to_json(s).dump()));
    CHECK(max_abs(s.entries() - s_back.entries()) == 0.0);

    const QuantumBlob b = blob_from_map(s, Vec::Zero(4), 1.0);
    const QuantumBlob b_back = blob_from_json(Json::parse(blob_to_json(b).dump()));
    CHECK(max_abs(b.G - b_back.G) == 0.0);
  }
  SUBCASE("hamiltonian and covariance") {
    const QuadraticHamiltonian h(2, 1.0, random_symmetric(rng, 4, 1.0));
    const QuadraticHamiltonian h_back =
        hamiltonian_from_json(Json::parse(hamiltonian_to_json(h).dump()));
    CHECK(max_abs(h.R - h_back.R) == 0.0);

    const CovarianceMatrix c(1, 1.0, random_spd(rng, 2, 0.5, 1.5));
    const CovarianceMatrix c_back =
        covariance_from_json(Json::parse(covariance_to_json(c).dump()));
    CHECK(max_abs(c.sigma - c_back.sigma) == 0.0);
  }
}

TEST_CASE("JSON validation errors") {
  CHECK_THROWS_AS(state_from_json(Json::parse(R"({"n":1,"hbar":1.0})")),
                  validation_error);
  CHECK_THROWS_AS(
      mat_from_json(Json::parse(R"({"m":[[1.0],[2.0,3.0]]})"), "m"),
      validation_error);
  CHECK_THROWS_AS(vec_from_json(Json::parse(R"({"v":[1.0,"x"]})"), "v"),
                  validation_error);
  CHECK_THROWS_AS(require_same_hbar(1.0, 0.5), validation_error);
  CHECK_NOTHROW(require_same_hbar(1.0, 1.0));
}

TEST_CASE("CSV emission") {
  WavefunctionGrid g;
  g.hbar = 1.0;
  g.xs = Vec::LinSpaced(3, -1.0, 1.0);
  g.values = CVec(3);
  g.values << Complex(1.0, 0.0), Complex(0.0, -2.0), Complex(0.5, 0.5);
  const std::string csv = wavefunction_csv(g);
  CHECK(csv.substr(0, 8) == "x,re,im\n");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);

  PhaseSpaceGrid w;
  w.hbar = 0.5;
  w.xs = Vec::LinSpaced(2, 0.0, 1.0);
  w.ps = Vec::LinSpaced(2, -1.0, 1.0);
  w.w = Mat::Zero(2, 2);
  const std::string psv = phase_space_csv(w);
  CHECK(psv.find("# hbar=0.5") == 0);
  CHECK(psv.find("x,p,w\n") != std::string::npos);
}

TEST_CASE("acceptance subset is deterministic in the seed") {
  namespace sc = qblob;
  const auto a = sc::run_acceptance(7, /*fast_only=*/true);
  const auto b = sc::run_acceptance(7, /*fast_only=*/true);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(bit_equal(a[i].measured, b[i].measured));
    CHECK(a[i].pass == b[i].pass);
  }
}

TEST_CASE("CLI end-to-end") {
  TempDir dir;
  const std::string state_path = dir.file("fiducial.json");
  write_text_file(state_path, state_to_json(fiducial(1)).dump());

  SUBCASE("blob-from-state emits the unit ball") {
    const std::string out = dir.file("blob.json");
    CHECK(run({"blob-from-state", state_path, "-o", out}) == 0);
    const QuantumBlob b = blob_from_json(load_json_file(out));
    CHECK(max_abs(b.G - Mat::Identity(2, 2)) < 1e-14);
    CHECK(b.center.cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("state-from-blob inverts it") {
    const std::string blob_path = dir.file("blob.json");
    const std::string back_path = dir.file("back.json");
    REQUIRE(run({"blob-from-state", state_path, "-o", blob_path}) == 0);
    CHECK(run({"state-from-blob", blob_path, "-o", back_path}) == 0);
    const GaussianState s = state_from_json(load_json_file(back_path));
    CHECK(max_abs(s.X - Mat::Identity(1, 1)) < 1e-12);
  }
  SUBCASE("capacity of a blob is pi hbar") {
    const std::string blob_path = dir.file("blob.json");
    const std::string cap_path = dir.file("cap.json");
    REQUIRE(run({"blob-from-state", state_path, "-o", blob_path}) == 0);
    CHECK(run({"capacity", blob_path, "-o", cap_path}) == 0);
    const Json j = load_json_file(cap_path);
    CHECK(j.at("capacity").get<double>() ==
          doctest::Approx(kPi).epsilon(1e-12));
  }
  SUBCASE("capacity of an ellipsoid file") {
    const std::string ell_path = dir.file("ellipsoid.json");
    Vec d(4);
    d << 1.0, 4.0, 1.0, 1.0;
    write_text_file(
        ell_path,
        ellipsoid_to_json(PhaseSpaceEllipsoid(2, 1.0, Vec::Zero(4),
                                              d.asDiagonal()))
            .dump());
    const std::string cap_path = dir.file("cap.json");
    CHECK(run({"capacity", ell_path, "-o", cap_path}) == 0);
    CHECK(load_json_file(cap_path).at("capacity").get<double>() ==
          doctest::Approx(kPi / 2.0).epsilon(1e-12));
  }
  SUBCASE("check accepts a covariance file") {
    const std::string cov_path = dir.file("cov.json");
    write_text_file(cov_path,
                    covariance_to_json(
                        CovarianceMatrix(1, 1.0, Mat::Identity(2, 2)))
                        .dump());
    const std::string rep_path = dir.file("cov_report.json");
    CHECK(run({"check", cov_path, "-o", rep_path}) == 0);
    const Json j = load_json_file(rep_path);
    CHECK(j.at("capacity").at("value").get<double>() ==
          doctest::Approx(2.0 * kPi).epsilon(1e-12));
    CHECK(j.at("sigma_psd").at("pass").get<bool>());
  }
  SUBCASE("check reports saturation for the fiducial state") {
    const std::string rep_path = dir.file("report.json");
    CHECK(run({"check", state_path, "-o", rep_path}) == 0);
    const Json j = load_json_file(rep_path);
    CHECK(j.at("rs").at(0).at("pass").get<bool>());
    CHECK(std::abs(j.at("rs").at(0).at("slack").get<double>()) <= 1e-15);
    CHECK(j.at("sigma_psd").at("pass").get<bool>());
    CHECK(std::abs(j.at("sigma_psd").at("min_eig").get<double>()) <= 1e-12);
    CHECK(j.at("capacity").at("pass").get<bool>());
    CHECK(j.at("capacity").at("value").get<double>() ==
          doctest::Approx(kPi).epsilon(1e-12));
  }
  SUBCASE("wigner grid emission peaks at 1/(pi hbar)") {
    const std::string csv_path = dir.file("w.csv");
    CHECK(run({"wigner", state_path, "--x", "-4:4:129", "--p", "-4:4:129",
               "-o", csv_path}) == 0);
    std::ifstream in(csv_path);
    std::string line;
    std::getline(in, line);  // header comment
    CHECK(line.find("# hbar=1") == 0);
    std::getline(in, line);  // column names
    double max_w = 0.0;
    int rows = 0;
    while (std::getline(in, line)) {
      const auto last = line.rfind(',');
      max_w = std::max(max_w, std::stod(line.substr(last + 1)));
      ++rows;
    }
    CHECK(rows == 129 * 129);
    CHECK(std::abs(max_w - 1.0 / kPi) <= 1e-9);
  }
  SUBCASE("evolve emits one JSON record per sample") {
    const std::string ham_path = dir.file("ham.json");
    write_text_file(
        ham_path,
        hamiltonian_to_json(QuadraticHamiltonian(1, 1.0, Mat::Identity(2, 2)))
            .dump());
    const std::string traj_path = dir.file("traj.jsonl");
    CHECK(run({"evolve", state_path, ham_path, "--t", "2.0", "--samples", "5",
               "-o", traj_path}) == 0);
    std::ifstream in(traj_path);
    std::string line;
    int count = 0;
    while (std::getline(in, line)) {
      const Json rec = Json::parse(line);
      CHECK(rec.contains("t"));
      CHECK(rec.contains("z"));
      CHECK(rec.contains("X"));
      CHECK(rec.contains("Y"));
      CHECK(rec.contains("gamma"));
      CHECK(rec.contains("G"));
      ++count;
    }
    CHECK(count == 5);
  }
  SUBCASE("hbar mismatch between files is a validation failure") {
    const std::string ham_path = dir.file("ham2.json");
    write_text_file(
        ham_path,
        hamiltonian_to_json(QuadraticHamiltonian(1, 0.5, Mat::Identity(2, 2)))
            .dump());
    CHECK(run({"evolve", state_path, ham_path, "--t", "1.0"}) == 1);
  }
  SUBCASE("fermi report") {
    const std::string rep_path = dir.file("fermi.json");
    CHECK(run({"fermi", state_path, "-o", rep_path}) == 0);
    const Json j = load_json_file(rep_path);
    CHECK(j.at("bounds_ok").get<bool>());
    CHECK(j.at("capacity").get<double>() == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(j.at("normal_form_lambdas").size() == 1);
  }
  SUBCASE("ellipse polyline stays on the boundary") {
    const std::string blob_path = dir.file("blob.json");
    REQUIRE(run({"blob-from-state", state_path, "-o", blob_path}) == 0);
    const std::string poly_path = dir.file("poly.csv");
    CHECK(run({"ellipse", blob_path, "--points", "32", "-o", poly_path}) == 0);
    std::ifstream in(poly_path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "x,p");
    int rows = 0;
    while (std::getline(in, line)) {
      const auto comma = line.find(',');
      const double x = std::stod(line.substr(0, comma));
      const double p = std::stod(line.substr(comma + 1));
      CHECK(std::abs(x * x + p * p - 1.0) <= 1e-10);
      ++rows;
    }
    CHECK(rows == 32);
  }
  SUBCASE("exit codes") {
    CHECK(run({"capacity", dir.file("missing.json")}) == 3);

    const std::string junk = dir.file("junk.json");
    write_text_file(junk, "{not json");
    CHECK(run({"capacity", junk}) == 1);

    const std::string bad_blob = dir.file("bad_blob.json");
    write_text_file(bad_blob,
                    R"({"n":1,"hbar":1.0,"center":[0.0,0.0],
                        "G":[[2.0,0.0],[0.0,2.0]]})");
    CHECK(run({"capacity", bad_blob}) == 2);  // fails symplectic certification

    const std::string no_keys = dir.file("no_keys.json");
    write_text_file(no_keys, R"({"n":1,"hbar":1.0})");
    CHECK(run({"capacity", no_keys}) == 1);

    CHECK(run({"wigner", state_path, "--x", "4:-4:129"}) == 1);
    CHECK(run({"wigner", state_path, "--x", "-4:4:2"}) == 1);
  }
  SUBCASE("QBLOB_TOL loosens certification thresholds") {
    // Slightly off-symplectic shape: rejected at the default tolerance,
    // accepted when the env override loosens it.
    Mat g(2, 2);
    g << 1.0 + 2e-7, 0.0, 0.0, 1.0;
    const std::string near_path = dir.file("near_blob.json");
    write_text_file(near_path, Json{{"n", 1},
                                    {"hbar", 1.0},
                                    {"center", Json::array({0.0, 0.0})},
                                    {"G", mat_to_json(g)}}
                                   .dump());
    const std::string cap_out = dir.file("near_cap.json");
    CHECK(run({"capacity", near_path, "-o", cap_out}) == 2);
    ::setenv("QBLOB_TOL", "1e-4", 1);
    CHECK(run({"capacity", near_path, "-o", cap_out}) == 0);
    ::unsetenv("QBLOB_TOL");
    CHECK(run({"capacity", near_path, "-o", cap_out}) == 2);
  }
}
