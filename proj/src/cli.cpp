#include "qblob/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qblob/blob.hpp"
#include "qblob/dynamics.hpp"
#include "qblob/errors.hpp"
#include "qblob/fermi.hpp"
#include "qblob/gaussian.hpp"
#include "qblob/io.hpp"
#include "qblob/selfcheck.hpp"
#include "qblob/uncertainty.hpp"
#include "qblob/wigner.hpp"

namespace qblob {

namespace {

struct Range {
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;
};

Range parse_range(const std::string& text) {
  Range r;
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw validation_error("range must be lo:hi:count, got \"" + text + "\"");
  try {
    r.lo = std::stod(text.substr(0, c1));
    r.hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    r.count = std::stoi(text.substr(c2 + 1));
  } catch (const std::exception&) {
    throw validation_error("range must be lo:hi:count, got \"" + text + "\"");
  }
  if (!(r.hi > r.lo) || r.count < 3)
    throw validation_error(
        "range must be well-ordered with resolution >= 3: \"" + text + "\"");
  return r;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_text_file(out_path, content);
}

double certification_tol() {
  if (const char* env = std::getenv("QBLOB_TOL")) {
    try {
      const double tol = std::stod(env);
      if (tol > 0.0) return tol;
    } catch (const std::exception&) {
    }
    throw validation_error("QBLOB_TOL must be a positive number");
  }
  return 1e-9;
}

GaussianState load_state(const std::string& path) {
  return state_from_json(load_json_file(path));
}

// Blob certificates (SPD, symplectic within QBLOB_TOL) count as numerical
// failures at the CLI boundary, not input-validation ones.
QuantumBlob load_blob(const Json& j, double tol) {
  try {
    return blob_from_json(j, tol);
  } catch (const domain_error& e) {
    throw numerical_error(e.what());
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Gaussian states, quantum blobs and symplectic capacities"};
  app.require_subcommand(1);

  std::string in_path, in_path2, out_path;
  double t_final = 1.0;
  int samples = 11;
  int mode = 1;
  int npoints = 256;
  std::string x_range = "-6:6:129", p_range = "-6:6:129";
  std::uint64_t seed = 20260809;

  auto* blob_cmd =
      app.add_subcommand("blob-from-state", "Phase-space blob of a state");
  blob_cmd->add_option("state", in_path, "state JSON file")->required();
  blob_cmd->add_option("-o,--output", out_path, "output path");

  auto* state_cmd =
      app.add_subcommand("state-from-blob", "State parameters of a blob");
  state_cmd->add_option("blob", in_path, "blob JSON file")->required();
  state_cmd->add_option("-o,--output", out_path, "output path");

  auto* cap_cmd = app.add_subcommand(
      "capacity", "Symplectic capacity of a blob or ellipsoid");
  cap_cmd->add_option("input", in_path, "blob or ellipsoid JSON file")
      ->required();
  cap_cmd->add_option("-o,--output", out_path, "output path");

  auto* check_cmd = app.add_subcommand(
      "check", "Uncertainty report for a state or covariance matrix");
  check_cmd->add_option("input", in_path, "state or covariance JSON file")
      ->required();
  check_cmd->add_option("-o,--output", out_path, "output path");

  auto* evolve_cmd = app.add_subcommand(
      "evolve", "Evolve a state under a quadratic Hamiltonian");
  evolve_cmd->add_option("state", in_path, "state JSON file")->required();
  evolve_cmd->add_option("hamiltonian", in_path2, "Hamiltonian JSON file")
      ->required();
  evolve_cmd->add_option("-t,--t", t_final, "final time")->required();
  evolve_cmd->add_option("-s,--samples", samples, "number of samples");
  evolve_cmd->add_option("-o,--output", out_path, "output path");

  auto* fermi_cmd =
      app.add_subcommand("fermi", "Fermi ellipsoid data of a state");
  fermi_cmd->add_option("state", in_path, "state JSON file")->required();
  fermi_cmd->add_option("-o,--output", out_path, "output path");

  auto* wigner_cmd =
      app.add_subcommand("wigner", "Wigner function on a phase-space grid");
  wigner_cmd->add_option("state", in_path, "state JSON file")->required();
  wigner_cmd->add_option("-x,--x", x_range, "x range lo:hi:count");
  wigner_cmd->add_option("-p,--p", p_range, "p range lo:hi:count");
  wigner_cmd->add_option("-o,--output", out_path, "output path");

  auto* ellipse_cmd = app.add_subcommand(
      "ellipse", "Boundary polyline of a blob section for plotting");
  ellipse_cmd->add_option("blob", in_path, "blob JSON file")->required();
  ellipse_cmd->add_option("-m,--mode", mode, "mode index (1-based)");
  ellipse_cmd->add_option("-n,--points", npoints, "polyline points");
  ellipse_cmd->add_option("-o,--output", out_path, "output path");

  auto* selftest_cmd =
      app.add_subcommand("selftest", "Run the fast acceptance subset");
  selftest_cmd->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const double tol = certification_tol();

    if (blob_cmd->parsed()) {
      const QuantumBlob blob = blob_from_state(load_state(in_path));
      emit(out_path, blob_to_json(blob).dump(2) + "\n");
    } else if (state_cmd->parsed()) {
      const QuantumBlob blob = load_blob(load_json_file(in_path), tol);
      emit(out_path, state_to_json(state_from_blob(blob)).dump(2) + "\n");
    } else if (cap_cmd->parsed()) {
      const Json j = load_json_file(in_path);
      double value = 0.0, hbar = 0.0;
      if (j.contains("G")) {
        const QuantumBlob blob = load_blob(j, tol);
        value = capacity_blob(blob).value;
        hbar = blob.hbar;
      } else if (j.contains("shape")) {
        const PhaseSpaceEllipsoid e = ellipsoid_from_json(j);
        value = capacity_ellipsoid(e).value;
        hbar = e.hbar;
      } else {
        throw validation_error(
            "capacity input must contain a blob (\"G\") or an ellipsoid (\"shape\")");
      }
      emit(out_path,
           Json{{"capacity", value}, {"hbar", hbar}}.dump(2) + "\n");
    } else if (check_cmd->parsed()) {
      const Json j = load_json_file(in_path);
      std::optional<CovarianceMatrix> cov;
      if (j.contains("X"))
        cov = covariance_from_state(state_from_json(j));
      else if (j.contains("Sigma"))
        cov = covariance_from_json(j);
      else
        throw validation_error(
            "check input must contain a state (\"X\") or a covariance (\"Sigma\")");

      Json rs = Json::array();
      for (const RsModeReport& m : rs_check(*cov))
        rs.push_back(Json{{"mode", m.mode},
                          {"lhs", m.lhs},
                          {"rhs", m.rhs},
                          {"slack", m.slack},
                          {"pass", m.pass}});
      const PsdReport psd = sigma_psd_check(*cov);
      const CapacityConditionReport capc = capacity_condition(*cov);
      const Json report{
          {"rs", rs},
          {"sigma_psd",
           Json{{"pass", psd.pass}, {"min_eig", psd.min_eigenvalue}}},
          {"capacity", Json{{"value", capc.capacity}, {"pass", capc.pass}}}};
      emit(out_path, report.dump(2) + "\n");
    } else if (evolve_cmd->parsed()) {
      if (samples < 1)
        throw validation_error("evolve: --samples must be >= 1");
      if (!std::isfinite(t_final))
        throw validation_error("evolve: --t must be finite");
      const GaussianState state = load_state(in_path);
      const QuadraticHamiltonian ham =
          hamiltonian_from_json(load_json_file(in_path2));
      require_same_hbar(state.hbar, ham.hbar);
      std::ostringstream os;
      for (int k = 0; k < samples; ++k) {
        const double t =
            (samples == 1) ? t_final : t_final * k / (samples - 1);
        const FlowResult res = evolve_state(state, ham, t);
        const Json line{{"t", t},
                        {"z", vec_to_json(res.z_t)},
                        {"X", mat_to_json(res.X_t)},
                        {"Y", mat_to_json(res.Y_t)},
                        {"gamma", res.gamma_t},
                        {"G", mat_to_json(g_matrix(res.X_t, res.Y_t))}};
        os << line.dump() << "\n";
      }
      emit(out_path, os.str());
    } else if (fermi_cmd->parsed()) {
      const GaussianState state = load_state(in_path);
      const FermiEllipsoid fe = fermi_ellipsoid(state);
      const FermiNormalForm form = fermi_normal_form(state);
      const double cap = fermi_capacity(state).value;  // throws on bound breach
      const Json report{{"M_F", mat_to_json(fe.M_F)},
                        {"capacity", cap},
                        {"normal_form_lambdas", form.lambdas},
                        {"trace_x", form.trace_x},
                        {"bounds_ok", true}};
      emit(out_path, report.dump(2) + "\n");
    } else if (wigner_cmd->parsed()) {
      const GaussianState state = load_state(in_path);
      const Range xr = parse_range(x_range);
      const Range pr = parse_range(p_range);
      if (state.n != 1)
        throw validation_error("wigner grid emission requires n = 1");
      const WignerGaussian w = wigner_gaussian(state);
      PhaseSpaceGrid grid;
      grid.hbar = state.hbar;
      grid.xs = Vec::LinSpaced(xr.count, xr.lo, xr.hi);
      grid.ps = Vec::LinSpaced(pr.count, pr.lo, pr.hi);
      grid.w = Mat(xr.count, pr.count);
      Vec z(2);
      for (int i = 0; i < xr.count; ++i)
        for (int k = 0; k < pr.count; ++k) {
          z << grid.xs[i], grid.ps[k];
          grid.w(i, k) = w.value(z);
        }
      emit(out_path, phase_space_csv(grid));
    } else if (ellipse_cmd->parsed()) {
      const QuantumBlob blob = load_blob(load_json_file(in_path), tol);
      emit(out_path, polyline_csv(section_boundary(blob, mode, npoints)));
    } else if (selftest_cmd->parsed()) {
      std::ostringstream os;
      os << "selftest seed=" << seed;
      if (const char* env = std::getenv("QBLOB_TOL"))
        os << " QBLOB_TOL=" << env << " (default 1e-9 overridden)";
      os << "\n";
      bool all = true;
      for (const CheckResult& r : run_acceptance(seed, /*fast_only=*/true)) {
        os << format_result(r) << "\n";
        all &= r.pass;
      }
      std::cout << os.str();
      if (!all) return 2;
    }
    return 0;
  } catch (const validation_error& e) {
    std::cerr << "error (validation): " << e.what() << "\n";
    return 1;
  } catch (const domain_error& e) {
    std::cerr << "error (domain): " << e.what() << "\n";
    return 1;
  } catch (const dimension_error& e) {
    std::cerr << "error (dimension): " << e.what() << "\n";
    return 1;
  } catch (const numerical_error& e) {
    std::cerr << "error (numerical): " << e.what() << "\n";
    return 2;
  } catch (const io_error& e) {
    std::cerr << "error (io): " << e.what() << "\n";
    return 3;
  }
}

}  // namespace qblob
