#include "qblob/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qblob/errors.hpp"

namespace qblob {

namespace {

const Json& require_field(const Json& j, const std::string& field) {
  if (!j.is_object() || !j.contains(field))
    throw validation_error("missing required field \"" + field + "\"");
  return j.at(field);
}

int int_field(const Json& j, const std::string& field) {
  const Json& v = require_field(j, field);
  if (!v.is_number_integer())
    throw validation_error("field \"" + field + "\" must be an integer");
  return v.get<int>();
}

double double_field(const Json& j, const std::string& field) {
  const Json& v = require_field(j, field);
  if (!v.is_number())
    throw validation_error("field \"" + field + "\" must be a number");
  return v.get<double>();
}

std::string fmt17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

Json mat_to_json(const Mat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_json(const Json& j, const std::string& field) {
  const Json& arr = require_field(j, field);
  if (!arr.is_array() || arr.empty())
    throw validation_error("field \"" + field + "\" must be a non-empty array of rows");
  const int rows = static_cast<int>(arr.size());
  if (!arr[0].is_array() || arr[0].empty())
    throw validation_error("field \"" + field + "\" rows must be non-empty arrays");
  const int cols = static_cast<int>(arr[0].size());
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!arr[i].is_array() || static_cast<int>(arr[i].size()) != cols)
      throw validation_error("field \"" + field + "\" rows have inconsistent lengths");
    for (int k = 0; k < cols; ++k) {
      if (!arr[i][k].is_number())
        throw validation_error("field \"" + field + "\" has a non-numeric entry");
      m(i, k) = arr[i][k].get<double>();
    }
  }
  return m;
}

Json vec_to_json(const Vec& v) {
  Json arr = Json::array();
  for (int i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

Vec vec_from_json(const Json& j, const std::string& field) {
  const Json& arr = require_field(j, field);
  if (!arr.is_array())
    throw validation_error("field \"" + field + "\" must be an array");
  Vec v(arr.size());
  for (int i = 0; i < static_cast<int>(arr.size()); ++i) {
    if (!arr[i].is_number())
      throw validation_error("field \"" + field + "\" has a non-numeric entry");
    v[i] = arr[i].get<double>();
  }
  return v;
}

Json symplectic_to_json(const SymplecticMatrix& s) {
  return Json{{"n", s.modes()}, {"entries", mat_to_json(s.entries())}};
}

SymplecticMatrix symplectic_from_json(const Json& j, double tol) {
  const int n = int_field(j, "n");
  const Mat entries = mat_from_json(j, "entries");
  if (entries.rows() != 2 * n || entries.cols() != 2 * n)
    throw validation_error("\"entries\" must be a 2n x 2n matrix");
  return SymplecticMatrix(entries, tol);
}

Json state_to_json(const GaussianState& s) {
  return Json{{"n", s.n},           {"hbar", s.hbar},
              {"X", mat_to_json(s.X)}, {"Y", mat_to_json(s.Y)},
              {"z0", vec_to_json(s.z0)}, {"gamma", s.gamma}};
}

GaussianState state_from_json(const Json& j) {
  const int n = int_field(j, "n");
  const double hbar = double_field(j, "hbar");
  const double gamma = j.contains("gamma") ? double_field(j, "gamma") : 0.0;
  return GaussianState(n, hbar, mat_from_json(j, "X"), mat_from_json(j, "Y"),
                       vec_from_json(j, "z0"), gamma);
}

Json blob_to_json(const QuantumBlob& b) {
  return Json{{"n", b.n},
              {"hbar", b.hbar},
              {"center", vec_to_json(b.center)},
              {"G", mat_to_json(b.G)}};
}

QuantumBlob blob_from_json(const Json& j, double tol) {
  return QuantumBlob(int_field(j, "n"), double_field(j, "hbar"),
                     vec_from_json(j, "center"), mat_from_json(j, "G"), tol);
}

Json ellipsoid_to_json(const PhaseSpaceEllipsoid& e) {
  return Json{{"n", e.n},
              {"hbar", e.hbar},
              {"center", vec_to_json(e.center)},
              {"shape", mat_to_json(e.shape)}};
}

PhaseSpaceEllipsoid ellipsoid_from_json(const Json& j) {
  return PhaseSpaceEllipsoid(int_field(j, "n"), double_field(j, "hbar"),
                             vec_from_json(j, "center"),
                             mat_from_json(j, "shape"));
}

Json hamiltonian_to_json(const QuadraticHamiltonian& h) {
  return Json{{"n", h.n}, {"hbar", h.hbar}, {"R", mat_to_json(h.R)}};
}

QuadraticHamiltonian hamiltonian_from_json(const Json& j) {
  return QuadraticHamiltonian(int_field(j, "n"), double_field(j, "hbar"),
                              mat_from_json(j, "R"));
}

Json covariance_to_json(const CovarianceMatrix& c) {
  return Json{{"n", c.n}, {"hbar", c.hbar}, {"Sigma", mat_to_json(c.sigma)}};
}

CovarianceMatrix covariance_from_json(const Json& j) {
  return CovarianceMatrix(int_field(j, "n"), double_field(j, "hbar"),
                          mat_from_json(j, "Sigma"));
}

void require_same_hbar(double a, double b) {
  if (std::abs(a - b) > 1e-15 * std::max(std::abs(a), std::abs(b))) {
    std::ostringstream os;
    os << "inputs carry different hbar values (" << a << " vs " << b << ")";
    throw validation_error(os.str());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw io_error("read failure: " + path);
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw validation_error("invalid JSON in " + path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open file for writing: " + path);
  out << content;
  out.flush();
  if (!out) throw io_error("write failure: " + path);
}

std::string wavefunction_csv(const WavefunctionGrid& g) {
  std::ostringstream os;
  os << "x,re,im\n";
  for (int i = 0; i < g.xs.size(); ++i)
    os << fmt17(g.xs[i]) << ',' << fmt17(g.values[i].real()) << ','
       << fmt17(g.values[i].imag()) << '\n';
  return os.str();
}

std::string phase_space_csv(const PhaseSpaceGrid& g) {
  std::ostringstream os;
  os << "# hbar=" << fmt17(g.hbar) << " x=" << fmt17(g.xs[0]) << ':'
     << fmt17(g.xs[g.xs.size() - 1]) << ':' << g.xs.size()
     << " p=" << fmt17(g.ps[0]) << ':' << fmt17(g.ps[g.ps.size() - 1]) << ':'
     << g.ps.size() << '\n';
  os << "x,p,w\n";
  for (int i = 0; i < g.xs.size(); ++i)
    for (int k = 0; k < g.ps.size(); ++k)
      os << fmt17(g.xs[i]) << ',' << fmt17(g.ps[k]) << ',' << fmt17(g.w(i, k))
         << '\n';
  return os.str();
}

std::string polyline_csv(
    const std::vector<std::pair<double, double>>& points) {
  std::ostringstream os;
  os << "x,p\n";
  for (const auto& [x, p] : points) os << fmt17(x) << ',' << fmt17(p) << '\n';
  return os.str();
}

}  // namespace qblob
