#pragma once

#include <string>

#include <json.hpp>

#include "qblob/blob.hpp"
#include "qblob/dynamics.hpp"
#include "qblob/gaussian.hpp"
#include "qblob/symplectic.hpp"
#include "qblob/types.hpp"
#include "qblob/uncertainty.hpp"
#include "qblob/wigner.hpp"

namespace qblob {

using Json = nlohmann::json;

// Matrices serialize as row-major nested arrays of doubles.
Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j, const std::string& field);
Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j, const std::string& field);

// {"n": <modes>, "entries": [[...]]}
Json symplectic_to_json(const SymplecticMatrix& s);
SymplecticMatrix symplectic_from_json(const Json& j,
                                      double tol = kSymplecticTol);

// {"n", "hbar", "X", "Y", "z0", "gamma"}
Json state_to_json(const GaussianState& s);
GaussianState state_from_json(const Json& j);

// {"n", "hbar", "center", "G"}
Json blob_to_json(const QuantumBlob& b);
QuantumBlob blob_from_json(const Json& j, double tol = 1e-9);

// {"n", "hbar", "center", "shape"}
Json ellipsoid_to_json(const PhaseSpaceEllipsoid& e);
PhaseSpaceEllipsoid ellipsoid_from_json(const Json& j);

// {"n", "hbar", "R"}
Json hamiltonian_to_json(const QuadraticHamiltonian& h);
QuadraticHamiltonian hamiltonian_from_json(const Json& j);

// {"n", "hbar", "Sigma"}
Json covariance_to_json(const CovarianceMatrix& c);
CovarianceMatrix covariance_from_json(const Json& j);

/// Throws validation_error when two inputs carry different hbar values.
void require_same_hbar(double a, double b);

/// Reads and parses a JSON file. Filesystem failures raise io_error, parse
/// failures raise validation_error.
Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// CSV emission. Grids use columns x,re,im and x,p,w respectively; the
// phase-space header row records ranges and hbar.
std::string wavefunction_csv(const WavefunctionGrid& g);
std::string phase_space_csv(const PhaseSpaceGrid& g);
std::string polyline_csv(const std::vector<std::pair<double, double>>& points);

}  // namespace qblob
