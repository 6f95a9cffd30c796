#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qblob {

/// Outcome of one acceptance check.
struct CheckResult {
  std::string id;
  std::string label;
  double measured = 0.0;   // worst observed error
  double threshold = 0.0;
  bool pass = false;
  double seconds = 0.0;
  std::string note;
};

/// Runs the acceptance checks C1..C13. With fast_only, the two
/// quadrature-heavy checks (C1, C4) are skipped so the subset finishes in a
/// few seconds. Deterministic in the seed.
std::vector<CheckResult> run_acceptance(std::uint64_t seed,
                                        bool fast_only = false);

/// One formatted line per result, e.g.
/// [PASS] C2 blob-capacity: max_err=3.1e-12 (tol 1e-09) [0.52s] n=100
std::string format_result(const CheckResult& r);

}  // namespace qblob
