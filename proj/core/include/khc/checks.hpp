#pragma once
// The acceptance suite: each check returns a pass/fail verdict with a short
// detail string.  Shared between the ctest acceptance binary and `khc
// verify`.

#include <functional>
#include <string>
#include <vector>

namespace khc {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  long long millis = 0;
};

struct CheckOptions {
  std::string data_path;               // inversions table
  std::string montesinos_pd_path;      // optional companion diagram
  unsigned rng_seed = 20240817;
};

// Run the ten acceptance checks in order.  Individual failures do not stop
// the suite.
std::vector<CheckResult> run_acceptance(const CheckOptions& opt);

}  // namespace khc
