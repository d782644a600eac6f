// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <cstdio>

#include "khc/checks.hpp"

int main() {
  khc::CheckOptions opt;
  opt.data_path = KHC_DATA_DIR "/inversions.txt";
  opt.montesinos_pd_path = KHC_DATA_DIR "/tau_plus1.pd";
  const std::vector<khc::CheckResult> results = khc::run_acceptance(opt);
  bool all = true;
  for (size_t i = 0; i < results.size(); ++i) {
    const khc::CheckResult& r = results[i];
    std::printf("criterion %zu (%s): %s%s%s [%lld ms]\n", i + 1, r.name.c_str(),
                r.pass ? "PASS" : "FAIL", r.detail.empty() ? "" : " - ",
                r.detail.c_str(), r.millis);
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
