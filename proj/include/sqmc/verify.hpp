#ifndef SQMC_VERIFY_HPP
#define SQMC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace sqmc {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 20240717;
  long overlap_trials = 200000;
  long rounding_trials = 4000;
};

// Runs every module's invariant suite and returns one result per check.
// Deterministic for a fixed option set.
std::vector<CheckResult> run_verification(const VerifyOptions& opts = {});

inline bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace sqmc

#endif  // SQMC_VERIFY_HPP
