#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace specopt {

enum class CheckLevel { kFast, kFull };

struct SuiteResult {
  std::string name;
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::string first_failure;  // empty when passed
  double seconds = 0.0;

  bool passed() const { return failures == 0 && samples > 0; }
};

/// Sample count per suite: 10^2 for kFast, 10^4 for kFull.
std::size_t samples_for(CheckLevel level);

SuiteResult check_scalar_identities(std::size_t samples, std::uint64_t seed);
SuiteResult check_ordering_lemma(std::size_t samples, std::uint64_t seed);
SuiteResult check_subgradient_inequality(std::size_t samples, std::uint64_t seed);
SuiteResult check_quasi_fermat(std::size_t samples, std::uint64_t seed);
SuiteResult check_quasi_mvt(std::size_t samples, std::uint64_t seed);
SuiteResult check_estimator_consistency(std::size_t samples, std::uint64_t seed);
SuiteResult check_basic_inequality(std::size_t samples, std::uint64_t seed);

/// Runs every suite above.
std::vector<SuiteResult> run_check_suites(CheckLevel level, std::uint64_t seed = 20240601);

}  // namespace specopt
