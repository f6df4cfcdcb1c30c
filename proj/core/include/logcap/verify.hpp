#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace logcap {

struct SuiteResult {
  std::string name;
  int passed = 0;
  int total = 0;
  double max_violation = 0.0;  // largest amount by which a check missed its slack, 0 if none

  bool ok() const noexcept { return passed == total; }
};

struct VerifyReport {
  std::uint64_t seed = 0;
  int count = 0;
  std::vector<SuiteResult> suites;

  bool ok() const noexcept;
  /// Deterministic text rendering, one line per suite.
  std::string text() const;
};

inline constexpr std::uint64_t kDefaultVerifySeed = 20100101;

/// Runs the cross-method, sandwich, equality-case and dominance suites on
/// `count` seeded random cases each.
VerifyReport run_verify(std::uint64_t seed = kDefaultVerifySeed, int count = 200);

}  // namespace logcap
