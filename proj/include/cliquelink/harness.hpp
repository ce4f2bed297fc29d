#pragma once

// Seeded fuzzing of the solver against the verifier.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cliquelink/linkage.hpp"

namespace cliquelink {

/// "a:b" or "a", inclusive, a <= b, both >= 0.
std::pair<int, int> parse_range(const std::string& text);

struct FuzzOptions {
  std::pair<int, int> d1{2, 6};
  std::pair<int, int> d2{2, 6};
  std::uint64_t count = 1000;
  std::uint64_t seed = 1;
  std::optional<int> k;  // default: the theorem bound of each instance
  unsigned workers = 1;
};

struct FuzzFailure {
  std::uint64_t index = 0;
  std::string instance;  // serialized
  std::string what;
};

struct FuzzReport {
  std::uint64_t instances = 0;
  std::uint64_t solver_successes = 0;
  std::uint64_t verifier_passes = 0;
  int max_recursion_depth = 0;
  std::vector<FuzzFailure> failures;  // in instance order
  double seconds = 0;

  bool clean() const { return verifier_passes == instances; }
};

/// Instance i is drawn from its own stream derive_seed(seed, i): dims uniform
/// in range, then a uniform 2k-set with a uniform pairing. With a fixed k,
/// instances whose bound is below k use their bound.
LinkageProblem fuzz_instance(const FuzzOptions& options, std::uint64_t index);

FuzzReport run_fuzz(const FuzzOptions& options);

/// Deterministic text (no timing).
std::string format_fuzz(const FuzzReport& r);

}  // namespace cliquelink
