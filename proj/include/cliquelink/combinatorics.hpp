#pragma once

// Enumeration and sampling of terminal sets and pairings.

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "cliquelink/linkage.hpp"

namespace cliquelink {

/// Calls `visit` with every m-subset of {0..n-1} in lexicographic order until
/// it returns false. Returns false iff stopped early.
bool for_each_combination(int n, int m, const std::function<bool(std::span<const int>)>& visit);

/// Calls `visit` with every perfect matching of {0..m-1} (m even) until it
/// returns false. The first element is paired with each later one in turn.
bool for_each_pairing(int m, const std::function<bool(std::span<const std::pair<int, int>>)>& visit);

/// (m-1)!! for even m.
std::uint64_t pairing_count(int m);

/// SplitMix64: small, seedable, identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  int between(int lo, int hi);

 private:
  std::uint64_t state_;
};

/// Independent stream for instance `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform 2k-subset of the full grid with a uniform pairing.
LinkageProblem random_problem(int d1, int d2, int k, Rng& rng);

/// Problem on the full grid from vertex indices (row-major) and a pairing of them.
LinkageProblem problem_from(int d1, int d2, std::span<const int> vertex_ids,
                            std::span<const std::pair<int, int>> pairing);

}  // namespace cliquelink
