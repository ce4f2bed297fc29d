#pragma once

// Ground truth that does not depend on the constructive solver: a linkage
// verifier and an exact backtracking search for small grids.

#include <cstdint>
#include <optional>
#include <string>

#include "cliquelink/grid.hpp"
#include "cliquelink/linkage.hpp"

namespace cliquelink {

struct VerifyReport {
  bool ok = true;
  std::string condition;  // "count", "active", "endpoints", "adjacency", "simple", "disjointness"
  int path = -1;          // 0-based index of the offending path
  std::optional<Vertex> where;
  std::string message;    // e.g. "disjointness, vertex (1,1)"
};

VerifyReport verify(const LinkageProblem& p, const Linkage& l);

enum class Outcome { feasible, infeasible, indeterminate };

const char* to_string(Outcome o);

struct Verdict {
  Outcome outcome = Outcome::indeterminate;
  std::optional<Linkage> witness;
  std::uint64_t nodes_explored = 0;

  bool feasible() const { return outcome == Outcome::feasible; }
};

/// Exact search for a linkage: paths are grown one vertex at a time, hardest
/// pair first, restricted to induced paths, with a reachability cut for every
/// unfinished pair. Running out of `node_budget` gives Outcome::indeterminate.
Verdict exhaustive_solve(const LinkageProblem& p, std::optional<std::uint64_t> node_budget = {});

enum class SearchMode { exhaustive, sampled };

struct SearchOptions {
  SearchMode mode = SearchMode::exhaustive;
  std::optional<std::uint64_t> node_budget;  // per instance
  std::uint64_t samples = 1000;              // sampled mode only
  std::uint64_t seed = 1;                    // sampled mode only
  unsigned workers = 1;
};

struct LinkednessResult {
  bool linked = true;     // no infeasible pairing met
  bool complete = true;   // every instance decided and, in exhaustive mode, every instance visited
  std::optional<LinkageProblem> counterexample;
  std::uint64_t instances = 0;
};

/// Exhaustive mode visits every terminal set containing (0,0) (the product of
/// cliques is vertex-transitive) and every pairing of it. Exhaustive mode is
/// refused unless (d1+1)(d2+1) <= 16 or 2k <= 6.
LinkednessResult is_k_linked(int d1, int d2, int k, const SearchOptions& options);

enum class SharpnessStatus { found, none_exists, none_found };

const char* to_string(SharpnessStatus s);

struct SharpnessResult {
  SharpnessStatus status = SharpnessStatus::none_found;
  std::optional<LinkageProblem> problem;
  std::uint64_t certificate_nodes = 0;  // search nodes of the infeasibility proof
  std::uint64_t instances = 0;
};

/// First pairing of 2k terminals with no linkage, in the enumeration order of
/// is_k_linked. `none_exists` only after a completed exhaustive sweep.
SharpnessResult find_infeasible_pairing(int d1, int d2, int k, const SearchOptions& options);

}  // namespace cliquelink
