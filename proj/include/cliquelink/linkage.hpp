#pragma once

#include <cstddef>
#include <vector>

#include "cliquelink/grid.hpp"

namespace cliquelink {

/// An unordered terminal pair {s, t}; s is only the conventional first end.
struct TerminalPair {
  Vertex s;
  Vertex t;

  friend bool operator==(const TerminalPair&, const TerminalPair&) = default;
};

/// A grid (or subgrid) plus k pairs on 2k distinct active terminals.
struct LinkageProblem {
  Subgrid grid;
  std::vector<TerminalPair> pairs;

  std::size_t k() const { return pairs.size(); }
  /// All terminals in pair order: s_0, t_0, s_1, t_1, ...
  std::vector<Vertex> terminals() const;
};

/// Path i joins pair i; paths are pairwise vertex-disjoint.
struct Linkage {
  std::vector<Path> paths;

  friend bool operator==(const Linkage&, const Linkage&) = default;
};

/// floor((d1 + d2) / 2): the linkedness of K^{d1+1} x K^{d2+1}.
constexpr int theorem_bound(int d1, int d2) { return (d1 + d2) / 2; }

/// Largest k the solver accepts on a subgrid with r rows and c columns:
/// floor((r+c-2)/2), or floor(n/2) when the subgrid is a clique of n vertices.
int linkedness_bound(const Subgrid& s);

/// Throws ContractError unless all terminals are active and distinct.
void check_terminals(const LinkageProblem& p);

LinkageProblem transpose(const LinkageProblem& p);
Linkage transpose(const Linkage& l);

}  // namespace cliquelink
