#pragma once

// Constructive linkage in K^{d1+1} x K^{d2+1} for up to floor((d1+d2)/2)
// pairs. The construction is an induction on (d1, d2):
//
//   * one or two active rows: solved directly (two rows are first lifted into
//     the second row with a Menger system);
//   * a pair inside one column: join it by its edge, push the column's other
//     terminals out with a Menger system, recurse without that column;
//   * otherwise take a pair s1, t1 in columns c1 != c2. If those columns hold
//     more than d1+2 terminals, transpose. Join s1, t1 by a short path L1
//     inside the two columns, evacuate the remaining terminals of the two
//     columns into the rest of the grid and recurse without both columns.
//
// The evacuation step is split on alpha = d1 + 2 - (terminals in c1, c2).
// Any step whose counting guarantee fails throws AlgorithmInvariantError
// carrying the trace so far; that is a bug, never an infeasible input.

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cliquelink/grid.hpp"
#include "cliquelink/linkage.hpp"
#include "cliquelink/menger.hpp"
#include "cliquelink/trace.hpp"

namespace cliquelink {

class AlgorithmInvariantError : public std::logic_error {
 public:
  AlgorithmInvariantError(const std::string& what, SolverTrace trace);
  const SolverTrace& trace() const { return *trace_; }

 private:
  std::shared_ptr<const SolverTrace> trace_;
};

struct SolveResult {
  Linkage linkage;
  SolverTrace trace;
};

/// Linkage for any problem with k <= floor((d1'+d2')/2) pairs, where d1'+1 and
/// d2'+1 are the active row and column counts. Path i runs from s_i to t_i.
SolveResult solve(const LinkageProblem& p);

/// One active row (a clique): every pair is joined by its edge. Requires 2k <= |cols|.
Linkage solve_base_rows(const LinkageProblem& p);

/// Two active rows: route all terminals into the second row, then join there.
SolveResult solve_base_two_rows(const LinkageProblem& p);

/// Pair `pair_index` lies in one column (or one row, which transposes first).
/// Needs at least three active rows and columns.
SolveResult case1_pair_in_line(const LinkageProblem& p, std::size_t pair_index);

struct L1Choice {
  Path path;
  int row = -1;  // the row supplying L1's horizontal edge
};

/// Terminal-free s1-t1 path inside the columns of s1 and t1: through
/// (row s1, col t1), then (row t1, col s1), then any other row in order.
L1Choice find_l1(const LinkageProblem& p, std::size_t pair_index);

/// Pair `pair_index` has its ends in different rows and columns.
/// Transposes once when the pair's two columns hold more than d1'+2 terminals.
SolveResult case2_solve(const LinkageProblem& p, std::size_t pair_index);

/// Injection from rows of a two-column subgrid holding two ordinary terminals
/// to rows holding no ordinary terminal. `special` terminals (s1, t1) are not
/// ordinary. Lowest labels are matched first.
std::vector<std::pair<int, int>> claim1_matching(const Subgrid& b,
                                                 std::span<const Vertex> occupied,
                                                 std::span<const Vertex> special);

struct Claim2Routing {
  PathSystem system;  // one path per ordinary terminal of B, in lex order of the terminal
  std::vector<std::pair<int, int>> matching;
};

/// Routes every ordinary terminal of the two-column subgrid `b` to a free
/// entry of `a` (same rows, disjoint columns). Paths are disjoint, have no
/// occupied inner vertex, and end in pairwise distinct rows of `a`.
Claim2Routing claim2_route(const Subgrid& b, const Subgrid& a, std::span<const Vertex> occupied,
                           std::span<const Vertex> special);

/// x(y-1) > x+y-3, the counting inequality behind several evacuation steps.
constexpr bool counting_inequality(long x, long y) { return x * (y - 1) > x + y - 3; }

/// Dimensions of the product of simplices whose graph is the dual graph of the
/// cyclic d-polytope on d+2 vertices: (floor(d/2), ceil(d/2)).
std::pair<int, int> cyclic_dual_params(int d);

}  // namespace cliquelink
