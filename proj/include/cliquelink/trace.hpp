#pragma once

// Structured log of the case decisions taken while constructing a linkage.
// Records appear in pre-order: a reduction record is followed by the records
// of the problem it reduced to. Every record stores enough to rebuild its
// level's output (stubs, finished paths, induced problem), which is what
// `replay` relies on.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cliquelink/grid.hpp"
#include "cliquelink/linkage.hpp"

namespace cliquelink {

enum class CaseKind {
  base_row,        // one active row: a clique, pairs joined by edges
  base_two_rows,   // two active rows: lift every terminal into the second row
  case1,           // a pair inside one column
  case2,           // a pair spread over two columns
  transpose,       // rows and columns swapped; following records are transposed
};

const char* to_string(CaseKind kind);

/// Path from a terminal to the vertex that replaces it one level down.
struct Stub {
  Vertex terminal;
  Path path;

  friend bool operator==(const Stub&, const Stub&) = default;
};

struct CaseRecord {
  CaseKind kind = CaseKind::base_row;
  int depth = 0;
  std::vector<int> rows;  // active labels at this level
  std::vector<int> cols;
  int pair_index = -1;
  std::string reason;  // why a transpose happened: "base", "case1" or "case3"

  // Proof relabelling, as ambient labels listed in proof order.
  std::vector<int> row_order;
  std::vector<int> col_order;

  std::optional<int> alpha;
  std::vector<Vertex> moved;  // U in case 1; terminals leaving the two columns in case 2
  std::vector<Vertex> kept;   // W in case 1
  Path l1;
  int n1 = -1;
  int n2 = -1;
  std::vector<std::pair<int, int>> matching;  // claim-1 rows r_f -> r_e
  int scenario = 0;                           // alpha = 1 only: 1 or 2

  std::vector<Stub> stubs;
  std::vector<std::pair<int, Path>> finished;  // pair index -> complete path
  std::vector<TerminalPair> subpairs;          // induced problem
  std::vector<int> subpair_origin;             // pair index per subpair, -1 for padding
  std::vector<int> sub_rows;
  std::vector<int> sub_cols;
};

struct SolverTrace {
  std::vector<CaseRecord> records;

  int max_depth() const;
};

/// One '#'-prefixed line per record, deterministic.
std::string format_trace(const SolverTrace& trace);

/// Rebuilds the linkage from the trace alone.
Linkage replay(const LinkageProblem& problem, const SolverTrace& trace);

}  // namespace cliquelink
