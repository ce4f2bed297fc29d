#include "cliquelink/linkage.hpp"

#include <algorithm>

#include "cliquelink/errors.hpp"

namespace cliquelink {

std::vector<Vertex> LinkageProblem::terminals() const {
  std::vector<Vertex> out;
  out.reserve(2 * pairs.size());
  for (const TerminalPair& p : pairs) {
    out.push_back(p.s);
    out.push_back(p.t);
  }
  return out;
}

int linkedness_bound(const Subgrid& s) {
  // A single row or column is a clique.
  if (s.row_count() == 1 || s.col_count() == 1) return static_cast<int>(s.vertex_count() / 2);
  return theorem_bound(static_cast<int>(s.row_count()) - 1, static_cast<int>(s.col_count()) - 1);
}

void check_terminals(const LinkageProblem& p) {
  std::vector<Vertex> ts = p.terminals();
  for (Vertex v : ts)
    if (!p.grid.contains(v)) throw InvalidVertexError("terminal " + to_string(v) + " is not active");
  std::sort(ts.begin(), ts.end());
  auto dup = std::adjacent_find(ts.begin(), ts.end());
  if (dup != ts.end()) throw ContractError("terminals not distinct: " + to_string(*dup));
}

LinkageProblem transpose(const LinkageProblem& p) {
  LinkageProblem out{transpose(p.grid), {}};
  out.pairs.reserve(p.pairs.size());
  for (const TerminalPair& q : p.pairs) out.pairs.push_back({transposed(q.s), transposed(q.t)});
  return out;
}

Linkage transpose(const Linkage& l) {
  Linkage out;
  out.paths.reserve(l.paths.size());
  for (const Path& path : l.paths) {
    Path t;
    t.reserve(path.size());
    for (Vertex v : path) t.push_back(transposed(v));
    out.paths.push_back(std::move(t));
  }
  return out;
}

}  // namespace cliquelink
