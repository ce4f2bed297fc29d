#pragma once

// Shared generators and checkers for the test programs.

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "cliquelink/combinatorics.hpp"
#include "cliquelink/grid.hpp"
#include "cliquelink/linkage.hpp"
#include "cliquelink/solver.hpp"

namespace testsupport {

using namespace cliquelink;

/// Every terminal set (no symmetry reduction) and every pairing of it.
inline void for_each_problem(int d1, int d2, int k, const std::function<void(const LinkageProblem&)>& fn) {
  const auto n = static_cast<int>(ProductGraph(d1, d2).vertex_count());
  for_each_combination(n, 2 * k, [&](std::span<const int> ids) {
    for_each_pairing(2 * k, [&](std::span<const std::pair<int, int>> pairing) {
      fn(problem_from(d1, d2, ids, pairing));
      return true;
    });
    return true;
  });
}

/// A two-column block B beside a block A with the same rows, the way the
/// evacuation steps see them. special = up to two terminals of the chosen
/// pair (different rows, s in the first column, t in the second); the rest of
/// B holds at most |rows| ordinary terminals.
struct ClaimCase {
  ProductGraph g{1, 1};
  Subgrid b{ProductGraph(1, 1)};
  Subgrid a{ProductGraph(1, 1)};
  std::vector<Vertex> occupied;
  std::vector<Vertex> special;
};

inline ClaimCase random_claim_case(Rng& rng, int max_rows) {
  ClaimCase c;
  const int rows = rng.between(2, max_rows);
  const int a_cols = rng.between(1, 4);
  c.g = ProductGraph(rows - 1, 1 + a_cols);
  std::vector<int> all_rows(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) all_rows[static_cast<std::size_t>(r)] = r;
  std::vector<int> a_labels;
  for (int col = 2; col <= 1 + a_cols; ++col) a_labels.push_back(col);
  c.b = Subgrid(c.g, all_rows, std::vector<int>{0, 1});
  c.a = Subgrid(c.g, all_rows, a_labels);

  const int specials = rng.between(0, 2);
  if (specials >= 1) c.special.push_back({rng.between(0, rows - 1), 0});
  if (specials == 2) {
    int r = rng.between(0, rows - 2);
    if (r >= c.special[0].row) ++r;
    c.special.push_back({r, 1});
  }
  c.occupied = c.special;
  std::vector<Vertex> free_b;
  for (Vertex v : c.b.vertices())
    if (std::find(c.occupied.begin(), c.occupied.end(), v) == c.occupied.end()) free_b.push_back(v);
  const int ordinary = rng.between(0, rows);
  for (int i = 0; i < ordinary; ++i) {
    const auto j = static_cast<std::size_t>(i) + rng.below(free_b.size() - static_cast<std::size_t>(i));
    std::swap(free_b[static_cast<std::size_t>(i)], free_b[j]);
    c.occupied.push_back(free_b[static_cast<std::size_t>(i)]);
  }
  for (int r = 0; r < rows; ++r) {
    std::vector<Vertex> row_taken;
    for (int col : a_labels)
      if (rng.below(2) == 0) row_taken.push_back({r, col});
    if (row_taken.size() == a_labels.size()) row_taken.erase(row_taken.begin() + static_cast<long>(rng.below(row_taken.size())));
    c.occupied.insert(c.occupied.end(), row_taken.begin(), row_taken.end());
  }
  return c;
}

inline bool is_occupied(const ClaimCase& c, Vertex v) {
  return std::find(c.occupied.begin(), c.occupied.end(), v) != c.occupied.end();
}

inline bool is_special(const ClaimCase& c, Vertex v) {
  return std::find(c.special.begin(), c.special.end(), v) != c.special.end();
}

inline int ordinary_in_row(const ClaimCase& c, int r) {
  int n = 0;
  for (int col : {0, 1})
    if (is_occupied(c, {r, col}) && !is_special(c, {r, col})) ++n;
  return n;
}

/// Empty string when `m` is an injection from doubly occupied rows into rows
/// without ordinary terminals covering every doubly occupied row.
inline std::string check_claim1(const ClaimCase& c, const std::vector<std::pair<int, int>>& m) {
  std::set<int> from, to;
  for (auto [f, e] : m) {
    if (ordinary_in_row(c, f) != 2) return "row " + std::to_string(f) + " is not doubly occupied";
    if (ordinary_in_row(c, e) != 0) return "row " + std::to_string(e) + " is not empty";
    if (!from.insert(f).second || !to.insert(e).second) return "not injective";
  }
  for (int r : c.b.rows())
    if (ordinary_in_row(c, r) == 2 && !from.count(r)) return "row " + std::to_string(r) + " unmatched";
  return {};
}

/// Empty string when every ordinary terminal of B has an X-valid path to a
/// free entry of A, the paths are disjoint and end in distinct rows.
inline std::string check_claim2(const ClaimCase& c, const Claim2Routing& routing) {
  Subgrid both(c.g);
  std::set<Vertex> used;
  std::set<int> end_rows;
  std::set<Vertex> starts;
  for (const Path& p : routing.system.paths) {
    if (p.size() < 2) return "path too short";
    if (!c.b.contains(p.front()) || !is_occupied(c, p.front()) || is_special(c, p.front()))
      return "path does not start at an ordinary terminal of B: " + to_string(p);
    if (!c.a.contains(p.back()) || is_occupied(c, p.back())) return "path does not end at a free entry of A: " + to_string(p);
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (!adjacent(both, p[i], p[i + 1])) return "not a path: " + to_string(p);
    for (std::size_t i = 1; i + 1 < p.size(); ++i)
      if (is_occupied(c, p[i])) return "terminal inside a path: " + to_string(p);
    for (Vertex v : p)
      if (!used.insert(v).second) return "paths share " + to_string(v);
    if (!end_rows.insert(p.back().row).second) return "two paths end in row " + std::to_string(p.back().row);
    starts.insert(p.front());
  }
  for (Vertex v : c.b.vertices())
    if (is_occupied(c, v) && !is_special(c, v) && !starts.count(v)) return "terminal " + to_string(v) + " not routed";
  return {};
}

}  // namespace testsupport
