#include "cliquelink/solver.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "cliquelink/errors.hpp"

namespace cliquelink {

Linkage stitch_level(const LinkageProblem& p, const CaseRecord& rec, const Linkage& sub);

AlgorithmInvariantError::AlgorithmInvariantError(const std::string& what, SolverTrace trace)
    : std::logic_error("algorithm invariant violated: " + what),
      trace_(std::make_shared<const SolverTrace>(std::move(trace))) {}

namespace {

// Terminal positions of one level, indexed over the ambient grid.
class Occupancy {
 public:
  explicit Occupancy(const LinkageProblem& p)
      : cols_(static_cast<std::size_t>(p.grid.base().col_count())),
        cell_(p.grid.base().vertex_count(), false) {
    for (Vertex v : p.terminals()) set(v, true);
  }

  bool operator()(Vertex v) const { return cell_[at(v)]; }
  void set(Vertex v, bool on) { cell_[at(v)] = on; }
  void move(Vertex from, Vertex to) {
    set(from, false);
    set(to, true);
  }

 private:
  std::size_t at(Vertex v) const {
    return static_cast<std::size_t>(v.row) * cols_ + static_cast<std::size_t>(v.col);
  }

  std::size_t cols_;
  std::vector<bool> cell_;
};

bool contains(std::span<const Vertex> vs, Vertex v) {
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

std::vector<int> labels(std::span<const int> s) { return {s.begin(), s.end()}; }

std::vector<int> without(std::span<const int> all, std::span<const int> drop) {
  std::vector<int> out;
  for (int l : all)
    if (std::find(drop.begin(), drop.end(), l) == drop.end()) out.push_back(l);
  return out;
}

Path concat(Path head, const Path& tail) {
  if (tail.empty()) return head;
  if (head.empty()) return tail;
  head.insert(head.end(), tail.begin() + 1, tail.end());
  return head;
}

class Engine {
 public:
  SolverTrace trace;

  [[noreturn]] void fail(const std::string& what) const { throw AlgorithmInvariantError(what, trace); }

  void guard(bool ok, const std::string& what) const {
    if (!ok) fail(what);
  }

  void guard_inequality(long x, long y, const std::string& where) const {
    guard(counting_inequality(x, y), "counting inequality x(y-1) > x+y-3 at " + where);
  }

  Linkage solve(const LinkageProblem& p, int depth) {
    if (p.k() == 0) return {};
    const std::size_t r = p.grid.row_count();
    const std::size_t c = p.grid.col_count();
    if (r <= 2 || c <= 2) {
      if (c < r) {
        return via_transpose(p, depth, "base", [&](const LinkageProblem& q) { return base(q, depth); });
      }
      return base(p, depth);
    }
    for (std::size_t i = 0; i < p.k(); ++i) {
      const TerminalPair& q = p.pairs[i];
      if (q.s.col == q.t.col) return case1(p, i, depth);
      if (q.s.row == q.t.row) {
        return via_transpose(p, depth, "case1",
                             [&](const LinkageProblem& t) { return case1(t, i, depth); });
      }
    }
    return case2(p, 0, depth, true);
  }

  Linkage base(const LinkageProblem& p, int depth) {
    return p.grid.row_count() == 1 ? base_rows(p, depth) : base_two_rows(p, depth);
  }

  Linkage via_transpose(const LinkageProblem& p, int depth, const char* reason,
                        const std::function<Linkage(const LinkageProblem&)>& next) {
    CaseRecord rec;
    rec.kind = CaseKind::transpose;
    rec.depth = depth;
    rec.rows = labels(p.grid.rows());
    rec.cols = labels(p.grid.cols());
    rec.reason = reason;
    trace.records.push_back(std::move(rec));
    return transpose(next(transpose(p)));
  }

  Linkage base_rows(const LinkageProblem& p, int depth) {
    if (p.grid.row_count() != 1) throw ContractError("base row case needs exactly one active row");
    if (2 * p.k() > p.grid.col_count()) throw ContractError("too many pairs for a single row");
    CaseRecord rec;
    rec.kind = CaseKind::base_row;
    rec.depth = depth;
    rec.rows = labels(p.grid.rows());
    rec.cols = labels(p.grid.cols());
    Linkage out;
    for (std::size_t i = 0; i < p.k(); ++i) {
      out.paths.push_back({p.pairs[i].s, p.pairs[i].t});
      rec.finished.emplace_back(static_cast<int>(i), out.paths.back());
    }
    trace.records.push_back(std::move(rec));
    return out;
  }

  Linkage base_two_rows(const LinkageProblem& p, int depth) {
    if (p.grid.row_count() != 2) throw ContractError("two-row base case needs exactly two active rows");
    const int target_row = p.grid.rows()[1];
    std::vector<Vertex> row;
    for (int c : p.grid.cols()) row.push_back({target_row, c});
    const std::vector<Vertex> terminals = p.terminals();
    if (terminals.size() > row.size()) throw ContractError("too many pairs for two rows");

    auto system = disjoint_paths(p.grid, terminals, row, {}, terminals.size());
    if (!system) fail("two-row lift: fewer than 2k disjoint paths into the second row");

    CaseRecord rec;
    rec.kind = CaseKind::base_two_rows;
    rec.depth = depth;
    rec.rows = labels(p.grid.rows());
    rec.cols = labels(p.grid.cols());
    rec.sub_rows = {target_row};
    rec.sub_cols = rec.cols;
    std::map<Vertex, Vertex> lifted;
    for (Path& path : system->paths) {
      lifted[path.front()] = path.back();
      if (path.size() > 1) {
        rec.moved.push_back(path.front());
        rec.stubs.push_back({path.front(), std::move(path)});
      }
    }
    for (std::size_t i = 0; i < p.k(); ++i) {
      rec.subpairs.push_back({lifted.at(p.pairs[i].s), lifted.at(p.pairs[i].t)});
      rec.subpair_origin.push_back(static_cast<int>(i));
    }
    return reduce(p, std::move(rec), depth, /*recurse_to_base_row=*/true);
  }

  Linkage case1(const LinkageProblem& p, std::size_t index, int depth) {
    const TerminalPair pair = p.pairs.at(index);
    if (pair.s.col != pair.t.col) throw ContractError("case 1 needs a pair inside one column");
    const long d1 = static_cast<long>(p.grid.row_count()) - 1;
    const long d2 = static_cast<long>(p.grid.col_count()) - 1;
    if (d1 < 2 || d2 < 2) throw ContractError("case 1 needs at least three rows and columns");
    const int column = pair.s.col;

    CaseRecord rec;
    rec.kind = CaseKind::case1;
    rec.depth = depth;
    rec.rows = labels(p.grid.rows());
    rec.cols = labels(p.grid.cols());
    rec.pair_index = static_cast<int>(index);
    rec.col_order.push_back(column);
    for (int c : p.grid.cols())
      if (c != column) rec.col_order.push_back(c);
    rec.l1 = {pair.s, pair.t};

    std::vector<Vertex> forbidden{pair.s, pair.t};
    for (Vertex v : p.terminals()) {
      if (v == pair.s || v == pair.t) continue;
      if (v.col == column) {
        rec.moved.push_back(v);
      } else {
        rec.kept.push_back(v);
        forbidden.push_back(v);
      }
    }
    std::sort(rec.moved.begin(), rec.moved.end());
    std::sort(rec.kept.begin(), rec.kept.end());

    const int removed[] = {column};
    const Subgrid rest = restricted(p.grid, {}, removed);
    guard_inequality(d1 + 1, d2 + 1, "case 1 target count");
    const long targets_needed = static_cast<long>(rec.moved.size() + rec.kept.size());
    guard((d1 + 1) * d2 > targets_needed, "case 1: column-deleted grid too small");

    Occupancy occ(p);
    std::vector<Vertex> free_entries;
    for (Vertex v : rest.vertices())
      if (!occ(v)) free_entries.push_back(v);

    auto system = disjoint_paths(p.grid, rec.moved, free_entries, forbidden, rec.moved.size());
    if (!system) fail("case 1: no disjoint paths out of the column");
    for (Path& path : system->paths) rec.stubs.push_back({path.front(), std::move(path)});

    rec.finished.emplace_back(static_cast<int>(index), rec.l1);
    fill_subproblem(p, rec, rest, index, std::nullopt);
    return reduce(p, std::move(rec), depth, false);
  }

  L1Choice find_l1(const LinkageProblem& p, std::size_t index, const Occupancy& occ) const {
    const Vertex s1 = p.pairs.at(index).s;
    const Vertex t1 = p.pairs.at(index).t;
    if (s1.row == t1.row || s1.col == t1.col)
      throw ContractError("L1 needs a pair in different rows and columns");
    auto free_inner = [&](const Path& path) {
      return std::none_of(path.begin() + 1, path.end() - 1, [&](Vertex v) { return occ(v); });
    };
    std::vector<L1Choice> candidates;
    candidates.push_back({{s1, {s1.row, t1.col}, t1}, s1.row});
    candidates.push_back({{s1, {t1.row, s1.col}, t1}, t1.row});
    for (int r : p.grid.rows())
      if (r != s1.row && r != t1.row)
        candidates.push_back({{s1, {r, s1.col}, {r, t1.col}, t1}, r});
    for (L1Choice& c : candidates)
      if (free_inner(c.path)) return std::move(c);
    fail("every candidate L1 path is blocked");
  }

  Linkage case2(const LinkageProblem& p, std::size_t index, int depth, bool allow_transpose) {
    const TerminalPair pair = p.pairs.at(index);
    const Vertex s1 = pair.s;
    const Vertex t1 = pair.t;
    if (s1.row == t1.row || s1.col == t1.col)
      throw ContractError("case 2 needs a pair in different rows and columns");
    const long d1 = static_cast<long>(p.grid.row_count()) - 1;
    const long d2 = static_cast<long>(p.grid.col_count()) - 1;
    if (d1 < 2 || d2 < 2) throw ContractError("case 2 needs at least three rows and columns");
    const int c1 = s1.col;
    const int c2 = t1.col;

    const std::vector<Vertex> terminals = p.terminals();
    const long in_columns = std::count_if(terminals.begin(), terminals.end(),
                                          [&](Vertex v) { return v.col == c1 || v.col == c2; });
    if (in_columns >= d1 + 3) {
      guard(allow_transpose, "case 3 after a transpose: both line pairs overfull");
      return via_transpose(p, depth, "case3", [&](const LinkageProblem& q) {
        return case2(q, index, depth, false);
      });
    }
    const long alpha = d1 + 2 - in_columns;
    guard(alpha >= 0 && alpha <= d1, "case 2: alpha out of range");

    Occupancy occ(p);
    const L1Choice l1 = find_l1(p, index, occ);
    const int top = l1.row;

    CaseRecord rec;
    rec.kind = CaseKind::case2;
    rec.depth = depth;
    rec.rows = labels(p.grid.rows());
    rec.cols = labels(p.grid.cols());
    rec.pair_index = static_cast<int>(index);
    rec.alpha = static_cast<int>(alpha);
    rec.l1 = l1.path;
    rec.col_order = {c1, c2};
    for (int c : p.grid.cols())
      if (c != c1 && c != c2) rec.col_order.push_back(c);

    const int pair_cols[] = {c1, c2};
    const Subgrid rest = restricted(p.grid, {}, pair_cols);
    const std::vector<int> rest_cols = labels(rest.cols());
    const Vertex special[] = {s1, t1};

    std::vector<int> ordered_rows{top};  // proof order of the rows
    std::optional<TerminalPair> padding;
    std::map<Vertex, Path> stubs;

    auto ordinary_in = [&](std::span<const int> rows) {
      std::vector<Vertex> out;
      for (int r : rows)
        for (int c : pair_cols) {
          Vertex v{r, c};
          if (occ(v) && v != s1 && v != t1) out.push_back(v);
        }
      std::sort(out.begin(), out.end());
      return out;
    };
    auto row_full_in_rest = [&](int r) {
      return std::all_of(rest_cols.begin(), rest_cols.end(), [&](int c) { return occ({r, c}); });
    };
    auto extend = [&](Vertex origin, const Path& step) {
      auto it = stubs.find(origin);
      if (it == stubs.end()) {
        stubs.emplace(origin, step);
      } else {
        it->second = concat(std::move(it->second), step);
      }
    };
    // Claim-2 evacuation of the lower rows, shared by the alpha = 0, 1 and
    // 2 <= alpha <= d1-2 subcases. `origin_of` maps current positions back to
    // the terminal they stand for.
    auto evacuate_lower = [&](std::span<const int> lower_rows, std::map<Vertex, Vertex>& origin_of) {
      const long lower_d1 = static_cast<long>(lower_rows.size());
      const Subgrid b(p.grid.base(), labels(lower_rows), {c1, c2});
      const Subgrid a(p.grid.base(), labels(lower_rows), rest_cols);
      std::vector<Vertex> occupied;
      long in_b = 0;
      for (Vertex v : b.vertices())
        if (occ(v)) ++in_b;
      guard(in_b <= lower_d1 + 2, "two-column routing: more than d1'+2 terminals in B");
      for (int r : p.grid.rows())
        for (int c : p.grid.cols())
          if (occ({r, c})) occupied.push_back({r, c});
      Claim2Routing routing = route_claim2(b, a, occupied, special);
      rec.matching = routing.matching;
      for (Path& path : routing.system.paths) {
        const Vertex from = path.front();
        const Vertex origin = origin_of.count(from) ? origin_of.at(from) : from;
        occ.move(from, path.back());
        extend(origin, path);
      }
    };

    if (alpha == d1) {
      for (int r : p.grid.rows())
        if (r != top) ordered_rows.push_back(r);
    } else if (alpha == d1 - 1) {
      guard_inequality(d1 - 1, d2, "case 2, alpha = d1-1");
      for (int r : p.grid.rows())
        if (r != top) ordered_rows.push_back(r);
      const std::vector<int> lower = without(p.grid.rows(), std::span<const int>(&top, 1));
      const std::vector<Vertex> extra = ordinary_in(lower);
      guard(extra.size() == 1, "case 2, alpha = d1-1: expected one extra terminal");
      const Vertex s2 = extra.front();
      std::size_t pair2 = 0;
      while (p.pairs[pair2].s != s2 && p.pairs[pair2].t != s2) ++pair2;
      const Vertex t2 = p.pairs[pair2].s == s2 ? p.pairs[pair2].t : p.pairs[pair2].s;
      rec.moved = {s2};

      Path route = route_single(p, s2, t2, top, c1, c2, occ, l1.path);
      if (route.back() == t2) {
        Path finished = route;
        if (p.pairs[pair2].s != s2) std::reverse(finished.begin(), finished.end());
        rec.finished.emplace_back(static_cast<int>(pair2), std::move(finished));
        occ.set(s2, false);
        // t2 stays occupied; pair it with a free vertex so the recursion avoids it.
        std::optional<Vertex> z;
        for (Vertex v : rest.vertices())
          if (!occ(v)) {
            z = v;
            break;
          }
        guard(z.has_value(), "case 2, alpha = d1-1: no free vertex for padding");
        padding = TerminalPair{t2, *z};
      } else {
        occ.move(s2, route.back());
        stubs.emplace(s2, route);
      }
    } else if (alpha == 1) {
      guard(d1 >= 3, "case 2, alpha = 1 needs d1 >= 3");
      long full_total = 0;
      std::vector<int> full_other;
      for (int r : p.grid.rows())
        if (row_full_in_rest(r)) {
          ++full_total;
          if (r != top) full_other.push_back(r);
        }
      guard_inequality(2, d2, "case 2, alpha = 1 full rows");
      guard(full_total <= 1, "case 2, alpha = 1: more than one full row");
      int second = -1;
      if (!full_other.empty()) {
        second = full_other.front();
      } else {
        for (int r : p.grid.rows())
          if (r != top) {
            second = r;
            break;
          }
      }
      ordered_rows.push_back(second);
      for (int r : p.grid.rows())
        if (r != top && r != second) ordered_rows.push_back(r);
      const std::vector<int> lower(ordered_rows.begin() + 2, ordered_rows.end());

      std::map<Vertex, Vertex> origin_of;
      rec.scenario = 1;
      for (Vertex x : ordinary_in(std::span<const int>(&second, 1))) {
        rec.moved.push_back(x);
        std::optional<Vertex> below;
        for (int r : lower)
          if (!occ({r, x.col})) {
            below = Vertex{r, x.col};
            break;
          }
        if (below) {
          occ.move(x, *below);
          origin_of[*below] = x;
          extend(x, {x, *below});
          continue;
        }
        // Every neighbour of x below it is a terminal: cross into its own row.
        rec.scenario = 2;
        std::optional<Vertex> across;
        for (int c : rest_cols)
          if (!occ({second, c})) {
            across = Vertex{second, c};
            break;
          }
        guard(across.has_value(), "case 2, alpha = 1 scenario 2: row of s_i is full");
        occ.move(x, *across);
        extend(x, {x, *across});
      }
      for (Vertex v : ordinary_in(lower))
        if (!origin_of.count(v)) rec.moved.push_back(v);
      long ordinary_lower = static_cast<long>(ordinary_in(lower).size());
      guard(ordinary_lower <= d1 - 1, "case 2, alpha = 1: more than d1' ordinary terminals in B2");
      evacuate_lower(lower, origin_of);
    } else {
      guard(alpha == 0 || (alpha >= 2 && alpha <= d1 - 2), "case 2: unexpected alpha");
      std::vector<int> full_rows;
      for (int r : p.grid.rows())
        if (row_full_in_rest(r)) full_rows.push_back(r);
      guard_inequality(alpha + 1, d2, "case 2 full rows");
      guard(static_cast<long>(full_rows.size()) <= alpha, "case 2: more than alpha full rows");
      std::vector<int> upper;
      for (int r : full_rows)
        if (r != top) upper.push_back(r);
      for (int r : p.grid.rows()) {
        if (static_cast<long>(upper.size()) >= alpha) break;
        if (r != top && std::find(upper.begin(), upper.end(), r) == upper.end()) upper.push_back(r);
      }
      std::sort(upper.begin(), upper.end());
      ordered_rows.insert(ordered_rows.end(), upper.begin(), upper.end());
      std::vector<int> lower;
      for (int r : p.grid.rows())
        if (r != top && std::find(upper.begin(), upper.end(), r) == upper.end()) lower.push_back(r);
      ordered_rows.insert(ordered_rows.end(), lower.begin(), lower.end());

      std::map<Vertex, Vertex> origin_of;
      if (alpha >= 2) {
        const std::vector<Vertex> movers = ordinary_in(upper);
        long n2 = 0;
        std::vector<Vertex> targets;
        std::vector<Vertex> blocked;
        for (int r : lower)
          for (int c : pair_cols) {
            if (occ({r, c})) {
              ++n2;
              blocked.push_back({r, c});
            } else {
              targets.push_back({r, c});
            }
          }
        for (int r : upper)
          for (int c : pair_cols)
            if (occ({r, c}) && !contains(movers, {r, c})) blocked.push_back({r, c});
        rec.n1 = static_cast<int>(movers.size());
        rec.n2 = static_cast<int>(n2);
        const long n12 = rec.n1 + n2;
        guard(n12 <= d1 + 2 - alpha && d1 + 2 - alpha <= d1, "case 2: n1 + n2 <= d1 + 2 - alpha <= d1");
        guard(n12 <= 2 * d1 - 2 * alpha, "case 2: n1 + n2 <= |B_{alpha+1}|");
        const Subgrid b1(p.grid.base(), without(p.grid.rows(), std::span<const int>(&top, 1)),
                         {c1, c2});
        auto system = disjoint_paths(b1, movers, targets, blocked, movers.size());
        if (!system) fail("case 2: no disjoint paths from the upper rows of B1");
        for (Path& path : system->paths) {
          rec.moved.push_back(path.front());
          occ.move(path.front(), path.back());
          origin_of[path.back()] = path.front();
          extend(path.front(), path);
        }
      }
      for (Vertex v : ordinary_in(lower))
        if (!origin_of.count(v)) rec.moved.push_back(v);
      evacuate_lower(lower, origin_of);
    }
    std::sort(rec.moved.begin(), rec.moved.end());
    rec.row_order = ordered_rows;
    for (auto& [origin, path] : stubs) rec.stubs.push_back({origin, std::move(path)});
    rec.finished.emplace_back(static_cast<int>(index), l1.path);
    fill_subproblem(p, rec, rest, index, padding);
    return reduce(p, std::move(rec), depth, false);
  }

  Claim2Routing route_claim2(const Subgrid& b, const Subgrid& a, std::span<const Vertex> occupied,
                             std::span<const Vertex> special) const {
    if (b.col_count() != 2) throw ContractError("two-column routing: B must have two columns");
    if (!std::equal(b.rows().begin(), b.rows().end(), a.rows().begin(), a.rows().end()))
      throw ContractError("two-column routing: A and B must share their rows");
    for (int c : a.cols())
      if (b.has_col(c)) throw ContractError("two-column routing: A and B overlap");
    std::vector<Vertex> sorted(occupied.begin(), occupied.end());
    std::sort(sorted.begin(), sorted.end());
    auto is_occ = [&](Vertex v) { return std::binary_search(sorted.begin(), sorted.end(), v); };

    Claim2Routing out;
    out.matching = matching_claim1(b, sorted, special);
    auto free_in_a = [&](int row) -> Vertex {
      for (int c : a.cols())
        if (!is_occ({row, c})) return {row, c};
      fail("two-column routing: row " + std::to_string(row) + " of A has no free entry");
    };
    for (int r : b.rows()) {
      std::vector<Vertex> ordinary;
      for (int c : b.cols()) {
        Vertex v{r, c};
        if (is_occ(v) && !contains(special, v)) ordinary.push_back(v);
      }
      if (ordinary.size() == 1) {
        out.system.paths.push_back({ordinary[0], free_in_a(r)});
      } else if (ordinary.size() == 2) {
        auto m = std::find_if(out.matching.begin(), out.matching.end(),
                              [&](const auto& e) { return e.first == r; });
        if (m == out.matching.end()) fail("two-column routing: doubly occupied row without a partner");
        const int empty_row = m->second;
        std::size_t detour = is_occ({empty_row, ordinary[0].col}) ? 1 : 0;
        const Vertex via{empty_row, ordinary[detour].col};
        if (is_occ(via)) fail("two-column routing: partner row has no free entry");
        out.system.paths.push_back({ordinary[detour], via, free_in_a(empty_row)});
        out.system.paths.push_back({ordinary[1 - detour], free_in_a(r)});
      }
    }
    std::sort(out.system.paths.begin(), out.system.paths.end(),
              [](const Path& x, const Path& y) { return x.front() < y.front(); });
    return out;
  }

  std::vector<std::pair<int, int>> matching_claim1(const Subgrid& b, std::span<const Vertex> occupied,
                                                   std::span<const Vertex> special) const {
    if (b.col_count() != 2) throw ContractError("row matching: B must have two columns");
    long total = 0;
    std::vector<int> doubly;
    std::vector<int> empty;
    for (int r : b.rows()) {
      int ordinary = 0;
      for (int c : b.cols()) {
        Vertex v{r, c};
        if (!contains(occupied, v)) continue;
        ++total;
        if (!contains(special, v)) ++ordinary;
      }
      if (ordinary == 2) doubly.push_back(r);
      if (ordinary == 0) empty.push_back(r);
    }
    if (total > static_cast<long>(b.row_count()) + 2)
      throw ContractError("row matching: more than d1'+2 terminals in B");
    if (empty.size() < doubly.size()) fail("row matching: no injection from doubly occupied rows");
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < doubly.size(); ++i) out.emplace_back(doubly[i], empty[i]);
    return out;
  }

 private:
  // Breadth-first route for the single extra terminal when alpha = d1-1: it
  // moves through free entries of B1 and stops at t2 or a free entry of A1.
  Path route_single(const LinkageProblem& p, Vertex s2, Vertex t2, int top, int c1, int c2,
                    const Occupancy& occ, const Path& l1) const {
    auto in_b1 = [&](Vertex v) { return v.row != top && (v.col == c1 || v.col == c2); };
    std::map<Vertex, Vertex> parent;
    std::deque<Vertex> queue{s2};
    parent[s2] = s2;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : neighbors(p.grid, v)) {
        if (w.row == top || parent.count(w)) continue;
        if (in_b1(w)) {
          if (occ(w) || contains(l1, w)) continue;
          parent[w] = v;
          queue.push_back(w);
          continue;
        }
        if (w != t2 && occ(w)) continue;
        Path path{w};
        for (Vertex u = v; u != s2; u = parent.at(u)) path.push_back(u);
        path.push_back(s2);
        std::reverse(path.begin(), path.end());
        return path;
      }
    }
    fail("case 2, alpha = d1-1: no X-valid route from s2 into A1");
  }

  void fill_subproblem(const LinkageProblem& p, CaseRecord& rec, const Subgrid& rest,
                       std::size_t index, const std::optional<TerminalPair>& padding) const {
    rec.sub_rows = labels(rest.rows());
    rec.sub_cols = labels(rest.cols());
    auto landing = [&](Vertex v) {
      for (const Stub& s : rec.stubs)
        if (s.terminal == v) return s.path.back();
      return v;
    };
    for (std::size_t i = 0; i < p.k(); ++i) {
      if (i == index) continue;
      bool done = std::any_of(rec.finished.begin(), rec.finished.end(),
                              [&](const auto& f) { return f.first == static_cast<int>(i); });
      if (done) continue;
      rec.subpairs.push_back({landing(p.pairs[i].s), landing(p.pairs[i].t)});
      rec.subpair_origin.push_back(static_cast<int>(i));
    }
    if (padding) {
      rec.subpairs.push_back(*padding);
      rec.subpair_origin.push_back(-1);
    }
    // Every stub meets the recursion grid only in its last vertex.
    for (const Stub& s : rec.stubs) {
      for (std::size_t j = 0; j + 1 < s.path.size(); ++j)
        guard(!rest.contains(s.path[j]), "stub enters the recursion grid early at " + to_string(s.path[j]));
      guard(rest.contains(s.path.back()), "stub does not reach the recursion grid");
    }
  }

  Linkage reduce(const LinkageProblem& p, CaseRecord rec, int depth, bool recurse_to_base_row) {
    LinkageProblem sub{Subgrid(p.grid.base(), rec.sub_rows, rec.sub_cols), rec.subpairs};
    guard(static_cast<int>(sub.k()) <= linkedness_bound(sub.grid) ||
              (recurse_to_base_row && 2 * sub.k() <= sub.grid.col_count()),
          "induced problem exceeds the linkedness bound");
    trace.records.push_back(rec);
    Linkage inner = recurse_to_base_row ? base_rows(sub, depth + 1) : solve(sub, depth + 1);
    return stitch_level(p, rec, inner);
  }
};

void check_solvable(const LinkageProblem& p) {
  check_terminals(p);
  if (static_cast<int>(p.k()) > linkedness_bound(p.grid))
    throw ContractError("k = " + std::to_string(p.k()) + " exceeds the linkedness bound " +
                        std::to_string(linkedness_bound(p.grid)));
}

}  // namespace

SolveResult solve(const LinkageProblem& p) {
  check_solvable(p);
  Engine e;
  Linkage l = e.solve(p, 0);
  return {std::move(l), std::move(e.trace)};
}

Linkage solve_base_rows(const LinkageProblem& p) {
  check_terminals(p);
  Engine e;
  if (p.k() == 0) return {};
  return e.base_rows(p, 0);
}

SolveResult solve_base_two_rows(const LinkageProblem& p) {
  check_solvable(p);
  Engine e;
  if (p.k() == 0) return {};
  Linkage l = e.base_two_rows(p, 0);
  return {std::move(l), std::move(e.trace)};
}

SolveResult case1_pair_in_line(const LinkageProblem& p, std::size_t pair_index) {
  check_solvable(p);
  const TerminalPair& q = p.pairs.at(pair_index);
  Engine e;
  Linkage l;
  if (q.s.col == q.t.col) {
    l = e.case1(p, pair_index, 0);
  } else if (q.s.row == q.t.row) {
    l = e.via_transpose(p, 0, "case1", [&](const LinkageProblem& t) { return e.case1(t, pair_index, 0); });
  } else {
    throw ContractError("case 1 needs a pair inside one row or column");
  }
  return {std::move(l), std::move(e.trace)};
}

L1Choice find_l1(const LinkageProblem& p, std::size_t pair_index) {
  check_terminals(p);
  Engine e;
  return e.find_l1(p, pair_index, Occupancy(p));
}

SolveResult case2_solve(const LinkageProblem& p, std::size_t pair_index) {
  check_solvable(p);
  Engine e;
  Linkage l = e.case2(p, pair_index, 0, true);
  return {std::move(l), std::move(e.trace)};
}

std::vector<std::pair<int, int>> claim1_matching(const Subgrid& b, std::span<const Vertex> occupied,
                                                 std::span<const Vertex> special) {
  return Engine{}.matching_claim1(b, occupied, special);
}

Claim2Routing claim2_route(const Subgrid& b, const Subgrid& a, std::span<const Vertex> occupied,
                           std::span<const Vertex> special) {
  return Engine{}.route_claim2(b, a, occupied, special);
}

std::pair<int, int> cyclic_dual_params(int d) {
  if (d < 2) throw ContractError("cyclic polytope dimension must be at least 2");
  return {d / 2, (d + 1) / 2};
}

}  // namespace cliquelink
