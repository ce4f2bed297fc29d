#include "cliquelink/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include "cliquelink/combinatorics.hpp"
#include "cliquelink/errors.hpp"

namespace cliquelink {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::feasible: return "feasible";
    case Outcome::infeasible: return "infeasible";
    case Outcome::indeterminate: return "indeterminate";
  }
  return "?";
}

const char* to_string(SharpnessStatus s) {
  switch (s) {
    case SharpnessStatus::found: return "found";
    case SharpnessStatus::none_exists: return "none-exists";
    case SharpnessStatus::none_found: return "none-found";
  }
  return "?";
}

VerifyReport verify(const LinkageProblem& p, const Linkage& l) {
  auto fail = [](std::string condition, int path, std::optional<Vertex> where, std::string detail) {
    VerifyReport r;
    r.ok = false;
    r.condition = condition;
    r.path = path;
    r.where = where;
    r.message = condition;
    if (where) r.message += ", vertex " + to_string(*where);
    if (path >= 0) r.message += ", path " + std::to_string(path + 1);
    if (!detail.empty()) r.message += ": " + detail;
    return r;
  };
  if (l.paths.size() != p.k())
    return fail("count", -1, std::nullopt,
                "expected " + std::to_string(p.k()) + " paths, got " + std::to_string(l.paths.size()));
  std::map<Vertex, int> owner;
  for (std::size_t i = 0; i < l.paths.size(); ++i) {
    const Path& path = l.paths[i];
    const int pi = static_cast<int>(i);
    for (Vertex v : path)
      if (!p.grid.contains(v)) return fail("active", pi, v, "vertex outside the grid");
    const TerminalPair& q = p.pairs[i];
    if (path.size() < 2 || !((path.front() == q.s && path.back() == q.t) ||
                             (path.front() == q.t && path.back() == q.s)))
      return fail("endpoints", pi, std::nullopt,
                  "expected ends " + to_string(q.s) + " and " + to_string(q.t));
    for (std::size_t j = 0; j + 1 < path.size(); ++j)
      if (!adjacent(p.grid, path[j], path[j + 1]))
        return fail("adjacency", pi, path[j + 1], to_string(path[j]) + " -> " + to_string(path[j + 1]));
    std::vector<Vertex> sorted = path;
    std::sort(sorted.begin(), sorted.end());
    if (auto d = std::adjacent_find(sorted.begin(), sorted.end()); d != sorted.end())
      return fail("simple", pi, *d, "vertex repeated");
  }
  for (std::size_t i = 0; i < l.paths.size(); ++i)
    for (Vertex v : l.paths[i]) {
      auto [it, fresh] = owner.emplace(v, static_cast<int>(i));
      if (!fresh)
        return fail("disjointness", static_cast<int>(i), v,
                    "shared with path " + std::to_string(it->second + 1));
    }
  return {};
}

namespace {

// Backtracking over induced paths with word-parallel vertex sets.
class Search {
 public:
  Search(const LinkageProblem& p, std::optional<std::uint64_t> budget)
      : p_(p),
        verts_(p.grid.vertices()),
        n_(static_cast<int>(verts_.size())),
        words_((n_ + 63) / 64),
        budget_(budget.value_or(std::numeric_limits<std::uint64_t>::max())),
        adj_(static_cast<std::size_t>(n_ * words_), 0),
        blocked_(static_cast<std::size_t>(words_), 0),
        path_mask_(static_cast<std::size_t>(words_), 0),
        seen_(static_cast<std::size_t>(words_), 0),
        frontier_(static_cast<std::size_t>(words_), 0),
        next_(static_cast<std::size_t>(words_), 0) {
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        if (u != v && (verts_[idx(u)].row == verts_[idx(v)].row || verts_[idx(u)].col == verts_[idx(v)].col))
          set(row(u), v);
    for (const TerminalPair& q : p.pairs) {
      ends_.push_back({id(q.s), id(q.t)});
      set(blocked_.data(), ends_.back().first);
      set(blocked_.data(), ends_.back().second);
    }
    order_.resize(ends_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    // Hardest pair first: fewest internally disjoint routes of length <= 2.
    std::vector<int> routes(ends_.size());
    for (std::size_t i = 0; i < ends_.size(); ++i) {
      auto [s, t] = ends_[i];
      int count = test(row(s), t) ? 1 : 0;
      for (int w = 0; w < words_; ++w)
        count += std::popcount(row(s)[w] & row(t)[w] & ~blocked_[static_cast<std::size_t>(w)]);
      routes[i] = count;
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return routes[a] < routes[b]; });
    paths_.resize(ends_.size());
  }

  Verdict run() {
    Verdict v;
    bool found = ends_.empty() || (all_reachable(0) && start(0));
    v.nodes_explored = nodes_;
    if (exhausted_) {
      v.outcome = Outcome::indeterminate;
    } else if (found) {
      v.outcome = Outcome::feasible;
      Linkage l;
      for (const std::vector<int>& ids : paths_) {
        Path path;
        for (int i : ids) path.push_back(verts_[idx(i)]);
        l.paths.push_back(std::move(path));
      }
      v.witness = std::move(l);
    } else {
      v.outcome = Outcome::infeasible;
    }
    return v;
  }

 private:
  static std::size_t idx(int i) { return static_cast<std::size_t>(i); }
  std::uint64_t* row(int v) { return adj_.data() + static_cast<std::ptrdiff_t>(v) * words_; }
  static void set(std::uint64_t* b, int i) { b[i / 64] |= (1ULL << (i % 64)); }
  static void clear(std::uint64_t* b, int i) { b[i / 64] &= ~(1ULL << (i % 64)); }
  static bool test(const std::uint64_t* b, int i) { return (b[i / 64] >> (i % 64)) & 1ULL; }

  int id(Vertex v) const {
    return static_cast<int>(p_.grid.row_index(v.row) * p_.grid.col_count() + p_.grid.col_index(v.col));
  }

  // Is dst reachable from src through unblocked vertices?
  bool reachable(int src, int dst) {
    std::fill(seen_.begin(), seen_.end(), 0);
    std::fill(frontier_.begin(), frontier_.end(), 0);
    set(seen_.data(), src);
    set(frontier_.data(), src);
    while (true) {
      std::fill(next_.begin(), next_.end(), 0);
      bool any = false;
      for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = frontier_[idx(w)];
        while (bits) {
          const int v = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          const std::uint64_t* a = row(v);
          for (int x = 0; x < words_; ++x) next_[idx(x)] |= a[x];
        }
      }
      if (test(next_.data(), dst)) return true;
      for (int w = 0; w < words_; ++w) {
        next_[idx(w)] &= ~blocked_[idx(w)] & ~seen_[idx(w)];
        seen_[idx(w)] |= next_[idx(w)];
        any = any || next_[idx(w)] != 0;
      }
      if (!any) return false;
      std::swap(frontier_, next_);
    }
  }

  bool all_reachable(std::size_t from) {
    for (std::size_t o = from; o < order_.size(); ++o) {
      auto [s, t] = ends_[order_[o]];
      if (!reachable(s, t)) return false;
    }
    return true;
  }

  bool start(std::size_t o) {
    const int s = ends_[order_[o]].first;
    std::fill(path_mask_.begin(), path_mask_.end(), 0);
    set(path_mask_.data(), s);
    paths_[order_[o]] = {s};
    return extend(o, s);
  }

  bool extend(std::size_t o, int cur) {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    const std::size_t pair = order_[o];
    const int t = ends_[pair].second;
    std::vector<int>& path = paths_[pair];
    if (test(row(cur), t)) {
      // An induced path must take the edge to t as soon as it exists.
      path.push_back(t);
      if (o + 1 == order_.size() || start(o + 1)) return true;
      path.pop_back();
      return false;
    }
    const std::vector<std::uint64_t> saved_mask = path_mask_;
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = row(cur)[w] & ~blocked_[idx(w)];
      while (bits) {
        const int v = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        bool chord = false;
        for (int x = 0; x < words_ && !chord; ++x) {
          std::uint64_t touch = row(v)[x] & path_mask_[idx(x)];
          if (x == cur / 64) touch &= ~(1ULL << (cur % 64));
          chord = touch != 0;
        }
        if (chord) continue;
        set(blocked_.data(), v);
        set(path_mask_.data(), v);
        path.push_back(v);
        if (reachable(v, t) && all_reachable(o + 1) && extend(o, v)) return true;
        path.pop_back();
        clear(blocked_.data(), v);
        path_mask_ = saved_mask;
        if (exhausted_) return false;
      }
    }
    return false;
  }

  const LinkageProblem& p_;
  std::vector<Vertex> verts_;
  int n_;
  int words_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<std::uint64_t> adj_;
  std::vector<std::uint64_t> blocked_;
  std::vector<std::uint64_t> path_mask_;
  std::vector<std::uint64_t> seen_;
  std::vector<std::uint64_t> frontier_;
  std::vector<std::uint64_t> next_;
  std::vector<std::pair<int, int>> ends_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<int>> paths_;
};

struct Hit {
  std::size_t index = std::numeric_limits<std::size_t>::max();
  std::uint64_t within = 0;  // instances of this unit up to and including the hit
  LinkageProblem problem{Subgrid(ProductGraph(0, 0)), {}};
  std::uint64_t nodes = 0;
};

struct UnitResult {
  std::uint64_t instances = 0;
  bool undecided = false;
  std::optional<Hit> hit;
};

struct SweepResult {
  std::optional<Hit> hit;
  std::uint64_t instances = 0;
  bool complete = true;
};

// Runs `unit(i)` for i in [0, count) over `workers` threads and merges the
// results in index order, stopping at the first unit that reports a hit.
SweepResult sweep(std::size_t count, unsigned workers,
                  const std::function<UnitResult(std::size_t)>& unit) {
  workers = std::max(1u, workers);
  std::vector<UnitResult> results(count);
  std::vector<bool> ran(count, false);
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < count; i += workers) {
      if (i > best.load()) break;
      results[i] = unit(i);
      ran[i] = true;
      if (results[i].hit) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (std::thread& t : pool) t.join();
  }
  SweepResult out;
  for (std::size_t i = 0; i < count; ++i) {
    if (!ran[i]) {
      out.complete = false;
      break;
    }
    out.instances += results[i].instances;
    if (results[i].undecided) out.complete = false;
    if (results[i].hit) {
      out.hit = std::move(results[i].hit);
      return out;
    }
  }
  return out;
}

// Every 2k-subset containing vertex 0, as vertex-id lists.
std::vector<std::vector<int>> anchored_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  for_each_combination(n - 1, 2 * k - 1, [&](std::span<const int> c) {
    std::vector<int> ids{0};
    for (int x : c) ids.push_back(x + 1);
    out.push_back(std::move(ids));
    return true;
  });
  return out;
}

UnitResult check_subset(int d1, int d2, const std::vector<int>& ids, const SearchOptions& options) {
  UnitResult r;
  for_each_pairing(static_cast<int>(ids.size()), [&](std::span<const std::pair<int, int>> pairing) {
    LinkageProblem p = problem_from(d1, d2, ids, pairing);
    ++r.instances;
    Verdict v = exhaustive_solve(p, options.node_budget);
    if (v.outcome == Outcome::indeterminate) r.undecided = true;
    if (v.outcome == Outcome::infeasible) {
      r.hit = Hit{0, r.instances, std::move(p), v.nodes_explored};
      return false;
    }
    return true;
  });
  return r;
}

SweepResult run_search(int d1, int d2, int k, const SearchOptions& options) {
  const ProductGraph g(d1, d2);
  const auto n = static_cast<int>(g.vertex_count());
  if (k < 0 || 2 * k > n) throw ContractError("2k exceeds the number of vertices");
  if (k == 0) return {std::nullopt, 1, true};
  if (options.mode == SearchMode::exhaustive) {
    const std::vector<std::vector<int>> subsets = anchored_subsets(n, k);
    return sweep(subsets.size(), options.workers,
                 [&](std::size_t i) { return check_subset(d1, d2, subsets[i], options); });
  }
  return sweep(static_cast<std::size_t>(options.samples), options.workers, [&](std::size_t i) {
    Rng rng(derive_seed(options.seed, i));
    LinkageProblem p = random_problem(d1, d2, k, rng);
    UnitResult r;
    r.instances = 1;
    Verdict v = exhaustive_solve(p, options.node_budget);
    if (v.outcome == Outcome::indeterminate) r.undecided = true;
    if (v.outcome == Outcome::infeasible) r.hit = Hit{i, 1, std::move(p), v.nodes_explored};
    return r;
  });
}

}  // namespace

Verdict exhaustive_solve(const LinkageProblem& p, std::optional<std::uint64_t> node_budget) {
  check_terminals(p);
  return Search(p, node_budget).run();
}

LinkednessResult is_k_linked(int d1, int d2, int k, const SearchOptions& options) {
  const ProductGraph g(d1, d2);
  if (options.mode == SearchMode::exhaustive && !(g.vertex_count() <= 16 || 2 * k <= 6))
    throw ContractError("exhaustive linkedness check limited to 16 vertices or 2k <= 6");
  SweepResult s = run_search(d1, d2, k, options);
  LinkednessResult out;
  out.instances = s.instances;
  out.complete = s.complete;
  if (s.hit) {
    out.linked = false;
    out.counterexample = std::move(s.hit->problem);
  }
  return out;
}

SharpnessResult find_infeasible_pairing(int d1, int d2, int k, const SearchOptions& options) {
  SweepResult s = run_search(d1, d2, k, options);
  SharpnessResult out;
  out.instances = s.instances;
  if (s.hit) {
    out.status = SharpnessStatus::found;
    out.problem = std::move(s.hit->problem);
    out.certificate_nodes = s.hit->nodes;
  } else if (options.mode == SearchMode::exhaustive && s.complete) {
    out.status = SharpnessStatus::none_exists;
  }
  return out;
}

}  // namespace cliquelink
