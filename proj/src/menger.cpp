#include "cliquelink/menger.hpp"

#include <algorithm>
#include <limits>

#include "cliquelink/errors.hpp"

namespace cliquelink {
namespace {

constexpr int kNone = -1;

// Residual-graph bookkeeping over the split network. Node 2v is v_in, 2v+1 is
// v_out; the super source and sink follow the 2n vertex nodes.
class UnitFlow {
 public:
  UnitFlow(const Subgrid& s, std::span<const Vertex> from, std::span<const Vertex> to,
           std::span<const Vertex> forbidden)
      : s_(s),
        cols_(static_cast<int>(s.col_count())),
        n_(static_cast<int>(s.vertex_count())),
        role_(static_cast<std::size_t>(n_), 0),
        start_(static_cast<std::size_t>(n_), false),
        end_(static_cast<std::size_t>(n_), false),
        inner_(static_cast<std::size_t>(n_), false),
        succ_(static_cast<std::size_t>(n_), kNone),
        pred_(static_cast<std::size_t>(n_), kNone),
        parent_(static_cast<std::size_t>(2 * n_ + 2), kNone) {
    for (Vertex v : forbidden) role_[at(v)] |= kForbidden;
    for (Vertex v : from) {
      if (role_[at(v)] & kForbidden)
        throw ContractError("source vertex " + to_string(v) + " is forbidden");
      role_[at(v)] |= kSource;
    }
    for (Vertex v : to) {
      if (role_[at(v)] & kForbidden)
        throw ContractError("target vertex " + to_string(v) + " is forbidden");
      role_[at(v)] |= kTarget;
    }
  }

  std::size_t run(std::size_t limit) {
    std::size_t flow = 0;
    while (flow < limit && augment()) ++flow;
    return flow;
  }

  PathSystem paths() const {
    PathSystem out;
    for (int v = 0; v < n_; ++v) {
      if (!start_[idx(v)]) continue;
      Path p{vertex(v)};
      int cur = v;
      while (!end_[idx(cur)]) {
        cur = succ_[idx(cur)];
        if (cur == kNone) throw std::logic_error("flow decomposition lost conservation");
        p.push_back(vertex(cur));
      }
      // Stop at the first target vertex; the network already guarantees this.
      auto first_target = std::find_if(p.begin(), p.end(), [&](Vertex w) {
        return (role_[at(w)] & kTarget) != 0;
      });
      p.erase(first_target + 1, p.end());
      out.paths.push_back(std::move(p));
    }
    return out;
  }

 private:
  static constexpr unsigned char kSource = 1;
  static constexpr unsigned char kTarget = 2;
  static constexpr unsigned char kForbidden = 4;

  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

  std::size_t at(Vertex v) const {
    if (!s_.contains(v)) throw InvalidVertexError("vertex " + to_string(v) + " is not active");
    return s_.row_index(v.row) * static_cast<std::size_t>(cols_) + s_.col_index(v.col);
  }

  Vertex vertex(int v) const {
    return {s_.rows()[idx(v / cols_)], s_.cols()[idx(v % cols_)]};
  }

  int source() const { return 2 * n_; }
  int sink() const { return 2 * n_ + 1; }

  // Visits residual successors of `node` in a fixed order; stops early when
  // `visit` returns true.
  template <typename Visit>
  bool expand(int node, Visit&& visit) const {
    if (node == source()) {
      for (int v = 0; v < n_; ++v)
        if ((role_[idx(v)] & kSource) && !start_[idx(v)] && visit(2 * v)) return true;
      return false;
    }
    int v = node / 2;
    if (node % 2 == 0) {
      if (!inner_[idx(v)]) return visit(2 * v + 1);
      if (pred_[idx(v)] != kNone) return visit(2 * pred_[idx(v)] + 1);
      return false;
    }
    if (role_[idx(v)] & kTarget) {
      if (!end_[idx(v)] && visit(sink())) return true;
    } else {
      const int rows = n_ / cols_;
      const int r = v / cols_;
      const int c = v % cols_;
      auto try_vertex = [&](int w) {
        unsigned char role = role_[idx(w)];
        if (role & (kForbidden | kSource)) return false;
        if (succ_[idx(v)] == w) return false;
        return visit(2 * w);
      };
      for (int rr = 0; rr < r; ++rr)
        if (try_vertex(rr * cols_ + c)) return true;
      for (int cc = 0; cc < cols_; ++cc)
        if (cc != c && try_vertex(r * cols_ + cc)) return true;
      for (int rr = r + 1; rr < rows; ++rr)
        if (try_vertex(rr * cols_ + c)) return true;
    }
    if (inner_[idx(v)] && visit(2 * v)) return true;
    return false;
  }

  bool augment() {
    std::fill(parent_.begin(), parent_.end(), kNone);
    std::vector<int> queue{source()};
    parent_[idx(source())] = source();
    bool found = false;
    for (std::size_t head = 0; head < queue.size() && !found; ++head) {
      int node = queue[head];
      found = expand(node, [&](int next) {
        if (parent_[idx(next)] != kNone) return false;
        parent_[idx(next)] = node;
        if (next == sink()) return true;
        queue.push_back(next);
        return false;
      });
    }
    if (!found) return false;

    std::vector<int> chain;
    for (int node = sink(); node != source(); node = parent_[idx(node)]) chain.push_back(node);
    chain.push_back(source());
    std::reverse(chain.begin(), chain.end());

    // Cancellations first: they read the flow state the search saw.
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      int a = chain[i];
      int b = chain[i + 1];
      if (a == source() || b == sink()) continue;
      if (a % 2 == 1 && b == a - 1) {
        inner_[idx(a / 2)] = false;
      } else if (a % 2 == 0 && b % 2 == 1 && b != a + 1) {
        succ_[idx(b / 2)] = kNone;
        pred_[idx(a / 2)] = kNone;
      }
    }
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      int a = chain[i];
      int b = chain[i + 1];
      if (a == source()) {
        start_[idx(b / 2)] = true;
      } else if (b == sink()) {
        end_[idx(a / 2)] = true;
      } else if (a % 2 == 0 && b == a + 1) {
        inner_[idx(a / 2)] = true;
      } else if (a % 2 == 1 && b % 2 == 0 && b != a - 1) {
        succ_[idx(a / 2)] = b / 2;
        pred_[idx(b / 2)] = a / 2;
      }
    }
    return true;
  }

  const Subgrid& s_;
  int cols_;
  int n_;
  std::vector<unsigned char> role_;
  std::vector<bool> start_;
  std::vector<bool> end_;
  std::vector<bool> inner_;
  std::vector<int> succ_;
  std::vector<int> pred_;
  std::vector<int> parent_;
};

}  // namespace

PathSystem max_disjoint_paths(const Subgrid& s, std::span<const Vertex> from,
                              std::span<const Vertex> to, std::span<const Vertex> forbidden,
                              std::size_t limit) {
  UnitFlow flow(s, from, to, forbidden);
  flow.run(limit);
  return flow.paths();
}

std::optional<PathSystem> disjoint_paths(const Subgrid& s, std::span<const Vertex> from,
                                         std::span<const Vertex> to,
                                         std::span<const Vertex> forbidden, std::size_t k) {
  auto distinct = [](std::span<const Vertex> vs) {
    std::vector<Vertex> v(vs.begin(), vs.end());
    std::sort(v.begin(), v.end());
    return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
  };
  if (k > distinct(from) || k > distinct(to))
    throw ContractError("k exceeds the size of an endpoint set");
  PathSystem result = max_disjoint_paths(s, from, to, forbidden, k);
  if (result.paths.size() < k) return std::nullopt;
  return result;
}

std::size_t local_connectivity(const Subgrid& s, Vertex u, Vertex v) {
  if (adjacent(s, u, v) || u == v)
    throw ContractError("local connectivity needs two distinct non-adjacent vertices");
  std::vector<Vertex> nu = neighbors(s, u);
  std::vector<Vertex> nv = neighbors(s, v);
  const Vertex ends[] = {u, v};
  return max_disjoint_paths(s, nu, nv, ends, std::min(nu.size(), nv.size())).paths.size();
}

std::size_t connectivity(const Subgrid& s) {
  const std::size_t n = s.vertex_count();
  if (n < 2) throw UndefinedConnectivityError("connectivity of a single vertex is undefined");
  if (s.row_count() == 1 || s.col_count() == 1) return n - 1;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  const std::vector<Vertex> vs = s.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!adjacent(s, vs[i], vs[j])) best = std::min(best, local_connectivity(s, vs[i], vs[j]));
  return best;
}

}  // namespace cliquelink
