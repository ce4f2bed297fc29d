#include "cliquelink/combinatorics.hpp"

#include <numeric>

#include "cliquelink/errors.hpp"

namespace cliquelink {

bool for_each_combination(int n, int m, const std::function<bool(std::span<const int>)>& visit) {
  if (m < 0 || m > n) return true;
  std::vector<int> c(static_cast<std::size_t>(m));
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    if (!visit(c)) return false;
    int i = m - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - m + i) --i;
    if (i < 0) return true;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
}

namespace {

bool pair_up(std::vector<int>& rest, std::vector<std::pair<int, int>>& acc,
             const std::function<bool(std::span<const std::pair<int, int>>)>& visit) {
  if (rest.empty()) return visit(acc);
  const int first = rest.front();
  for (std::size_t j = 1; j < rest.size(); ++j) {
    const int partner = rest[j];
    std::vector<int> next;
    next.reserve(rest.size() - 2);
    for (std::size_t i = 1; i < rest.size(); ++i)
      if (i != j) next.push_back(rest[i]);
    acc.emplace_back(first, partner);
    bool go_on = pair_up(next, acc, visit);
    acc.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

bool for_each_pairing(int m, const std::function<bool(std::span<const std::pair<int, int>>)>& visit) {
  if (m < 0 || m % 2 != 0) throw ContractError("pairings need an even number of elements");
  std::vector<int> rest(static_cast<std::size_t>(m));
  std::iota(rest.begin(), rest.end(), 0);
  std::vector<std::pair<int, int>> acc;
  return pair_up(rest, acc, visit);
}

std::uint64_t pairing_count(int m) {
  std::uint64_t out = 1;
  for (int i = m - 1; i > 1; i -= 2) out *= static_cast<std::uint64_t>(i);
  return out;
}

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

int Rng::between(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  Rng r(seed ^ (index * 0xd1b54a32d192ed03ULL));
  r.next();
  return r.next();
}

LinkageProblem random_problem(int d1, int d2, int k, Rng& rng) {
  ProductGraph g(d1, d2);
  const auto n = static_cast<int>(g.vertex_count());
  if (k < 0 || 2 * k > n) throw ContractError("cannot place 2k distinct terminals");
  std::vector<int> ids(static_cast<std::size_t>(n));
  std::iota(ids.begin(), ids.end(), 0);
  // A uniformly random ordered sample; consecutive entries form the pairs.
  for (int i = 0; i < 2 * k; ++i) {
    const auto j = static_cast<std::size_t>(i) + static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n - i)));
    std::swap(ids[static_cast<std::size_t>(i)], ids[j]);
  }
  LinkageProblem p{Subgrid(g), {}};
  const int cols = g.col_count();
  for (int i = 0; i < k; ++i) {
    const int a = ids[static_cast<std::size_t>(2 * i)];
    const int b = ids[static_cast<std::size_t>(2 * i + 1)];
    p.pairs.push_back({{a / cols, a % cols}, {b / cols, b % cols}});
  }
  return p;
}

LinkageProblem problem_from(int d1, int d2, std::span<const int> vertex_ids,
                            std::span<const std::pair<int, int>> pairing) {
  ProductGraph g(d1, d2);
  const int cols = g.col_count();
  LinkageProblem p{Subgrid(g), {}};
  for (auto [a, b] : pairing) {
    const int u = vertex_ids[static_cast<std::size_t>(a)];
    const int v = vertex_ids[static_cast<std::size_t>(b)];
    p.pairs.push_back({{u / cols, u % cols}, {v / cols, v % cols}});
  }
  return p;
}

}  // namespace cliquelink
