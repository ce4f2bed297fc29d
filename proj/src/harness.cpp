#include "cliquelink/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <charconv>
#include <sstream>
#include <thread>

#include "cliquelink/combinatorics.hpp"
#include "cliquelink/errors.hpp"
#include "cliquelink/instance_io.hpp"
#include "cliquelink/oracle.hpp"
#include "cliquelink/solver.hpp"

namespace cliquelink {

std::pair<int, int> parse_range(const std::string& text) {
  auto number = [&](std::string_view w) {
    int v = 0;
    auto [end, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (w.empty() || ec != std::errc{} || end != w.data() + w.size() || v < 0)
      throw ContractError("bad range: " + text);
    return v;
  };
  const std::string_view all(text);
  const std::size_t colon = all.find(':');
  if (colon == std::string_view::npos) {
    const int v = number(all);
    return {v, v};
  }
  const int lo = number(all.substr(0, colon));
  const int hi = number(all.substr(colon + 1));
  if (lo > hi) throw ContractError("bad range: " + text);
  return {lo, hi};
}

LinkageProblem fuzz_instance(const FuzzOptions& options, std::uint64_t index) {
  Rng rng(derive_seed(options.seed, index));
  const int d1 = rng.between(options.d1.first, options.d1.second);
  const int d2 = rng.between(options.d2.first, options.d2.second);
  int k = theorem_bound(d1, d2);
  if (options.k) k = std::min(k, *options.k);
  return random_problem(d1, d2, k, rng);
}

namespace {

struct Outcome1 {
  bool solved = false;
  bool verified = false;
  int depth = 0;
  std::string what;
};

Outcome1 run_one(const LinkageProblem& p) {
  Outcome1 o;
  try {
    SolveResult r = solve(p);
    o.solved = true;
    o.depth = r.trace.max_depth();
    VerifyReport v = verify(p, r.linkage);
    o.verified = v.ok;
    if (!v.ok) o.what = "verifier: " + v.message;
  } catch (const AlgorithmInvariantError& e) {
    o.what = std::string("invariant: ") + e.what();
  } catch (const std::exception& e) {
    o.what = std::string("error: ") + e.what();
  }
  return o;
}

}  // namespace

FuzzReport run_fuzz(const FuzzOptions& options) {
  if (options.k && *options.k < 0) throw ContractError("k must be non-negative");
  const auto start = std::chrono::steady_clock::now();
  std::vector<Outcome1> results(options.count);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t i; (i = next.fetch_add(1)) < options.count;) results[i] = run_one(fuzz_instance(options, i));
  };
  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  FuzzReport r;
  r.instances = options.count;
  for (std::uint64_t i = 0; i < options.count; ++i) {
    const Outcome1& o = results[i];
    r.solver_successes += o.solved;
    r.verifier_passes += o.verified;
    r.max_recursion_depth = std::max(r.max_recursion_depth, o.depth);
    if (!o.verified) r.failures.push_back({i, serialize_instance(fuzz_instance(options, i)), o.what});
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string format_fuzz(const FuzzReport& r) {
  std::ostringstream os;
  os << "instances " << r.instances << '\n'
     << "solver_successes " << r.solver_successes << '\n'
     << "verifier_passes " << r.verifier_passes << '\n'
     << "max_recursion_depth " << r.max_recursion_depth << '\n';
  for (const FuzzFailure& f : r.failures) {
    os << "failure " << f.index << ": " << f.what << '\n';
    std::istringstream lines(f.instance);
    for (std::string line; std::getline(lines, line);) os << "  " << line << '\n';
  }
  return os.str();
}

}  // namespace cliquelink
