// Command-line front end. Exit codes: 0 success, 1 verification failure or
// infeasible, 2 input error, 3 indeterminate.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "cliquelink/errors.hpp"
#include "cliquelink/harness.hpp"
#include "cliquelink/instance_io.hpp"
#include "cliquelink/menger.hpp"
#include "cliquelink/oracle.hpp"
#include "cliquelink/solver.hpp"

using namespace cliquelink;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_input = 2;
constexpr int exit_unknown = 3;

int cmd_solve(const std::string& path, bool trace) {
  LinkageProblem p = read_instance(path);
  const int bound = linkedness_bound(p.grid);
  if (static_cast<int>(p.k()) > bound) {
    std::cerr << "k = " << p.k() << " exceeds the guaranteed bound " << bound
              << " for this grid; use `oracle` to decide it\n";
    return exit_input;
  }
  SolveResult r = solve(p);
  std::cout << format_linkage(r.linkage);
  if (trace) std::cout << format_trace(r.trace);
  return exit_ok;
}

int cmd_verify(const std::string& instance, const std::string& linkage) {
  LinkageProblem p = read_instance(instance);
  Linkage l = read_linkage(linkage);
  VerifyReport v = verify(p, l);
  if (v.ok) {
    std::cout << "pass\n";
    return exit_ok;
  }
  std::cout << "fail: " << v.message << '\n';
  return exit_fail;
}

int cmd_oracle(const std::string& path, std::optional<std::uint64_t> budget) {
  LinkageProblem p = read_instance(path);
  Verdict v = exhaustive_solve(p, budget);
  std::cout << to_string(v.outcome) << '\n' << "# nodes " << v.nodes_explored << '\n';
  if (v.witness) std::cout << format_linkage(*v.witness);
  switch (v.outcome) {
    case Outcome::feasible: return exit_ok;
    case Outcome::infeasible: return exit_fail;
    default: return exit_unknown;
  }
}

int cmd_connectivity(int d1, int d2) {
  std::cout << connectivity(Subgrid(ProductGraph(d1, d2))) << '\n';
  return exit_ok;
}

int cmd_sharpness(int d1, int d2, std::optional<int> k, const SearchOptions& options) {
  const int kk = k.value_or((d1 + d2 + 1) / 2);
  SharpnessResult r = find_infeasible_pairing(d1, d2, kk, options);
  std::cout << "# sharpness d1=" << d1 << " d2=" << d2 << " k=" << kk << " mode="
            << (options.mode == SearchMode::exhaustive ? "exhaustive" : "sampled") << '\n'
            << "# status " << to_string(r.status) << '\n'
            << "# instances " << r.instances << '\n';
  if (r.problem) {
    std::cout << "# certificate_nodes " << r.certificate_nodes << '\n' << serialize_instance(*r.problem);
  }
  switch (r.status) {
    case SharpnessStatus::found: return exit_ok;
    case SharpnessStatus::none_exists: return exit_fail;
    default: return exit_unknown;
  }
}

int cmd_fuzz(const FuzzOptions& options) {
  FuzzReport r = run_fuzz(options);
  std::cout << format_fuzz(r);
  std::cerr << "runtime " << r.seconds << "s\n";
  return r.clean() ? exit_ok : exit_fail;
}

int cmd_cyclic_dual(int d) {
  auto [d1, d2] = cyclic_dual_params(d);
  std::cout << "(" << d1 << ", " << d2 << ", " << theorem_bound(d1, d2) << ")\n";
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Disjoint paths in products of two complete graphs"};
  app.require_subcommand(1);

  std::string instance, linkage;
  bool trace = false;
  std::optional<std::uint64_t> budget;
  int d1 = 0, d2 = 0, d = 0;
  std::optional<int> k;
  bool exhaustive = false;
  std::uint64_t seed = 1, count = 1000;
  unsigned workers = 1;
  std::string d1_range = "2:6", d2_range = "2:6";

  auto* solve_cmd = app.add_subcommand("solve", "Construct a linkage");
  solve_cmd->add_option("instance", instance)->required();
  solve_cmd->add_flag("--trace", trace, "Append the case log");

  auto* verify_cmd = app.add_subcommand("verify", "Check a linkage against an instance");
  verify_cmd->add_option("instance", instance)->required();
  verify_cmd->add_option("linkage", linkage)->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Decide an instance by exhaustive search");
  oracle_cmd->add_option("instance", instance)->required();
  oracle_cmd->add_option("--budget", budget, "Search node budget");

  auto* conn_cmd = app.add_subcommand("connectivity", "Vertex connectivity of the grid");
  conn_cmd->add_option("d1", d1)->required()->check(CLI::NonNegativeNumber);
  conn_cmd->add_option("d2", d2)->required()->check(CLI::NonNegativeNumber);

  auto* sharp_cmd = app.add_subcommand("sharpness", "Search for a pairing with no linkage");
  sharp_cmd->add_option("d1", d1)->required()->check(CLI::NonNegativeNumber);
  sharp_cmd->add_option("d2", d2)->required()->check(CLI::NonNegativeNumber);
  sharp_cmd->add_flag("--exhaustive", exhaustive, "Every terminal set up to symmetry");
  sharp_cmd->add_option("--budget", budget, "Search node budget per instance");
  sharp_cmd->add_option("--seed", seed);
  sharp_cmd->add_option("--count", count, "Samples when not exhaustive");
  sharp_cmd->add_option("--k", k, "Pairs (default floor((d1+d2+1)/2))")->check(CLI::NonNegativeNumber);
  sharp_cmd->add_option("--workers", workers)->check(CLI::PositiveNumber);

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Random instances through solver and verifier");
  fuzz_cmd->add_option("--d1", d1_range, "Range a:b");
  fuzz_cmd->add_option("--d2", d2_range, "Range a:b");
  fuzz_cmd->add_option("--count", count);
  fuzz_cmd->add_option("--seed", seed);
  fuzz_cmd->add_option("--k", k, "Pairs (default: the bound)")->check(CLI::NonNegativeNumber);
  fuzz_cmd->add_option("--workers", workers)->check(CLI::PositiveNumber);

  auto* dual_cmd = app.add_subcommand("cyclic-dual", "Grid parameters for a dual cyclic polytope");
  dual_cmd->add_option("d", d)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? exit_ok : exit_input;
  }

  try {
    if (*solve_cmd) return cmd_solve(instance, trace);
    if (*verify_cmd) return cmd_verify(instance, linkage);
    if (*oracle_cmd) return cmd_oracle(instance, budget);
    if (*conn_cmd) return cmd_connectivity(d1, d2);
    if (*sharp_cmd) {
      SearchOptions o;
      o.mode = exhaustive ? SearchMode::exhaustive : SearchMode::sampled;
      o.node_budget = budget;
      o.samples = count;
      o.seed = seed;
      o.workers = workers;
      return cmd_sharpness(d1, d2, k, o);
    }
    if (*fuzz_cmd) {
      FuzzOptions o;
      o.d1 = parse_range(d1_range);
      o.d2 = parse_range(d2_range);
      o.count = count;
      o.seed = seed;
      o.k = k;
      o.workers = workers;
      return cmd_fuzz(o);
    }
    if (*dual_cmd) return cmd_cyclic_dual(d);
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const AlgorithmInvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n' << format_trace(e.trace());
    return exit_fail;
  }
  return exit_input;
}
