#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cliquelink/combinatorics.hpp"
#include "cliquelink/errors.hpp"
#include "cliquelink/oracle.hpp"
#include "cliquelink/solver.hpp"
#include "support.hpp"

using namespace cliquelink;

namespace {

LinkageProblem make(int d1, int d2, std::vector<TerminalPair> pairs) {
  return {Subgrid(ProductGraph(d1, d2)), std::move(pairs)};
}

void check_valid(const LinkageProblem& p, const Linkage& l) {
  VerifyReport r = verify(p, l);
  INFO(r.message);
  CHECK(r.ok);
}

const CaseRecord* first_of(const SolverTrace& t, CaseKind kind) {
  for (const CaseRecord& r : t.records)
    if (r.kind == kind) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("a single row is a clique: every pair takes its edge") {
  auto p = make(0, 3, {{{0, 0}, {0, 1}}, {{0, 2}, {0, 3}}});
  SolveResult r = solve(p);
  CHECK(r.linkage.paths == std::vector<Path>{{{0, 0}, {0, 1}}, {{0, 2}, {0, 3}}});

  auto crossing = make(0, 3, {{{0, 0}, {0, 2}}, {{0, 1}, {0, 3}}});
  CHECK(solve_base_rows(crossing).paths == std::vector<Path>{{{0, 0}, {0, 2}}, {{0, 1}, {0, 3}}});
  CHECK(solve_base_rows(make(0, 1, {{{0, 1}, {0, 0}}})).paths == std::vector<Path>{{{0, 1}, {0, 0}}});
  check_valid(make(0, 4, {{{0, 0}, {0, 1}}, {{0, 2}, {0, 3}}}),
              solve_base_rows(make(0, 4, {{{0, 0}, {0, 1}}, {{0, 2}, {0, 3}}})));
}

TEST_CASE("two rows") {
  auto p = make(1, 2, {{{0, 0}, {1, 1}}});
  SolveResult r = solve_base_two_rows(p);
  check_valid(p, r.linkage);

  // Everything already in the second row: no stubs needed.
  auto q = make(1, 4, {{{1, 0}, {1, 2}}, {{1, 1}, {1, 3}}});
  SolveResult rq = solve_base_two_rows(q);
  CHECK(rq.linkage.paths == std::vector<Path>{{{1, 0}, {1, 2}}, {{1, 1}, {1, 3}}});

  auto top = make(1, 4, {{{0, 0}, {0, 2}}, {{0, 1}, {0, 3}}});
  check_valid(top, solve_base_two_rows(top).linkage);
  check_valid(top, solve(top).linkage);
  CHECK(exhaustive_solve(top).feasible());
}

TEST_CASE("case 1: the pair shares a column") {
  auto p = make(2, 2, {{{0, 0}, {2, 0}}, {{1, 1}, {0, 2}}});
  SolveResult r = case1_pair_in_line(p, 0);
  check_valid(p, r.linkage);
  CHECK(r.linkage.paths[0] == Path{{0, 0}, {2, 0}});
  const CaseRecord* rec = first_of(r.trace, CaseKind::case1);
  REQUIRE(rec);
  CHECK(rec->moved.empty());
  CHECK(rec->sub_cols == std::vector<int>{1, 2});
  CHECK(exhaustive_solve(p).feasible());
  check_valid(p, solve(p).linkage);

  auto q = make(2, 3, {{{0, 0}, {1, 0}}, {{2, 0}, {0, 3}}});
  SolveResult rq = case1_pair_in_line(q, 0);
  check_valid(q, rq.linkage);
  const CaseRecord* recq = first_of(rq.trace, CaseKind::case1);
  REQUIRE(recq);
  CHECK(recq->moved == std::vector<Vertex>{{2, 0}});
  REQUIRE(recq->stubs.size() == 1);
  CHECK(recq->stubs[0].path.front() == Vertex{2, 0});

  // A pair in one row goes through the transpose.
  auto row = make(2, 3, {{{1, 0}, {1, 3}}, {{0, 1}, {2, 2}}});
  SolveResult rr = case1_pair_in_line(row, 0);
  check_valid(row, rr.linkage);
  CHECK(rr.trace.records.front().kind == CaseKind::transpose);
  CHECK_THROWS_AS(case1_pair_in_line(row, 1), ContractError);
}

TEST_CASE("case 1 target count at d1 = d2 = 2") {
  // |C1 bar| = (d1+1) d2 = 6 > |U| + |W| = 2
  CHECK(counting_inequality(3, 3));
  CHECK(3 * 2 > 2);
}

TEST_CASE("finding L1 inside the two columns") {
  auto p = make(3, 3, {{{1, 0}, {2, 1}}});
  L1Choice c = find_l1(p, 0);
  CHECK(c.path == Path{{1, 0}, {1, 1}, {2, 1}});
  CHECK(c.row == 1);

  auto blocked = make(3, 3, {{{1, 0}, {2, 1}}, {{1, 1}, {2, 0}}});
  L1Choice b = find_l1(blocked, 0);
  CHECK(b.path.size() == 4);
  CHECK((b.row == 0 || b.row == 3));
  CHECK(b.path == Path{{1, 0}, {0, 0}, {0, 1}, {2, 1}});
}

TEST_CASE("L1 has d1 + 1 internally disjoint candidates") {
  // With d1 = 2 and every other candidate blocked the last one must be used.
  auto p = make(2, 3, {{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}});
  L1Choice c = find_l1(p, 0);
  CHECK(c.path == Path{{0, 0}, {2, 0}, {2, 1}, {1, 1}});
}

TEST_CASE("case 2 subcases") {
  auto full = make(2, 3, {{{0, 0}, {1, 1}}, {{2, 2}, {0, 3}}});
  SolveResult r = case2_solve(full, 0);
  check_valid(full, r.linkage);
  const CaseRecord* rec = first_of(r.trace, CaseKind::case2);
  REQUIRE(rec);
  REQUIRE(rec->alpha);
  CHECK(*rec->alpha == 2);
  CHECK(rec->sub_cols == std::vector<int>{2, 3});

  auto one = make(2, 3, {{{1, 0}, {2, 1}}, {{0, 0}, {0, 3}}});
  SolveResult r1 = case2_solve(one, 0);
  check_valid(one, r1.linkage);
  const CaseRecord* rec1 = first_of(r1.trace, CaseKind::case2);
  REQUIRE(rec1);
  CHECK(*rec1->alpha == 1);
  REQUIRE(rec1->stubs.size() == 1);
  CHECK(rec1->stubs[0].terminal == Vertex{0, 0});
  CHECK(rec1->stubs[0].path.back().col >= 2);

  // The alpha = d1-1 guard at d1 = d2 = 2: (d1-1)(d2-1) = 1 > d1+d2-4 = 0.
  CHECK(counting_inequality(1, 2));
}

TEST_CASE("the alpha = d1-1 route may land on its partner") {
  // s2 = (2,0) reaches t2 = (2,2) directly; pair 2 is finished on the spot.
  auto p = make(2, 4, {{{0, 0}, {1, 1}}, {{2, 0}, {2, 2}}, {{0, 3}, {1, 4}}});
  SolveResult r = case2_solve(p, 0);
  check_valid(p, r.linkage);
  const CaseRecord* rec = first_of(r.trace, CaseKind::case2);
  REQUIRE(rec);
  CHECK(*rec->alpha == 1);
}

TEST_CASE("counting inequality holds for x, y >= 2") {
  for (long x = 2; x <= 100; ++x)
    for (long y = 2; y <= 100; ++y) CHECK(counting_inequality(x, y));
}

TEST_CASE("claim1_matching") {
  ProductGraph g(4, 3);
  Subgrid b(g, {1, 2, 3, 4}, {0, 1});
  std::vector<Vertex> occupied{{1, 0}, {1, 1}, {2, 0}, {2, 1}};
  auto m = claim1_matching(b, occupied, {});
  CHECK(m == std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});
  std::vector<Vertex> single{{1, 0}, {2, 1}};
  CHECK(claim1_matching(b, single, {}).empty());
  // n = 4 ordinary terminals, m = 2: d1' - n + m = 2 >= m.
  CHECK(4 - 4 + 2 >= 2);
  std::vector<Vertex> too_many{{1, 0}, {1, 1}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {4, 0}};
  CHECK_THROWS_AS(claim1_matching(b, too_many, {}), ContractError);
}

TEST_CASE("claim2_route") {
  ProductGraph g(3, 3);
  std::vector<int> rows{0, 1, 2, 3};
  Subgrid b(g, rows, {0, 1});
  Subgrid a(g, rows, {2, 3});
  std::vector<Vertex> lone{{1, 0}};
  Claim2Routing r = claim2_route(b, a, lone, {});
  REQUIRE(r.system.paths.size() == 1);
  CHECK(r.system.paths[0] == Path{{1, 0}, {1, 2}});

  std::vector<Vertex> doubled{{2, 0}, {2, 1}};
  Claim2Routing d = claim2_route(b, a, doubled, {});
  REQUIRE(d.system.paths.size() == 2);
  std::size_t detours = 0;
  for (const Path& p : d.system.paths) detours += p.size() == 3;
  CHECK(detours == 1);
  CHECK(d.matching == std::vector<std::pair<int, int>>{{2, 0}});
}

TEST_CASE("row matching and routing on random occupancies") {
  Rng rng(2024);
  for (int i = 0; i < 1000; ++i) {
    testsupport::ClaimCase c = testsupport::random_claim_case(rng, 9);
    auto m = claim1_matching(c.b, c.occupied, c.special);
    CHECK(testsupport::check_claim1(c, m) == "");
    Claim2Routing r = claim2_route(c.b, c.a, c.occupied, c.special);
    CHECK(testsupport::check_claim2(c, r) == "");
    CHECK(r.matching == m);
  }
}

TEST_CASE("every instance with d1 + d2 <= 5 at the bound is solved") {
  std::size_t count = 0;
  for (int d1 = 0; d1 <= 5; ++d1)
    for (int d2 = 0; d1 + d2 <= 5; ++d2)
      testsupport::for_each_problem(d1, d2, theorem_bound(d1, d2), [&](const LinkageProblem& p) {
        SolveResult r = solve(p);
        VerifyReport v = verify(p, r.linkage);
        if (!v.ok) FAIL_CHECK(v.message);
        if (replay(p, r.trace) != r.linkage) FAIL_CHECK("replay differs");
        ++count;
      });
  CHECK(count > 0);
}

TEST_CASE("fewer pairs than the bound") {
  for (int d1 = 0; d1 <= 4; ++d1)
    for (int d2 = 0; d1 + d2 <= 5; ++d2)
      for (int k = 0; k < theorem_bound(d1, d2); ++k)
        testsupport::for_each_problem(d1, d2, k, [&](const LinkageProblem& p) {
          VerifyReport v = verify(p, solve(p).linkage);
          if (!v.ok) FAIL_CHECK(v.message);
        });
  Rng rng(9);
  for (int i = 0; i < 2000; ++i) {
    const int d1 = rng.between(2, 9), d2 = rng.between(2, 9);
    LinkageProblem p = random_problem(d1, d2, rng.between(0, theorem_bound(d1, d2)), rng);
    VerifyReport v = verify(p, solve(p).linkage);
    if (!v.ok) FAIL_CHECK(v.message);
  }
}

TEST_CASE("solving is a pure function of the problem") {
  Rng rng(77);
  for (int i = 0; i < 200; ++i) {
    const int d1 = rng.between(2, 7), d2 = rng.between(2, 7);
    LinkageProblem p = random_problem(d1, d2, theorem_bound(d1, d2), rng);
    SolveResult a = solve(p), b = solve(p);
    CHECK(a.linkage == b.linkage);
    CHECK(format_trace(a.trace) == format_trace(b.trace));
    CHECK(replay(p, a.trace) == a.linkage);
  }
}

TEST_CASE("trace records stay within the recursion budget") {
  Rng rng(4);
  for (int i = 0; i < 300; ++i) {
    const int d1 = rng.between(2, 8), d2 = rng.between(2, 8);
    LinkageProblem p = random_problem(d1, d2, theorem_bound(d1, d2), rng);
    SolveResult r = solve(p);
    for (const CaseRecord& rec : r.trace.records) {
      if (rec.kind != CaseKind::case1 && rec.kind != CaseKind::case2) continue;
      // Stubs meet the recursion grid only at their last vertex.
      // Records below a transpose use swapped coordinates; a square base holds both.
      Subgrid rest(ProductGraph(std::max(d1, d2), std::max(d1, d2)), rec.sub_rows, rec.sub_cols);
      for (const Stub& s : rec.stubs) {
        CHECK(rest.contains(s.path.back()));
        for (std::size_t j = 0; j + 1 < s.path.size(); ++j) CHECK_FALSE(rest.contains(s.path[j]));
      }
      CHECK(rec.sub_cols.size() + (rec.kind == CaseKind::case1 ? 1 : 2) == rec.cols.size());
    }
  }
}

TEST_CASE("contract errors") {
  CHECK_THROWS_AS(solve(make(1, 1, {{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}})), ContractError);
  CHECK_THROWS_AS(solve(make(2, 2, {{{0, 0}, {1, 1}}, {{1, 1}, {2, 2}}})), ContractError);
  CHECK_THROWS_AS(solve(make(2, 2, {{{0, 0}, {3, 1}}})), InvalidVertexError);
  CHECK(solve(make(2, 2, {})).linkage.paths.empty());
  CHECK_THROWS_AS(cyclic_dual_params(1), ContractError);
}

TEST_CASE("dual cyclic polytopes") {
  CHECK(cyclic_dual_params(4) == std::pair{2, 2});
  CHECK(cyclic_dual_params(5) == std::pair{2, 3});
  CHECK(cyclic_dual_params(7) == std::pair{3, 4});
  CHECK(cyclic_dual_params(2) == std::pair{1, 1});
}
