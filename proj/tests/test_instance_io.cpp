#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "cliquelink/combinatorics.hpp"
#include "cliquelink/instance_io.hpp"
#include "cliquelink/solver.hpp"

using namespace cliquelink;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse an instance") {
  LinkageProblem p = parse_instance("# two pairs\nversion 1\ndims 2 3\npair 0 0 2 1   # first\n\npair 1 3 0 2\n");
  CHECK(p.grid.base() == ProductGraph(2, 3));
  REQUIRE(p.k() == 2);
  CHECK(p.pairs[0] == TerminalPair{{0, 0}, {2, 1}});
  CHECK(p.pairs[1] == TerminalPair{{1, 3}, {0, 2}});
}

TEST_CASE("semicolons separate lines") {
  LinkageProblem p = parse_instance("dims 0 3; pair 0 0 0 1");
  CHECK(p.k() == 1);
  CHECK(parse_instance("dims 1 1").k() == 0);
}

TEST_CASE("malformed instances") {
  CHECK(error_of("dims 2 2\npair 0 0 1 1\npair 1 1 2 2\n").find("terminals not distinct: (1,1)") != std::string::npos);
  CHECK(error_of("dims 2 2\npair 0 0 3 1\n").rfind("line 2:", 0) == 0);
  CHECK(error_of("pair 0 0 1 1\n").rfind("line 1:", 0) == 0);
  CHECK(error_of("dims 2\n").rfind("line 1:", 0) == 0);
  CHECK(error_of("dims 2 2\ndims 2 2\n").rfind("line 2:", 0) == 0);
  CHECK(error_of("dims 2 x\n") != "");
  CHECK(error_of("dims -1 2\n") != "");
  CHECK(error_of("version 2\ndims 1 1\n") != "");
  CHECK(error_of("dims 1 1\nversion 1\n") != "");
  CHECK(error_of("edge 0 0 1 1\n") != "");
  CHECK(error_of("# nothing\n") == "missing dims line");
  CHECK_THROWS_AS(read_instance("/nonexistent/instance.txt"), InputError);
}

TEST_CASE("instances round-trip") {
  Rng rng(6);
  for (int i = 0; i < 200; ++i) {
    const int d1 = rng.between(0, 6), d2 = rng.between(0, 6);
    LinkageProblem p = random_problem(d1, d2, rng.between(0, theorem_bound(d1, d2)), rng);
    const std::string text = serialize_instance(p);
    LinkageProblem q = parse_instance(text);
    CHECK(q.grid == p.grid);
    CHECK(q.pairs == p.pairs);
    CHECK(serialize_instance(q) == text);
  }
}

TEST_CASE("linkage text") {
  Linkage l{{{{0, 0}, {0, 1}}, {{1, 0}, {1, 2}, {2, 2}}}};
  const std::string text = format_linkage(l);
  CHECK(text == "path 1: (0,0) (0,1)\npath 2: (1,0) (1,2) (2,2)\n");
  CHECK(parse_linkage(text) == l);
  CHECK(parse_linkage("# trace\n" + text + "# more\n") == l);
  CHECK(parse_linkage("path 2: (1,0) (1,2) (2,2)\npath 1: (0,0) (0,1)\n") == l);
  CHECK_THROWS_AS(parse_linkage("path 1: (0,0) (0,1\n"), InputError);
  CHECK_THROWS_AS(parse_linkage("path 2: (0,0)\n"), InputError);
  CHECK_THROWS_AS(parse_linkage("path 1: (0,0)\npath 1: (0,1)\n"), InputError);
  CHECK_THROWS_AS(parse_linkage("route 1: (0,0)\n"), InputError);
}

TEST_CASE("solver output parses back") {
  Rng rng(10);
  for (int i = 0; i < 50; ++i) {
    LinkageProblem p = random_problem(4, 5, 4, rng);
    Linkage l = solve(p).linkage;
    CHECK(parse_linkage(format_linkage(l)) == l);
  }
}
