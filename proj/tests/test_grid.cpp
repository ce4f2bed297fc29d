#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cliquelink/errors.hpp"
#include "cliquelink/grid.hpp"

using namespace cliquelink;

TEST_CASE("product graph sizes") {
  ProductGraph g(2, 3);
  CHECK(g.row_count() == 3);
  CHECK(g.col_count() == 4);
  CHECK(g.vertex_count() == 12);
  CHECK(g.degree() == 5);
  CHECK(g.contains({2, 3}));
  CHECK_FALSE(g.contains({3, 0}));
  CHECK_FALSE(g.contains({0, -1}));
}

TEST_CASE("adjacency means sharing a row or a column") {
  ProductGraph g(2, 2);
  CHECK(adjacent(g, {0, 0}, {0, 2}));
  CHECK(adjacent(g, {0, 1}, {2, 1}));
  CHECK_FALSE(adjacent(g, {0, 0}, {1, 1}));
  CHECK_FALSE(adjacent(g, {1, 1}, {1, 1}));
  CHECK_THROWS_AS(adjacent(g, {0, 0}, {3, 0}), InvalidVertexError);
}

TEST_CASE("degree equals d1 + d2 everywhere") {
  for (int d1 = 0; d1 <= 4; ++d1)
    for (int d2 = 0; d2 <= 4; ++d2) {
      Subgrid s{ProductGraph(d1, d2)};
      for (Vertex v : s.vertices()) CHECK(neighbors(s, v).size() == static_cast<std::size_t>(d1 + d2));
    }
}

TEST_CASE("neighbours come in lexicographic order") {
  Subgrid s{ProductGraph(2, 2)};
  std::vector<Vertex> expect{{0, 1}, {1, 0}, {1, 2}, {2, 1}};
  CHECK(neighbors(s, {1, 1}) == expect);
}

TEST_CASE("subgrids keep sorted labels and reject bad input") {
  ProductGraph g(3, 3);
  Subgrid s(g, {3, 1, 1}, {2, 0});
  CHECK(std::vector<int>(s.rows().begin(), s.rows().end()) == std::vector<int>{1, 3});
  CHECK(std::vector<int>(s.cols().begin(), s.cols().end()) == std::vector<int>{0, 2});
  CHECK(s.vertex_count() == 4);
  CHECK(s.contains({3, 2}));
  CHECK_FALSE(s.contains({2, 2}));
  CHECK(s.row_index(3) == 1);
  CHECK_THROWS_AS(s.row_index(2), InvalidVertexError);
  CHECK_THROWS_AS(Subgrid(g, {}, {0}), EmptySubgridError);
  CHECK_THROWS_AS(Subgrid(g, {4}, {0}), InvalidVertexError);
  CHECK(adjacent(s, {1, 0}, {3, 0}));
  CHECK_THROWS(adjacent(s, {2, 0}, {3, 0}));
}

TEST_CASE("neighbours stay inside the subgrid") {
  Subgrid s(ProductGraph(3, 3), {0, 2}, {1, 3});
  std::vector<Vertex> expect{{0, 3}, {2, 1}};
  CHECK(neighbors(s, {0, 1}) == expect);
}

TEST_CASE("restriction and transposition") {
  Subgrid full{ProductGraph(2, 3)};
  std::vector<int> rows{1}, cols{0, 3};
  Subgrid r = restricted(full, rows, cols);
  CHECK(r.row_count() == 2);
  CHECK(r.col_count() == 2);
  CHECK_FALSE(r.contains({1, 1}));
  std::vector<int> all{0, 1, 2};
  CHECK_THROWS_AS(restricted(full, all, {}), EmptySubgridError);

  Subgrid t = transpose(r);
  CHECK(t.base() == ProductGraph(3, 2));
  CHECK(t.contains(transposed({2, 2})));
  CHECK(transpose(t) == r);
}

TEST_CASE("vertex formatting") {
  CHECK(to_string(Vertex{3, 14}) == "(3,14)");
  CHECK(to_string(Path{{0, 0}, {0, 1}}) == "(0,0) (0,1)");
}
