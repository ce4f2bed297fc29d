#pragma once

// Product of two complete graphs K^{d1+1} x K^{d2+1}, laid out as a grid of
// d1+1 rows and d2+1 columns in which every row and every column is a clique.
// Coordinates are 0-based and ambient: a subgrid keeps the labels of the grid
// it was cut from, so paths found deep in a recursion need no translation.

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace cliquelink {

struct Vertex {
  int row = 0;
  int col = 0;

  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

using Path = std::vector<Vertex>;

std::string to_string(Vertex v);
std::string to_string(const Path& path);
std::ostream& operator<<(std::ostream& os, Vertex v);

constexpr Vertex transposed(Vertex v) { return {v.col, v.row}; }

class ProductGraph {
 public:
  ProductGraph(int d1, int d2);

  int d1() const { return d1_; }
  int d2() const { return d2_; }
  int row_count() const { return d1_ + 1; }
  int col_count() const { return d2_ + 1; }
  std::size_t vertex_count() const {
    return static_cast<std::size_t>(row_count()) * static_cast<std::size_t>(col_count());
  }
  int degree() const { return d1_ + d2_; }
  bool contains(Vertex v) const {
    return v.row >= 0 && v.row <= d1_ && v.col >= 0 && v.col <= d2_;
  }

  friend bool operator==(const ProductGraph&, const ProductGraph&) = default;

 private:
  int d1_;
  int d2_;
};

/// u ~ v iff they differ and share a row or a column.
bool adjacent(const ProductGraph& g, Vertex u, Vertex v);

/// Induced subgraph on a set of active rows and columns. Always isomorphic to
/// K^{|rows|} x K^{|cols|}. Label sets are kept sorted.
class Subgrid {
 public:
  explicit Subgrid(ProductGraph base);
  Subgrid(ProductGraph base, std::vector<int> rows, std::vector<int> cols);

  const ProductGraph& base() const { return base_; }
  std::span<const int> rows() const { return rows_; }
  std::span<const int> cols() const { return cols_; }
  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_.size(); }
  std::size_t vertex_count() const { return rows_.size() * cols_.size(); }

  bool has_row(int label) const;
  bool has_col(int label) const;
  bool contains(Vertex v) const { return has_row(v.row) && has_col(v.col); }

  /// Position of a label within the active set; throws if inactive.
  std::size_t row_index(int label) const;
  std::size_t col_index(int label) const;

  /// Active vertices in (row, col) lexicographic order.
  std::vector<Vertex> vertices() const;

  friend bool operator==(const Subgrid&, const Subgrid&) = default;

 private:
  ProductGraph base_;
  std::vector<int> rows_;
  std::vector<int> cols_;
};

bool adjacent(const Subgrid& s, Vertex u, Vertex v);

/// Active neighbours of v, lexicographically ordered.
std::vector<Vertex> neighbors(const Subgrid& s, Vertex v);

/// Drops the given row and column labels; labels not active are ignored.
Subgrid restricted(const Subgrid& s, std::span<const int> remove_rows,
                   std::span<const int> remove_cols);

/// Swaps the roles of rows and columns (and of d1, d2).
Subgrid transpose(const Subgrid& s);

}  // namespace cliquelink
