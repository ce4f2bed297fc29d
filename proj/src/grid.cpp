#include "cliquelink/grid.hpp"

#include <algorithm>
#include <ostream>

#include "cliquelink/errors.hpp"

namespace cliquelink {

std::string to_string(Vertex v) {
  return "(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
}

std::string to_string(const Path& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i != 0) out += ' ';
    out += to_string(path[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, Vertex v) { return os << to_string(v); }

ProductGraph::ProductGraph(int d1, int d2) : d1_(d1), d2_(d2) {
  if (d1 < 0 || d2 < 0) throw ContractError("product graph dimensions must be non-negative");
}

bool adjacent(const ProductGraph& g, Vertex u, Vertex v) {
  if (!g.contains(u)) throw InvalidVertexError("vertex " + to_string(u) + " out of range");
  if (!g.contains(v)) throw InvalidVertexError("vertex " + to_string(v) + " out of range");
  return u != v && (u.row == v.row || u.col == v.col);
}

namespace {

void normalise_labels(std::vector<int>& labels, int upper, const char* what) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.empty()) throw EmptySubgridError(std::string("subgrid has no active ") + what);
  if (labels.front() < 0 || labels.back() > upper)
    throw InvalidVertexError(std::string("subgrid ") + what + " label out of range");
}

std::vector<int> iota_labels(int count) {
  std::vector<int> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

std::size_t index_of(const std::vector<int>& labels, int label, const char* what) {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label)
    throw InvalidVertexError(std::string(what) + " " + std::to_string(label) + " is not active");
  return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace

Subgrid::Subgrid(ProductGraph base)
    : base_(base), rows_(iota_labels(base.row_count())), cols_(iota_labels(base.col_count())) {}

Subgrid::Subgrid(ProductGraph base, std::vector<int> rows, std::vector<int> cols)
    : base_(base), rows_(std::move(rows)), cols_(std::move(cols)) {
  normalise_labels(rows_, base_.d1(), "rows");
  normalise_labels(cols_, base_.d2(), "columns");
}

bool Subgrid::has_row(int label) const {
  return std::binary_search(rows_.begin(), rows_.end(), label);
}

bool Subgrid::has_col(int label) const {
  return std::binary_search(cols_.begin(), cols_.end(), label);
}

std::size_t Subgrid::row_index(int label) const { return index_of(rows_, label, "row"); }
std::size_t Subgrid::col_index(int label) const { return index_of(cols_, label, "column"); }

std::vector<Vertex> Subgrid::vertices() const {
  std::vector<Vertex> out;
  out.reserve(vertex_count());
  for (int r : rows_)
    for (int c : cols_) out.push_back({r, c});
  return out;
}

bool adjacent(const Subgrid& s, Vertex u, Vertex v) {
  if (!s.contains(u)) throw InvalidVertexError("vertex " + to_string(u) + " is not active");
  if (!s.contains(v)) throw InvalidVertexError("vertex " + to_string(v) + " is not active");
  return u != v && (u.row == v.row || u.col == v.col);
}

std::vector<Vertex> neighbors(const Subgrid& s, Vertex v) {
  if (!s.contains(v)) throw InvalidVertexError("vertex " + to_string(v) + " is not active");
  std::vector<Vertex> out;
  out.reserve(s.row_count() + s.col_count() - 2);
  for (int r : s.rows()) {
    if (r < v.row) out.push_back({r, v.col});
  }
  for (int c : s.cols()) {
    if (c != v.col) out.push_back({v.row, c});
  }
  for (int r : s.rows()) {
    if (r > v.row) out.push_back({r, v.col});
  }
  return out;
}

Subgrid restricted(const Subgrid& s, std::span<const int> remove_rows,
                   std::span<const int> remove_cols) {
  auto keep = [](std::span<const int> labels, std::span<const int> removed) {
    std::vector<int> out;
    for (int l : labels)
      if (std::find(removed.begin(), removed.end(), l) == removed.end()) out.push_back(l);
    return out;
  };
  std::vector<int> rows = keep(s.rows(), remove_rows);
  std::vector<int> cols = keep(s.cols(), remove_cols);
  if (rows.empty() || cols.empty()) throw EmptySubgridError("restriction leaves an empty subgrid");
  return Subgrid(s.base(), std::move(rows), std::move(cols));
}

Subgrid transpose(const Subgrid& s) {
  ProductGraph swapped(s.base().d2(), s.base().d1());
  return Subgrid(swapped, std::vector<int>(s.cols().begin(), s.cols().end()),
                 std::vector<int>(s.rows().begin(), s.rows().end()));
}

}  // namespace cliquelink
