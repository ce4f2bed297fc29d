#pragma once

// Vertex-disjoint A-B path systems and vertex connectivity on subgrids.
//
// Paths are computed as a unit-vertex-capacity maximum flow (each vertex split
// into an in/out pair) with breadth-first augmenting paths. A vertices can only
// be entered from the super source and B vertices only left towards the super
// sink, so every extracted path meets A exactly at its first vertex and B
// exactly at its last one. A vertex in both A and B yields a one-vertex path.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cliquelink/grid.hpp"

namespace cliquelink {

struct PathSystem {
  std::vector<Path> paths;
};

/// Up to `limit` disjoint A-B paths avoiding `forbidden`, as many as exist.
/// Paths are ordered by their first vertex.
PathSystem max_disjoint_paths(const Subgrid& s, std::span<const Vertex> from,
                              std::span<const Vertex> to, std::span<const Vertex> forbidden,
                              std::size_t limit);

/// Exactly k disjoint A-B paths avoiding `forbidden`, or nullopt when the
/// maximum flow is smaller than k. Throws ContractError on bad arguments.
std::optional<PathSystem> disjoint_paths(const Subgrid& s, std::span<const Vertex> from,
                                         std::span<const Vertex> to,
                                         std::span<const Vertex> forbidden, std::size_t k);

/// Maximum number of internally disjoint u-v paths for non-adjacent u, v.
std::size_t local_connectivity(const Subgrid& s, Vertex u, Vertex v);

/// Vertex connectivity of the induced grid; |V|-1 when it is complete.
std::size_t connectivity(const Subgrid& s);

}  // namespace cliquelink
