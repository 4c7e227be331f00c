#pragma once

#include <optional>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

struct PathCoverResult {
  int p = 0;
  // Disjoint vertex sequences, each inducing a path; together they cover V.
  std::vector<std::vector<int>> cover;
};

// Ordering of s along the path it induces, starting at the smaller endpoint,
// or nullopt if the induced subgraph is not a path. Throws InputError on an
// empty set.
std::optional<std::vector<int>> induced_path_order(const Graph& g, const VertexSet& s);

// Minimum number of vertex-disjoint induced paths covering V(g). Subset DP:
// best(S) = 1 + min best(S \ T) over induced paths T inside S that contain
// min(S). Throws CapExceeded when g.order() > cap.
PathCoverResult path_cover_number(const Graph& g, int cap = 16);

}  // namespace zf
