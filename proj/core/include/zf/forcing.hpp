#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zf/graph.hpp"
#include "zf/vertex_set.hpp"

namespace zf {

struct ForceEvent {
  int round = 0;  // 1-based synchronous round
  int forcer = 0;
  int forced = 0;
  friend bool operator==(const ForceEvent&, const ForceEvent&) = default;
};

struct ForcingChronicle {
  std::vector<ForceEvent> events;
  // One chain per initial vertex, in ascending order of the start vertex.
  // A chain follows forcer -> forced links from its start.
  std::vector<std::vector<int>> chains;

  int rounds() const { return events.empty() ? 0 : events.back().round; }
};

struct ClosureResult {
  VertexSet black;
  ForcingChronicle chronicle;
};

// Fixpoint of the colour-change rule under the synchronous schedule: round r
// applies every force available in the state after round r-1. When several
// black vertices could force the same white vertex, the smallest forcer wins.
// Events within a round are ordered by the forced vertex.
ClosureResult closure(const Graph& g, const VertexSet& initial);

// Final black set only. Same result as closure(g, s).black but without the
// bookkeeping; used by the exact search.
VertexSet closure_set(const Graph& g, const VertexSet& initial);

bool is_zero_forcing(const Graph& g, const VertexSet& s);

struct SearchStats {
  std::uint64_t subsets_tested = 0;
  // Candidate sets rejected without running the closure because no member
  // has exactly one neighbour outside the set, so not a single force can fire.
  std::uint64_t pruned = 0;
};

struct ZResult {
  int z = 0;
  VertexSet witness;
  ForcingChronicle chronicle;
  SearchStats stats;
};

// Exact zero forcing number. Each connected component is searched
// separately: k-subsets in lexicographic order for k = max(delta, 1) upward,
// and the first forcing subset is that component's witness. `lower_hint` is
// honoured only for connected graphs and must be a sound lower bound.
ZResult zero_forcing_number(const Graph& g, std::optional<int> lower_hint = std::nullopt);

// Synchronous rounds needed for s to blacken g. Throws PreconditionError if
// s is not a zero forcing set.
int propagation_time(const Graph& g, const VertexSet& s);

// Every minimum zero forcing set, in lexicographic order. Throws CapExceeded
// when g.order() > cap.
std::vector<VertexSet> all_minimum_sets(const Graph& g, int cap = 16);

}  // namespace zf
