#include "zf/forcing.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "zf/errors.hpp"
#include "zf/limits.hpp"

namespace zf {
namespace {

void check_subset(const Graph& g, const VertexSet& s) {
  if (!s.is_subset_of(g.vertices()))
    throw InputError("vertex set " + s.to_string() + " is not inside a graph of order " + std::to_string(g.order()));
}

// Visits k-subsets of {0..n-1} in lexicographic order until `visit` returns
// true. Returns whether it did.
template <typename Visit>
bool for_each_k_subset(int n, int k, Visit&& visit) {
  if (k > n) return false;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    VertexSet s;
    for (int v : idx) s.insert(v);
    if (visit(s)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool can_start(const Graph& g, const VertexSet& s) {
  for (int v : s)
    if ((g.neighbors(v) - s).size() == 1) return true;
  return false;
}

struct ComponentResult {
  int z = 0;
  VertexSet witness;
};

ComponentResult search_connected(const Graph& g, int start_k, SearchStats& stats) {
  const int n = g.order();
  const VertexSet all = g.vertices();
  ComponentResult result;
  for (int k = std::max(start_k, 1); k <= n; ++k) {
    const bool found = for_each_k_subset(n, k, [&](const VertexSet& s) {
      if (s != all && !can_start(g, s)) {
        ++stats.pruned;
        return false;
      }
      ++stats.subsets_tested;
      if (closure_set(g, s) == all) {
        result.witness = s;
        return true;
      }
      return false;
    });
    if (found) {
      result.z = k;
      return result;
    }
  }
  // Unreachable for n >= 1: the full vertex set always forces.
  throw PreconditionError("zero forcing search exhausted without a witness");
}

}  // namespace

ClosureResult closure(const Graph& g, const VertexSet& initial) {
  check_subset(g, initial);
  ClosureResult out;
  out.black = initial;
  std::vector<int> next(g.order(), -1);
  for (int round = 1;; ++round) {
    std::vector<int> forcer_of(g.order(), -1);
    VertexSet forced;
    for (int v : out.black) {
      const VertexSet white = g.neighbors(v) - out.black;
      if (white.size() != 1) continue;
      const int w = white.first();
      if (!forced.contains(w)) {
        forced.insert(w);
        forcer_of[w] = v;
      }
    }
    if (forced.empty()) break;
    for (int w : forced) {
      out.chronicle.events.push_back({round, forcer_of[w], w});
      next[forcer_of[w]] = w;
    }
    out.black |= forced;
  }
  for (int s : initial) {
    std::vector<int> chain{s};
    for (int v = next[s]; v >= 0; v = next[v]) chain.push_back(v);
    out.chronicle.chains.push_back(std::move(chain));
  }
  return out;
}

VertexSet closure_set(const Graph& g, const VertexSet& initial) {
  VertexSet black = initial;
  VertexSet pending = initial;
  while (!pending.empty()) {
    const int v = pending.first();
    pending.erase(v);
    const VertexSet white = g.neighbors(v) - black;
    if (white.size() != 1) continue;
    const int w = white.first();
    black.insert(w);
    pending |= g.neighbors(w) & black;
    pending.insert(w);
  }
  return black;
}

bool is_zero_forcing(const Graph& g, const VertexSet& s) {
  check_subset(g, s);
  return closure_set(g, s) == g.vertices();
}

ZResult zero_forcing_number(const Graph& g, std::optional<int> lower_hint) {
  ZResult out;
  if (g.order() == 0) return out;
  const auto components = connected_components(g);
  const bool single = components.size() == 1;
  for (const auto& comp : components) {
    const auto sub = induced_subgraph(g, comp);
    int start = min_degree(sub.graph);
    if (single && lower_hint) start = std::max(start, *lower_hint);
    const auto part = search_connected(sub.graph, start, out.stats);
    out.z += part.z;
    for (int v : part.witness) out.witness.insert(sub.to_parent[v]);
  }
  out.chronicle = closure(g, out.witness).chronicle;
  return out;
}

int propagation_time(const Graph& g, const VertexSet& s) {
  auto result = closure(g, s);
  if (result.black != g.vertices()) throw PreconditionError("set " + s.to_string() + " is not a zero forcing set");
  return result.chronicle.rounds();
}

std::vector<VertexSet> all_minimum_sets(const Graph& g, int cap) {
  enforce_cap(g.order(), cap, "all_minimum_sets");
  const int z = zero_forcing_number(g).z;
  std::vector<VertexSet> out;
  if (z == 0) {
    out.emplace_back();
    return out;
  }
  const VertexSet all = g.vertices();
  for_each_k_subset(g.order(), z, [&](const VertexSet& s) {
    if (closure_set(g, s) == all) out.push_back(s);
    return false;
  });
  return out;
}

}  // namespace zf
