#include "zf/path_cover.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "zf/errors.hpp"
#include "zf/limits.hpp"

namespace zf {
namespace {

struct InducedPath {
  std::uint32_t mask = 0;
  std::vector<int> order;
};

std::uint32_t bit(int v) { return std::uint32_t{1} << v; }

std::uint32_t low_mask(const VertexSet& s) {
  std::uint32_t m = 0;
  for (int v : s) m |= bit(v);
  return m;
}

// Grows induced paths from `seq.back()`; each path of two or more vertices is
// reached once from each end and kept only from its smaller endpoint.
void extend(const std::vector<std::uint32_t>& nbr, std::vector<int>& seq, std::uint32_t mask,
            std::vector<std::vector<InducedPath>>& by_min) {
  const int end = seq.back();
  if (seq.size() == 1 || seq.front() < end) {
    const int lowest = std::countr_zero(mask);
    by_min[lowest].push_back({mask, seq});
  }
  std::uint32_t candidates = nbr[end] & ~mask;
  while (candidates) {
    const int w = std::countr_zero(candidates);
    candidates &= candidates - 1;
    if ((nbr[w] & mask) != bit(end)) continue;
    seq.push_back(w);
    extend(nbr, seq, mask | bit(w), by_min);
    seq.pop_back();
  }
}

}  // namespace

std::optional<std::vector<int>> induced_path_order(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw InputError("induced path test on an empty set");
  if (!s.is_subset_of(g.vertices())) throw InputError("vertex set outside the graph");
  const int k = s.size();
  if (k == 1) return std::vector<int>{s.first()};
  int edges = 0;
  int start = -1;
  for (int v : s) {
    const int d = (g.neighbors(v) & s).size();
    if (d == 0 || d > 2) return std::nullopt;
    edges += d;
    if (d == 1 && start < 0) start = v;
  }
  if (edges / 2 != k - 1 || start < 0) return std::nullopt;
  std::vector<int> order{start};
  VertexSet seen{start};
  while (static_cast<int>(order.size()) < k) {
    const VertexSet step = (g.neighbors(order.back()) & s) - seen;
    if (step.empty()) return std::nullopt;  // disconnected
    order.push_back(step.first());
    seen.insert(order.back());
  }
  return order;
}

PathCoverResult path_cover_number(const Graph& g, int cap) {
  enforce_cap(g.order(), std::min(cap, 31), "path_cover_number");
  const int n = g.order();
  PathCoverResult out;
  if (n == 0) return out;

  std::vector<std::uint32_t> nbr(n);
  for (int v = 0; v < n; ++v) nbr[v] = low_mask(g.neighbors(v));
  std::vector<std::vector<InducedPath>> by_min(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> seq{v};
    extend(nbr, seq, bit(v), by_min);
  }

  const std::uint32_t full = n == 32 ? ~std::uint32_t{0} : bit(n) - 1;
  constexpr int kUnset = std::numeric_limits<int>::max();
  std::vector<int> best(std::size_t{full} + 1, kUnset);
  std::vector<int> choice(std::size_t{full} + 1, -1);
  best[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const int lowest = std::countr_zero(s);
    const auto& paths = by_min[lowest];
    for (int i = 0; i < static_cast<int>(paths.size()); ++i) {
      const auto t = paths[i].mask;
      if ((t & s) != t) continue;
      const int candidate = 1 + best[s ^ t];
      if (candidate < best[s]) {
        best[s] = candidate;
        choice[s] = i;
      }
    }
    if (s == full) break;
  }

  out.p = best[full];
  for (std::uint32_t s = full; s != 0;) {
    const auto& path = by_min[std::countr_zero(s)][choice[s]];
    out.cover.push_back(path.order);
    s ^= path.mask;
  }
  return out;
}

}  // namespace zf
