#include "zf/random_graphs.hpp"

#include <string>
#include <vector>

#include "zf/errors.hpp"

namespace zf {

int uniform_below(Rng& rng, int bound) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Graph random_tree(int n, Rng& rng) {
  if (n < 1) throw InputError("random tree needs n >= 1");
  Graph g(n);
  if (n == 1) return g;
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  std::vector<int> code(n - 2);
  for (auto& c : code) c = uniform_below(rng, n);
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  for (int c : code) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    g.add_edge(leaf, c);
    --degree[leaf];
    --degree[c];
  }
  int u = -1;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) {
      if (u < 0) u = v;
      else g.add_edge(u, v);
    }
  return g;
}

Graph random_connected(int n, double extra_edge_probability, Rng& rng) {
  Graph g = random_tree(n, rng);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      // Draw for every pair so the stream does not depend on the tree shape.
      const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (!g.adjacent(a, b) && draw < extra_edge_probability) g.add_edge(a, b);
    }
  return g;
}

Graph random_unicyclic(int n, Rng& rng) {
  if (n < 3) throw InputError("unicyclic graph needs n >= 3");
  Graph g = random_tree(n, rng);
  std::vector<Edge> missing;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!g.adjacent(a, b)) missing.push_back({a, b});
  const auto& e = missing[uniform_below(rng, static_cast<int>(missing.size()))];
  g.add_edge(e.a, e.b);
  return g;
}

namespace {

template <typename Make>
std::vector<Graph> library(const char* kind, int count, int min_n, int max_n, std::uint64_t seed, Make&& make) {
  if (min_n > max_n) throw InputError("empty order range for random library");
  std::vector<Graph> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const int n = min_n + uniform_below(rng, max_n - min_n + 1);
    Graph g = make(n, rng);
    g.set_name(std::string(kind) + "#" + std::to_string(i));
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

std::vector<Graph> random_connected_library(int count, int min_n, int max_n, std::uint64_t seed) {
  return library("connected", count, min_n, max_n, seed, [](int n, Rng& rng) {
    const double p = 0.1 + 0.5 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    return random_connected(n, p, rng);
  });
}

std::vector<Graph> random_tree_library(int count, int min_n, int max_n, std::uint64_t seed) {
  return library("tree", count, min_n, max_n, seed, [](int n, Rng& rng) { return random_tree(n, rng); });
}

std::vector<Graph> random_unicyclic_library(int count, int min_n, int max_n, std::uint64_t seed) {
  if (min_n < 3) throw InputError("unicyclic graphs need n >= 3");
  return library("unicyclic", count, min_n, max_n, seed, [](int n, Rng& rng) { return random_unicyclic(n, rng); });
}

}  // namespace zf
