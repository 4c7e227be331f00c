#include "zf/graph.hpp"

#include <algorithm>
#include <string>

#include "zf/errors.hpp"

namespace zf {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxOrder)
    throw InputError("graph order " + std::to_string(n) + " outside [0, " + std::to_string(kMaxOrder) + "]");
  adj_.resize(n);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& e : edges) g.add_edge(e.a, e.b);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw InputError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

void Graph::add_edge(int a, int b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw InputError("loop at vertex " + std::to_string(a));
  if (adj_[a].contains(b)) return;
  adj_[a].insert(b);
  adj_[b].insert(a);
  ++m_;
}

void Graph::remove_edge(int a, int b) {
  check_vertex(a);
  check_vertex(b);
  if (!adj_[a].contains(b)) throw InputError("no edge " + std::to_string(a) + "-" + std::to_string(b));
  adj_[a].erase(b);
  adj_[b].erase(a);
  --m_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int a = 0; a < n_; ++a)
    for (int b : adj_[a])
      if (a < b) out.push_back({a, b});
  return out;
}

int min_degree(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("minimum degree of the empty graph");
  int best = g.degree(0);
  for (int v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet unseen = within;
  while (!unseen.empty()) {
    VertexSet comp;
    VertexSet frontier;
    frontier.insert(unseen.first());
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet grown;
      for (int v : frontier) grown |= g.neighbors(v);
      grown &= within;
      frontier = grown - comp;
    }
    unseen -= comp;
    out.push_back(comp);
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, g.vertices());
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

VertexSet cut_vertices(const Graph& g) {
  VertexSet out;
  const VertexSet all = g.vertices();
  const auto base = connected_components(g, all).size();
  for (int v = 0; v < g.order(); ++v) {
    VertexSet rest = all;
    rest.erase(v);
    if (connected_components(g, rest).size() > base) out.insert(v);
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  std::vector<int> to_child(g.order(), -1);
  for (int v : s) {
    if (v >= g.order()) throw InputError("vertex " + std::to_string(v) + " not in graph");
    to_child[v] = static_cast<int>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  out.graph = Graph(static_cast<int>(out.to_parent.size()));
  for (int v : s)
    for (int w : g.neighbors(v) & s)
      if (v < w) out.graph.add_edge(to_child[v], to_child[w]);
  return out;
}

Graph remove_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw InputError("vertex " + std::to_string(v) + " not in graph");
  VertexSet rest = g.vertices();
  rest.erase(v);
  return induced_subgraph(g, rest).graph;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0) throw InputError("cartesian product with an empty graph");
  const int gn = g.order();
  const int hn = h.order();
  if (gn * hn > kMaxOrder) throw CapExceeded("cartesian product order exceeds " + std::to_string(kMaxOrder));
  Graph out(gn * hn);
  for (int i = 0; i < gn; ++i)
    for (int j = 0; j < hn; ++j) {
      for (int j2 : h.neighbors(j))
        if (j < j2) out.add_edge(i * hn + j, i * hn + j2);
      for (int i2 : g.neighbors(i))
        if (i < i2) out.add_edge(i * hn + j, i2 * hn + j);
    }
  return out;
}

std::optional<SrgParams> strongly_regular_params(const Graph& g) {
  const int n = g.order();
  if (n < 2) return std::nullopt;
  const int k = g.degree(0);
  for (int v = 1; v < n; ++v)
    if (g.degree(v) != k) return std::nullopt;
  std::optional<int> alpha;
  std::optional<int> beta;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const int common = (g.neighbors(a) & g.neighbors(b)).size();
      auto& slot = g.adjacent(a, b) ? alpha : beta;
      if (!slot) slot = common;
      else if (*slot != common) return std::nullopt;
    }
  if (!alpha || !beta) return std::nullopt;
  return SrgParams{n, k, *alpha, *beta};
}

Classification classify(const Graph& g) {
  Classification c;
  const int n = g.order();
  if (n == 0 || !is_connected(g)) return c;
  const int m = g.size();
  c.tree = m == n - 1;
  c.unicyclic = m == n;
  c.path = c.tree && max_degree(g) <= 2;
  c.cycle = n >= 3 && m == n && min_degree(g) == 2 && max_degree(g) == 2;
  c.complete = m == n * (n - 1) / 2;
  return c;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v) out.push_back(g.degree(v));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace zf
