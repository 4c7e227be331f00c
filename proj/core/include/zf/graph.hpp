#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zf/vertex_set.hpp"

namespace zf {

struct Edge {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph on vertices 0..n-1 stored as adjacency bitsets.
// Disconnected graphs are allowed.
class Graph {
 public:
  Graph() = default;
  // Edgeless graph on n vertices.
  explicit Graph(int n);

  // Duplicate pairs (in either orientation) are merged; loops and
  // out-of-range endpoints throw InputError.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  int size() const { return m_; }

  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].size(); }
  bool adjacent(int a, int b) const { return adj_[a].contains(b); }
  VertexSet vertices() const { return VertexSet::range(n_); }

  // Edges with a < b in ascending order.
  std::vector<Edge> edges() const;

  void add_edge(int a, int b);
  void remove_edge(int a, int b);

  const std::string& name() const { return name_; }
  Graph& set_name(std::string name) {
    name_ = std::move(name);
    return *this;
  }

  // Structural equality; the name is a label and does not participate.
  friend bool operator==(const Graph& x, const Graph& y) { return x.n_ == y.n_ && x.adj_ == y.adj_; }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
  std::string name_;
};

// Throws PreconditionError on the empty graph.
int min_degree(const Graph& g);
int max_degree(const Graph& g);

// Components ordered by their smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
// Components of the subgraph induced by `within`.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within);
bool is_connected(const Graph& g);

VertexSet cut_vertices(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  // to_parent[i] is the vertex of the original graph that became vertex i.
  std::vector<int> to_parent;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
// g - v, relabelled so the remaining vertices keep their relative order.
Graph remove_vertex(const Graph& g, int v);

// Vertex (i, j) becomes i * |V(h)| + j.
Graph cartesian_product(const Graph& g, const Graph& h);

struct SrgParams {
  int n = 0;
  int k = 0;
  int alpha = 0;  // common neighbours of an adjacent pair
  int beta = 0;   // common neighbours of a non-adjacent pair
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

// Absent unless the graph is regular with uniform common-neighbour counts.
// Complete and edgeless graphs are reported absent since one of the two
// pair classes is empty.
std::optional<SrgParams> strongly_regular_params(const Graph& g);

struct Classification {
  bool path = false;
  bool cycle = false;
  bool complete = false;
  bool tree = false;
  bool unicyclic = false;
  friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify(const Graph& g);

std::vector<int> degree_sequence(const Graph& g);

}  // namespace zf
