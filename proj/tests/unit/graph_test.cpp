#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "zf/errors.hpp"
#include "zf/families.hpp"
#include "zf/graph.hpp"
#include "zf/graph_io.hpp"
#include "zf/random_graphs.hpp"

using namespace zf;

TEST(VertexSet, BasicOperations) {
  VertexSet s{0, 3, 64, 127};
  EXPECT_EQ(s.size(), 4);
  EXPECT_TRUE(s.contains(64));
  EXPECT_EQ(s.first(), 0);
  EXPECT_EQ(s.next(3), 64);
  EXPECT_EQ(s.next(127), -1);
  EXPECT_EQ(s.to_vector(), (std::vector<int>{0, 3, 64, 127}));
  EXPECT_EQ(s.to_string(), "{0,3,64,127}");
  s.erase(3);
  EXPECT_FALSE(s.contains(3));
  EXPECT_EQ((VertexSet::range(5) - VertexSet{1, 2}), (VertexSet{0, 3, 4}));
  EXPECT_TRUE((VertexSet{1, 2}).is_subset_of(VertexSet::range(3)));
  EXPECT_FALSE((VertexSet{1}).intersects(VertexSet{2}));
  EXPECT_EQ(VertexSet().first(), -1);
  EXPECT_TRUE(VertexSet().empty());
  EXPECT_EQ(VertexSet::range(128).size(), 128);
}

TEST(Graph, BuildFromEdges) {
  const auto p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(p3, path_graph(3));
  const auto k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(k3, complete_graph(3));
  EXPECT_EQ(k3, cycle_graph(3));
  const auto dedup = Graph::from_edges(4, {{0, 1}, {1, 0}});
  EXPECT_EQ(dedup.size(), 1);
  EXPECT_EQ(connected_components(dedup).size(), 3u);
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), InputError);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), InputError);
  EXPECT_THROW(Graph(kMaxOrder + 1), InputError);
}

TEST(Graph, AdjacencyIsSymmetricOnRandomGraphs) {
  for (const auto& g : random_connected_library(30, 2, 12, 5)) {
    for (int v = 0; v < g.order(); ++v) {
      EXPECT_FALSE(g.adjacent(v, v));
      for (int w : g.neighbors(v)) {
        EXPECT_LT(w, g.order());
        EXPECT_TRUE(g.adjacent(w, v));
      }
    }
  }
}

TEST(Families, ShapesAndNames) {
  const auto p = petersen_graph();
  EXPECT_EQ(p.order(), 10);
  EXPECT_EQ(p.size(), 15);
  EXPECT_EQ(min_degree(p), 3);
  EXPECT_EQ(max_degree(p), 3);

  const auto b = bouquet_graph(3);
  EXPECT_EQ(b.order(), 7);
  EXPECT_EQ(b.size(), 9);
  EXPECT_EQ(min_degree(b), 2);
  EXPECT_EQ(b.degree(0), 6);

  const auto k5 = complete_graph(5);
  EXPECT_EQ(k5.size(), 10);
  for (int v = 0; v < 5; ++v) EXPECT_EQ(k5.degree(v), 4);

  EXPECT_EQ(min_degree(star_graph(3)), 1);
  EXPECT_EQ(cycle_graph(7).name(), "C_7");
  EXPECT_EQ(family(parse_family_spec("bouquet:4")), bouquet_graph(4));
}

TEST(Families, PetersenMatchesKneserGraph) {
  // K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  Graph kneser(10);
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      const auto [a, b] = pairs[i];
      const auto [c, d] = pairs[j];
      if (a != c && a != d && b != c && b != d) kneser.add_edge(i, j);
    }
  EXPECT_TRUE(oracle::isomorphic(kneser, petersen_graph()));
}

TEST(Families, SpecParsing) {
  EXPECT_EQ(parse_family_spec("P:5"), (FamilySpec{Family::path, 5}));
  EXPECT_EQ(parse_family_spec("petersen").kind, Family::petersen);
  EXPECT_EQ(to_string(FamilySpec{Family::star, 4}), "star:4");
  EXPECT_THROW(parse_family_spec("P:"), InputError);
  EXPECT_THROW(parse_family_spec("C:2"), InputError);
  EXPECT_THROW(parse_family_spec("K:x"), InputError);
  EXPECT_THROW(parse_family_spec("bouquet:0"), InputError);
  EXPECT_TRUE(is_family_spec("K:4"));
  EXPECT_FALSE(is_family_spec("graphs/k4.txt"));
}

TEST(Products, SmallCases) {
  const auto square = cartesian_product(path_graph(2), path_graph(2));
  EXPECT_TRUE(oracle::isomorphic(square, cycle_graph(4)));
  const auto prism = cartesian_product(cycle_graph(3), path_graph(2));
  EXPECT_EQ(prism.order(), 6);
  EXPECT_EQ(prism.size(), 9);
  EXPECT_EQ(min_degree(prism), 3);
  EXPECT_EQ(max_degree(prism), 3);
  const auto grid = cartesian_product(path_graph(3), path_graph(3));
  EXPECT_EQ(grid.order(), 9);
  EXPECT_EQ(grid.size(), 12);
}

TEST(Products, FlatteningAndCommutativity) {
  const auto g = cycle_graph(4);
  const auto h = path_graph(3);
  const auto gh = cartesian_product(g, h);
  const auto hg = cartesian_product(h, g);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 3; ++j)
      for (int i2 = 0; i2 < 4; ++i2)
        for (int j2 = 0; j2 < 3; ++j2) {
          const bool expected = (i == i2 && h.adjacent(j, j2)) || (j == j2 && g.adjacent(i, i2));
          EXPECT_EQ(gh.adjacent(i * 3 + j, i2 * 3 + j2), expected);
          EXPECT_EQ(hg.adjacent(j * 4 + i, j2 * 4 + i2), expected);
        }
}

TEST(Degrees, HandshakeOnRandomGraphs) {
  for (const auto& g : random_connected_library(40, 1, 15, 11)) {
    const auto seq = degree_sequence(g);
    EXPECT_EQ(std::accumulate(seq.begin(), seq.end(), 0), 2 * g.size()) << g.name();
  }
  EXPECT_EQ(min_degree(complete_graph(5)), 4);
  EXPECT_THROW(min_degree(Graph()), PreconditionError);
}

TEST(Components, Examples) {
  EXPECT_EQ(connected_components(path_graph(3)), (std::vector<VertexSet>{VertexSet{0, 1, 2}}));
  const auto two = Graph::from_edges(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(connected_components(two), (std::vector<VertexSet>{VertexSet{0, 1}, VertexSet{2, 3}}));
  EXPECT_EQ(connected_components(Graph(3)).size(), 3u);
  EXPECT_FALSE(is_connected(two));
  EXPECT_EQ(connected_components(two, VertexSet{0, 2, 3}).size(), 2u);
}

TEST(CutVertices, Examples) {
  EXPECT_EQ(cut_vertices(path_graph(3)), VertexSet{1});
  EXPECT_TRUE(cut_vertices(cycle_graph(5)).empty());
  // C(K_3, constant to v_1): v_1 is vertex 3.
  Graph g = complete_graph(3);
  Graph fg(6);
  for (const auto& e : g.edges()) {
    fg.add_edge(e.a, e.b);
    fg.add_edge(e.a + 3, e.b + 3);
  }
  for (int i = 0; i < 3; ++i) fg.add_edge(i, 3);
  EXPECT_EQ(cut_vertices(fg), VertexSet{3});
}

TEST(CutVertices, TreeCutVerticesAreInternalVertices) {
  for (const auto& t : random_tree_library(40, 3, 14, 3)) {
    VertexSet internal;
    for (int v = 0; v < t.order(); ++v)
      if (t.degree(v) > 1) internal.insert(v);
    EXPECT_EQ(cut_vertices(t), internal) << t.name();
  }
}

TEST(InducedSubgraph, Examples) {
  EXPECT_EQ(induced_subgraph(complete_graph(4), {0, 1, 2}).graph, complete_graph(3));
  const auto sub = induced_subgraph(cycle_graph(5), {0, 1, 2});
  EXPECT_EQ(sub.graph, path_graph(3));
  EXPECT_EQ(sub.to_parent, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(induced_subgraph(petersen_graph(), {}).graph.order(), 0);
  for (const auto& g : random_connected_library(20, 1, 12, 8)) EXPECT_EQ(induced_subgraph(g, g.vertices()).graph, g);
  EXPECT_EQ(remove_vertex(path_graph(4), 0), path_graph(3));
}

TEST(StronglyRegular, AgreesWithPairwiseOracle) {
  EXPECT_EQ(strongly_regular_params(petersen_graph()), (SrgParams{10, 3, 0, 1}));
  EXPECT_EQ(oracle::srg_by_pairs(petersen_graph()), (oracle::Srg{10, 3, 0, 1}));
  EXPECT_EQ(strongly_regular_params(cycle_graph(5)), (SrgParams{5, 2, 0, 1}));
  EXPECT_EQ(oracle::srg_by_pairs(cycle_graph(5)), (oracle::Srg{5, 2, 0, 1}));
  EXPECT_FALSE(strongly_regular_params(path_graph(4)));
  EXPECT_FALSE(strongly_regular_params(complete_graph(5)));
  EXPECT_FALSE(strongly_regular_params(Graph(4)));
  const auto k33 = Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  EXPECT_EQ(strongly_regular_params(k33), (SrgParams{6, 3, 0, 3}));
  for (const auto& g : random_connected_library(60, 3, 10, 21)) {
    const auto got = strongly_regular_params(g);
    const auto want = oracle::srg_by_pairs(g);
    ASSERT_EQ(got.has_value(), want.has_value()) << g.name();
    if (got) EXPECT_EQ((oracle::Srg{got->n, got->k, got->alpha, got->beta}), *want);
  }
}

TEST(StronglyRegular, ParameterIdentity) {
  for (const auto& g : {petersen_graph(), cycle_graph(5), cycle_graph(4),
                        cartesian_product(complete_graph(3), complete_graph(3))}) {
    const auto p = strongly_regular_params(g);
    ASSERT_TRUE(p);
    EXPECT_EQ(p->k * (p->k - p->alpha - 1), (p->n - p->k - 1) * p->beta);
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(path_graph(6)), (Classification{.path = true, .tree = true}));
  EXPECT_EQ(classify(cycle_graph(7)), (Classification{.cycle = true, .unicyclic = true}));
  EXPECT_EQ(classify(bouquet_graph(2)), Classification{});
  EXPECT_TRUE(classify(complete_graph(4)).complete);
  EXPECT_TRUE(classify(complete_graph(3)).cycle);
  EXPECT_TRUE(classify(star_graph(4)).tree);
  for (const auto& g : random_unicyclic_library(20, 3, 10, 2)) EXPECT_TRUE(classify(g).unicyclic);
}

TEST(RandomGraphs, Deterministic) {
  const auto a = random_connected_library(10, 2, 9, 42);
  const auto b = random_connected_library(10, 2, 9, 42);
  EXPECT_EQ(a, b);
  for (const auto& g : a) {
    EXPECT_TRUE(is_connected(g));
    EXPECT_GE(g.order(), 2);
    EXPECT_LE(g.order(), 9);
  }
  for (const auto& t : random_tree_library(20, 1, 9, 1)) {
    EXPECT_TRUE(is_connected(t));
    EXPECT_EQ(t.size(), t.order() - 1);
  }
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const int x = uniform_below(rng, 7);
    EXPECT_GE(x, 0);
    EXPECT_LT(x, 7);
  }
}

TEST(EdgeList, RoundTrip) {
  std::stringstream buffer;
  write_edge_list(buffer, petersen_graph());
  EXPECT_EQ(read_edge_list(buffer), petersen_graph());
}

TEST(EdgeList, CommentsAndErrors) {
  std::istringstream ok("# header\n3 2\n0 1\n\n# middle\n1 2\n");
  EXPECT_EQ(read_edge_list(ok), path_graph(3));
  std::istringstream short_list("3 2\n0 1\n");
  EXPECT_THROW(read_edge_list(short_list), InputError);
  std::istringstream bad_vertex("3 1\n0 5\n");
  EXPECT_THROW(read_edge_list(bad_vertex), InputError);
  std::istringstream junk("2 1\n0 1 x\n");
  EXPECT_THROW(read_edge_list(junk), InputError);
  std::istringstream trailing("2 1\n0 1\n1 0\n");
  EXPECT_THROW(read_edge_list(trailing), InputError);
  EXPECT_THROW(read_edge_list_file("/nonexistent/graph.txt"), InputError);
}
