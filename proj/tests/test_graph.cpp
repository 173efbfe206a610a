#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "snortlab/graph.hpp"
#include "snortlab/graph6.hpp"

#include "test_util.hpp"

using namespace snortlab;

TEST_CASE("named constructors use the documented numbering") {
  const Graph p3 = path_graph(3);
  CHECK(p3.order() == 3);
  CHECK(p3.edge_count() == 2);
  CHECK(p3.has_edge(0, 1));
  CHECK(p3.has_edge(1, 2));
  CHECK_FALSE(p3.has_edge(0, 2));

  const Graph broom = broom_graph(5, 3);
  CHECK(broom.order() == 8);
  for (int v = 0; v + 1 < 5; ++v) CHECK(broom.has_edge(v, v + 1));
  for (int leaf : {5, 6, 7}) {
    CHECK(broom.degree(leaf) == 1);
    CHECK(broom.has_edge(4, leaf));
  }

  CHECK(cycle_graph(3) == complete_graph(3));
  CHECK(empty_graph(0).order() == 0);
  CHECK(broom_graph(3, 0) == path_graph(3));

  CHECK_THROWS_AS(Graph(65), std::length_error);
  CHECK_THROWS_AS(broom_graph(60, 10), std::length_error);
  CHECK_THROWS_AS(broom_graph(0, 2), std::invalid_argument);
}

TEST_CASE("complement flips non-edges") {
  CHECK(complement(complete_graph(4)) == empty_graph(4));

  const Graph cp3 = complement(path_graph(3));
  CHECK(cp3.edge_count() == 1);
  CHECK(cp3.has_edge(0, 2));  // the two former leaves

  std::mt19937_64 rng(7);
  for (int round = 0; round < 500; ++round) {
    const int n = static_cast<int>(rng() % 11);
    const Graph g = testutil::random_graph(rng, n);
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("induced subgraphs relabel ascending") {
  const Graph c4 = cycle_graph(4);
  const InducedSubgraph sub = induced_subgraph(c4, vertex_bit(0) | vertex_bit(1) | vertex_bit(2));
  CHECK(sub.graph == path_graph(3));
  CHECK(sub.to_old == std::vector<int>{0, 1, 2});

  const Graph g = path_graph(5);
  const InducedSubgraph all = induced_subgraph(g, g.vertices());
  CHECK(all.graph == g);

  // Dropping {c,d,g} from the catalog seven-vertex tree leaves two disjoint
  // edges: checked structurally here (a-b and e-f survive).
  Graph ag(7);
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}})
    ag.add_edge(u, v);
  const VertexSet keep = ag.vertices() & ~(vertex_bit(2) | vertex_bit(3) | vertex_bit(6));
  const InducedSubgraph rest = induced_subgraph(ag, keep);
  CHECK(rest.graph.order() == 4);
  CHECK(rest.graph.edge_count() == 2);
  CHECK(rest.graph.has_edge(0, 1));
  CHECK(rest.graph.has_edge(2, 3));
}

TEST_CASE("disjoint union shifts the second operand") {
  const Graph u = disjoint_union(path_graph(3), cycle_graph(3));
  CHECK(u.order() == 6);
  CHECK(u.edge_count() == 5);
  CHECK(u.has_edge(3, 4));
  CHECK_FALSE(u.has_edge(2, 3));

  const Graph g = path_graph(4);
  CHECK(disjoint_union(g, empty_graph(0)) == g);

  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    const Graph a = testutil::random_graph(rng, static_cast<int>(rng() % 8));
    const Graph b = testutil::random_graph(rng, static_cast<int>(rng() % 8));
    CHECK(components(disjoint_union(a, b)).size() ==
          components(a).size() + components(b).size());
  }
}

TEST_CASE("add_leaves only touches the target vertex") {
  const Graph star = add_leaves(path_graph(1), 0, 2);
  CHECK(star.order() == 3);
  CHECK(star.degree(0) == 2);

  const Graph g = cycle_graph(4);
  CHECK(add_leaves(g, 2, 0) == g);

  std::mt19937_64 rng(13);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph base = testutil::random_graph(rng, n);
    const int v = static_cast<int>(rng() % static_cast<unsigned>(n));
    const int k = static_cast<int>(rng() % 5);
    const Graph grown = add_leaves(base, v, k);
    CHECK(grown.degree(v) == base.degree(v) + k);
    for (int w = 0; w < n; ++w)
      if (w != v) CHECK(grown.degree(w) == base.degree(w));
  }
}

TEST_CASE("distance uses the unreachable sentinel across components") {
  const Graph u = disjoint_union(path_graph(3), cycle_graph(3));
  CHECK(distance(u, 0, 4) == kUnreachable);
  CHECK(kUnreachable >= 3);
  CHECK(distance(u, 0, 2) == 2);
  CHECK(distance(u, 1, 1) == 0);

  const Graph p3 = path_graph(3);
  CHECK(p3.closed_neighborhood(1) == full_set(3));

  // Marked pair of the 14-vertex catalog tree sits at distance 3.
  Graph tree(14);
  for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6},
                      {6, 7}, {7, 8}, {7, 9}, {4, 10}, {10, 11}, {11, 12},
                      {12, 13}})
    tree.add_edge(a, b);
  CHECK(distance(tree, 4, 7) == 3);
}

TEST_CASE("graph6 round trips are labelled identities") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 300; ++round) {
    const int n = static_cast<int>(rng() % 11);
    const Graph g = testutil::random_graph(rng, n);
    CHECK(g6::parse(g6::emit(g)) == g);
  }
  // Orders needing the long form.
  for (int n : {63, 64}) {
    const Graph g = testutil::random_graph(rng, n, 0.2);
    CHECK(g6::parse(g6::emit(g)) == g);
  }
  CHECK(g6::parse(g6::emit(empty_graph(0))) == empty_graph(0));
  CHECK(g6::parse(">>graph6<<Bw") == complete_graph(3));
}

TEST_CASE("graph6 rejects malformed input distinctly") {
  CHECK_THROWS_WITH_AS(g6::parse("D"), doctest::Contains("truncated"),
                       g6::ParseError);
  CHECK_THROWS_WITH_AS(g6::parse(">>graphsix<<Bw"),
                       doctest::Contains("header"), g6::ParseError);
  CHECK_THROWS_WITH_AS(g6::parse("~~?????????"),
                       doctest::Contains("64-vertex"), g6::ParseError);
  CHECK_THROWS_WITH_AS(g6::parse("Bww"), doctest::Contains("trailing"),
                       g6::ParseError);
  CHECK_THROWS_AS(g6::parse(""), g6::ParseError);
  CHECK_THROWS_AS(g6::parse("B\x01"), g6::ParseError);
}

TEST_CASE("adjacency list format round trips") {
  const Graph g = broom_graph(4, 2);
  CHECK(g6::parse_adjacency_list(g6::emit_adjacency_list(g)) == g);
  CHECK(g6::parse_adjacency_list("3\n# comment\n0 1\n1 2\n") == path_graph(3));
  CHECK_THROWS_AS(g6::parse_adjacency_list("2\n0 2\n"), g6::ParseError);
  CHECK_THROWS_AS(g6::parse_adjacency_list("2\n1 1\n"), g6::ParseError);
  CHECK_THROWS_AS(g6::parse_adjacency_list(""), g6::ParseError);
}

TEST_CASE("automorphism checks") {
  const Graph c4 = cycle_graph(4);
  CHECK(is_automorphism(c4, {0, 1, 2, 3}));
  CHECK(is_automorphism(c4, {2, 3, 0, 1}));
  CHECK_FALSE(is_automorphism(c4, {1, 0, 2, 3}));
  CHECK_FALSE(is_automorphism(c4, {0, 0, 2, 3}));

  // The seven-vertex tree with leaf g has a trivial automorphism group.
  Graph ag(7);
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}})
    ag.add_edge(u, v);
  VertexMap perm = {0, 1, 2, 3, 4, 5, 6};
  int nontrivial = 0;
  do {
    if (is_automorphism(ag, perm)) ++nontrivial;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(nontrivial == 1);  // identity only
}
