#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <unordered_set>

#include "snortlab/canonical.hpp"
#include "snortlab/graph.hpp"

#include "test_util.hpp"

using namespace snortlab;

namespace {

// Exhaustive isomorphism test over all vertex permutations.
bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  VertexMap perm(static_cast<std::size_t>(a.order()));
  for (int i = 0; i < a.order(); ++i) perm[static_cast<std::size_t>(i)] = i;
  do {
    if (relabel(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return a.order() == 0;
}

Graph from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("simple code equalities") {
  CHECK(canonical_code(path_graph(3)) ==
        canonical_code(add_leaves(path_graph(1), 0, 2)));
  CHECK(canonical_code(path_graph(4)) != canonical_code(broom_graph(1, 3)));
  CHECK(canonical_code(empty_graph(0)) == canonical_code(empty_graph(0)));
  CHECK(canonical_code(complete_graph(5)) ==
        canonical_code(relabel(complete_graph(5), {4, 3, 2, 1, 0})));
}

TEST_CASE("codes are invariant under relabelling") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 60; ++round) {
    const int n = static_cast<int>(rng() % 9);
    const Graph g = testutil::random_graph(rng, n);
    const std::string code = canonical_code(g);
    for (int k = 0; k < 100; ++k) {
      const VertexMap perm = testutil::random_permutation(rng, n);
      CHECK(canonical_code(relabel(g, perm)) == code);
    }
  }
}

TEST_CASE("code equality matches brute-force isomorphism on order 5") {
  // Partition all 2^10 labelled graphs by code and by permutation search;
  // the partitions must agree exactly.
  std::vector<Graph> graphs;
  std::vector<std::string> codes;
  for (std::uint64_t mask = 0; mask < (1u << 10); ++mask) {
    graphs.push_back(from_mask(5, mask));
    codes.push_back(canonical_code(graphs.back()));
  }
  std::map<std::string, std::vector<std::size_t>> by_code;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    by_code[codes[i]].push_back(i);
  CHECK(by_code.size() == 34);
  // Same code implies isomorphic (first member versus the rest)...
  for (const auto& [code, members] : by_code) {
    for (std::size_t i = 1; i < members.size(); ++i)
      REQUIRE(brute_isomorphic(graphs[members[0]], graphs[members[i]]));
  }
  // ...and distinct codes imply non-isomorphic.
  std::vector<std::size_t> reps;
  for (const auto& [code, members] : by_code) reps.push_back(members[0]);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      REQUIRE_FALSE(brute_isomorphic(graphs[reps[i]], graphs[reps[j]]));
}

TEST_CASE("order-6 labelled dedup hits the known class count") {
  std::unordered_set<std::string> codes;
  for (std::uint64_t mask = 0; mask < (1u << 15); ++mask)
    codes.insert(canonical_code(from_mask(6, mask)));
  CHECK(codes.size() == 156);
}

TEST_CASE("coloured codes separate colourings, not labellings") {
  const Graph p4 = path_graph(4);
  const std::vector<int> ends_marked = {1, 0, 0, 1};
  const std::vector<int> one_end = {1, 0, 0, 0};
  CHECK(canonical_code(p4, ends_marked) != canonical_code(p4, one_end));
  // Reversal preserves the colouring.
  CHECK(canonical_code(p4, one_end) ==
        canonical_code(relabel(p4, {3, 2, 1, 0}), {0, 0, 0, 1}));

  std::mt19937_64 rng(29);
  for (int round = 0; round < 40; ++round) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = testutil::random_graph(rng, n);
    std::vector<int> colors(static_cast<std::size_t>(n));
    for (int& c : colors) c = static_cast<int>(rng() % 3);
    const VertexMap perm = testutil::random_permutation(rng, n);
    std::vector<int> moved(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
      moved[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] =
          colors[static_cast<std::size_t>(v)];
    CHECK(canonical_code(g, colors) == canonical_code(relabel(g, perm), moved));
  }
}

TEST_CASE("refinement separates degree classes deterministically") {
  const Graph broom = broom_graph(3, 2);
  const std::vector<int> colors =
      refine_colors(broom, std::vector<int>(5, 0));
  CHECK(colors[3] == colors[4]);   // the two leaves agree
  CHECK(colors[0] != colors[2]);   // path end vs attachment vertex
  const std::set<int> distinct(colors.begin(), colors.end());
  CHECK(distinct.size() >= 3);
}
