#include "snortlab/constructions.hpp"

#include <stdexcept>

#include "snortlab/products.hpp"
#include "snortlab/solver.hpp"

namespace snortlab {

namespace {

Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::vector<std::string> numbered(std::string_view prefix, int n, int from) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    labels.push_back(std::string(prefix) + std::to_string(from + i));
  return labels;
}

std::vector<std::string> product_labels(int gn, int hn) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(gn * hn));
  for (int u = 0; u < gn; ++u)
    for (int v = 0; v < hn; ++v)
      labels.push_back("(" + std::to_string(u) + "," + std::to_string(v) + ")");
  return labels;
}

}  // namespace

Figure figure(FigureId id) {
  switch (id) {
    case FigureId::P3uC3:
      return {disjoint_union(path_graph(3), cycle_graph(3)),
              {"p0", "p1", "p2", "c0", "c1", "c2"}};
    case FigureId::SevenVertex1:
    case FigureId::SevenVertexFewestEdges:
      // Hexagon 0..5, centre 6 joined to 2 and 5, long chord 0-4.
      return {from_edges(7, {{0, 1},
                             {1, 2},
                             {2, 3},
                             {3, 4},
                             {4, 5},
                             {5, 0},
                             {5, 6},
                             {2, 6},
                             {0, 4}}),
              numbered("v", 7, 1)};
    case FigureId::SevenVertex2:
      return {from_edges(7, {{0, 1},
                             {0, 5},
                             {4, 5},
                             {3, 4},
                             {2, 3},
                             {1, 2},
                             {1, 6},
                             {1, 4},
                             {0, 3},
                             {3, 5}}),
              numbered("v", 7, 1)};
    case FigureId::SevenVertex3:
      // Pentagon 0..4 with chords 0-2 and 1-3, centre 5 on 1, 2 and 4,
      // pendant 6 on 4.
      return {from_edges(7, {{3, 4},
                             {2, 3},
                             {1, 2},
                             {0, 1},
                             {0, 4},
                             {4, 6},
                             {1, 5},
                             {2, 5},
                             {4, 5},
                             {0, 2},
                             {1, 3}}),
              numbered("v", 7, 1)};
    case FigureId::SevenVertex4:
      // 7-cycle plus the chords skipping one vertex on alternate sides.
      return {from_edges(7, {{5, 6},
                             {0, 6},
                             {0, 1},
                             {1, 2},
                             {2, 3},
                             {3, 4},
                             {4, 5},
                             {0, 5},
                             {0, 2},
                             {2, 4},
                             {4, 6},
                             {1, 6}}),
              numbered("v", 7, 1)};
    case FigureId::SevenVertex5:
      return {from_edges(7, {{0, 1},
                             {1, 2},
                             {2, 3},
                             {0, 3},
                             {0, 6},
                             {1, 6},
                             {1, 5},
                             {2, 5},
                             {2, 4},
                             {4, 5},
                             {3, 5},
                             {3, 4},
                             {0, 4}}),
              numbered("v", 7, 1)};
    case FigureId::Tree12:
      return {from_edges(12, {{0, 1},
                              {1, 2},
                              {2, 3},
                              {3, 4},
                              {4, 5},
                              {5, 6},
                              {7, 8},
                              {2, 7},
                              {2, 9},
                              {9, 10},
                              {4, 11}}),
              numbered("v", 12, 1)};
    case FigureId::Tree15:
      return {from_edges(15, {{0, 1},
                              {1, 2},
                              {2, 3},
                              {3, 4},
                              {4, 5},
                              {5, 6},
                              {7, 8},
                              {8, 9},
                              {9, 3},
                              {3, 10},
                              {10, 11},
                              {11, 12},
                              {11, 13},
                              {4, 14}}),
              numbered("u", 15, 1)};
    case FigureId::G5:
      return {family_g(2),
              {"k0", "k1", "k2", "k3", "k4", "x", "l0", "l1"}};
    case FigureId::ResponsePairTree:
      return {from_edges(14, {{0, 1},
                              {1, 2},
                              {2, 3},
                              {3, 4},
                              {4, 5},
                              {5, 6},
                              {6, 7},
                              {7, 8},
                              {7, 9},
                              {4, 10},
                              {10, 11},
                              {11, 12},
                              {12, 13}}),
              {"v0", "v1", "v2", "v3", "u", "v5", "v6", "v", "v8", "v9", "v10",
               "v11", "v12", "v13"}};
    case FigureId::AlmostAG:
      return {from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}}),
              {"a", "b", "c", "d", "e", "f", "g"}};
    case FigureId::HomC4P3: {
      ProductGraph p = build_product(cycle_graph(4), path_graph(3),
                                     named_formula(NamedProduct::Homomorphic));
      return {p.graph, product_labels(4, 3)};
    }
    case FigureId::HomP3C4: {
      ProductGraph p = build_product(path_graph(3), cycle_graph(4),
                                     named_formula(NamedProduct::Homomorphic));
      return {p.graph, product_labels(3, 4)};
    }
  }
  throw std::invalid_argument("unknown figure id");
}

const char* figure_name(FigureId id) {
  switch (id) {
    case FigureId::P3uC3: return "P3uC3";
    case FigureId::SevenVertex1: return "SevenVertex1";
    case FigureId::SevenVertex2: return "SevenVertex2";
    case FigureId::SevenVertex3: return "SevenVertex3";
    case FigureId::SevenVertex4: return "SevenVertex4";
    case FigureId::SevenVertex5: return "SevenVertex5";
    case FigureId::SevenVertexFewestEdges: return "SevenVertexFewestEdges";
    case FigureId::Tree12: return "Tree12";
    case FigureId::Tree15: return "Tree15";
    case FigureId::G5: return "G5";
    case FigureId::ResponsePairTree: return "ResponsePairTree";
    case FigureId::AlmostAG: return "AlmostAG";
    case FigureId::HomC4P3: return "HomC4P3";
    case FigureId::HomP3C4: return "HomP3C4";
  }
  return "?";
}

std::optional<FigureId> parse_figure_id(std::string_view name) {
  for (FigureId id : figure_catalog())
    if (name == figure_name(id)) return id;
  if (name == figure_name(FigureId::SevenVertexFewestEdges))
    return FigureId::SevenVertexFewestEdges;
  return std::nullopt;
}

std::vector<FigureId> figure_catalog() {
  return {FigureId::P3uC3,        FigureId::SevenVertex1,
          FigureId::SevenVertex2, FigureId::SevenVertex3,
          FigureId::SevenVertex4, FigureId::SevenVertex5,
          FigureId::Tree12,       FigureId::Tree15,
          FigureId::G5,           FigureId::ResponsePairTree,
          FigureId::AlmostAG,     FigureId::HomC4P3,
          FigureId::HomP3C4};
}

Graph firework(const Graph& g, int u, int v, int n) {
  if (u == v) throw std::invalid_argument("firework needs two distinct vertices");
  if (n < 0) throw std::invalid_argument("firework leaf count must be non-negative");
  if (g.order() + 2 * n > kMaxVertices)
    throw std::length_error("firework exceeds the 64-vertex limit");
  return add_leaves(add_leaves(g, u, n), v, n);
}

FireworkPreconditions check_firework_preconditions(const Graph& g, int u,
                                                   int v) {
  FireworkPreconditions pre;
  const int d = distance(g, u, v);
  pre.distance_ok = d >= 3;  // kUnreachable compares large
  Solver solver;
  pre.response_pair = solver.is_response_pair(g, u, v);
  return pre;
}

Graph family_g(int n) {
  if (n < 2) throw std::invalid_argument("family_g requires n >= 2");
  if (4 * n > kMaxVertices)
    throw std::length_error("family_g exceeds the 64-vertex limit");
  Graph g(4 * n);
  const int clique = 2 * n + 1;
  for (int a = 0; a < clique; ++a)
    for (int b = a + 1; b < clique; ++b)
      if (!(a == 0 && b == 1)) g.add_edge(a, b);
  const int x = clique;  // subdivider of the removed edge 0-1
  g.add_edge(0, x);
  g.add_edge(1, x);
  for (int i = 0; i < 2 * n - 2; ++i) g.add_edge(x, clique + 1 + i);
  return g;
}

Graph detint(const Position& p, int k) {
  if (k < 0) throw std::invalid_argument("detint leaf count must be non-negative");
  VertexSet alive = 0, blue = 0, red = 0;
  for (int v = 0; v < p.graph.order(); ++v) {
    switch (p.state[static_cast<std::size_t>(v)]) {
      case VertexState::Free: alive |= vertex_bit(v); break;
      case VertexState::TintedBlue:
        alive |= vertex_bit(v);
        blue |= vertex_bit(v);
        break;
      case VertexState::TintedRed:
        alive |= vertex_bit(v);
        red |= vertex_bit(v);
        break;
      default: break;
    }
  }
  InducedSubgraph sub = induced_subgraph(p.graph, alive);
  const int base = sub.graph.order();
  if (base + 2 + 2 * k > kMaxVertices)
    throw std::length_error("detint exceeds the 64-vertex limit");
  Graph out(base + 2 + 2 * k);
  for (int u = 0; u < base; ++u) {
    for_each_vertex(sub.graph.neighbors(u), [&](int w) {
      if (u < w) out.add_edge(u, w);
    });
  }
  const int blue_apex = base;
  const int red_apex = base + 1;
  for (int u = 0; u < base; ++u) {
    if (contains(blue, sub.to_old[static_cast<std::size_t>(u)]))
      out.add_edge(blue_apex, u);
    if (contains(red, sub.to_old[static_cast<std::size_t>(u)]))
      out.add_edge(red_apex, u);
  }
  for (int i = 0; i < k; ++i) {
    out.add_edge(blue_apex, base + 2 + i);
    out.add_edge(red_apex, base + 2 + k + i);
  }
  return out;
}

std::optional<int> detint_min_k(const Position& p, int k_max) {
  Solver solver;
  const OutcomeClass target = solver.outcome_of_position(p);
  for (int k = 0; k <= k_max; ++k) {
    if (solver.outcome(detint(p, k)) == target) return k;
  }
  return std::nullopt;
}

}  // namespace snortlab
