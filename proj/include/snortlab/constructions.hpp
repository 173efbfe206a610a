#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "snortlab/graph.hpp"
#include "snortlab/position.hpp"

namespace snortlab {

// Bundled catalog of small labelled graphs used as fixed regression inputs.
// Each entry hard-codes an exact edge list with a documented labelling; they
// are data fixtures, not derived constructions.
enum class FigureId {
  P3uC3,               // P3 (0-1-2) next to a triangle (3,4,5)
  SevenVertex1,        // hexagon 0..5 with centre 6 on 2,5 and chord 0-4
  SevenVertex2,
  SevenVertex3,
  SevenVertex4,
  SevenVertex5,
  SevenVertexFewestEdges,  // alias of SevenVertex1, labels v1..v7
  Tree12,              // 12-vertex tree: spine 0..6, arms at 2, leaf at 4
  Tree15,              // 15-vertex tree: spine 0..6, arms at 3, leaves at 4,11
  G5,                  // family_g(2): K5 minus an edge, subdivider, 2 pendants
  ResponsePairTree,    // 14-vertex tree with marked pair u=4, v=7
  AlmostAG,            // path a..f (0..5) plus leaf g (6) on d (3)
  HomC4P3,             // homomorphic product of C4 and P3
  HomP3C4,             // homomorphic product of P3 and C4
};

struct Figure {
  Graph graph;
  std::vector<std::string> labels;  // per-vertex display labels
};

Figure figure(FigureId id);
const char* figure_name(FigureId id);
std::optional<FigureId> parse_figure_id(std::string_view name);
std::vector<FigureId> figure_catalog();

// g plus n pendant leaves on each of u and v; u's leaves are numbered first
// (original order, then u's leaves, then v's).
Graph firework(const Graph& g, int u, int v, int n);

struct FireworkPreconditions {
  bool response_pair = false;  // (u,v) is a response pair of g
  bool distance_ok = false;    // dist(u,v) >= 3 (different components count)
};

// On-demand check of the hypotheses under which the firework construction
// preserves a second-player win; reported separately from construction.
FireworkPreconditions check_firework_preconditions(const Graph& g, int u,
                                                   int v);

// Member 4n of an infinite family of graphs on which the second player wins
// but no opposition exists: a complete graph on 2n+1 vertices (0..2n) whose
// edge 0-1 is subdivided by vertex 2n+1, with 2n-2 pendants on the
// subdivider. Requires n >= 2.
Graph family_g(int n);

// Replaces given tints by structure: the residual graph of p (uncoloured,
// non-dead vertices, relabelled ascending) plus a blue apex adjacent to all
// blue-tinted residual vertices, a red apex adjacent to all red-tinted ones,
// and k pendant leaves on each apex. Apex order: blue, red, blue's leaves,
// red's leaves.
Graph detint(const Position& p, int k);

// Experimental helper: smallest k in 0..k_max for which the detinted graph
// has the same outcome as the tinted position (nothing if none does).
std::optional<int> detint_min_k(const Position& p, int k_max);

}  // namespace snortlab
