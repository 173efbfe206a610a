#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

namespace snortlab {

// Vertices are dense indices 0..n-1 with n <= 64; vertex sets are bitmasks.
using VertexSet = std::uint64_t;

// Total map on vertex indices. Used for automorphisms, oppositions and
// relabellings; a value of -1 marks "not in the domain" where documented.
using VertexMap = std::vector<int>;

inline constexpr int kMaxVertices = 64;

// Sentinel hop count for vertices in different components. Chosen so that
// threshold checks like distance(u,v) >= 3 hold naturally for the sentinel.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }
constexpr bool contains(VertexSet s, int v) { return (s >> v) & VertexSet{1}; }
constexpr int set_size(VertexSet s) { return std::popcount(s); }
constexpr bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

// Mask of all vertices below n.
constexpr VertexSet full_set(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

template <typename F>
void for_each_vertex(VertexSet s, F&& f) {
  while (s != 0) {
    f(std::countr_zero(s));
    s &= s - 1;
  }
}

std::vector<int> set_to_list(VertexSet s);
VertexSet list_to_set(const std::vector<int>& vs);

// Simple undirected graph with adjacency stored as one bitmask per vertex.
// add_edge is for construction; everything downstream treats graphs as
// immutable values (derived graphs are built fresh).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  VertexSet vertices() const { return full_set(n_); }

  // Open neighbourhood N(v).
  VertexSet neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }
  // Closed neighbourhood N[v].
  VertexSet closed_neighborhood(int v) const {
    return neighbors(v) | vertex_bit(v);
  }
  int degree(int v) const { return set_size(neighbors(v)); }
  bool has_edge(int u, int v) const;
  std::size_t edge_count() const;

  void add_edge(int u, int v);

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

// Named constructors. Vertex numbering is part of the contract:
//   path_graph(n):      0-1-...-(n-1)
//   cycle_graph(n):     0-1-...-(n-1)-0 (n=1 is K1, n=2 is K2)
//   complete_graph(n):  every pair adjacent
//   empty_graph(n):     no edges
//   broom_graph(n,m):   path 0..n-1 plus leaves n..n+m-1, all attached to n-1
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph broom_graph(int path_vertices, int leaves);

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_old;  // new index -> old index, ascending
  std::vector<int> to_new;  // old index -> new index, -1 if dropped
};

// Induced subgraph on `keep`, vertices relabelled in ascending original order.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep);

// Second operand's vertices are shifted by g.order(); no cross edges.
Graph disjoint_union(const Graph& g, const Graph& h);

// k new degree-1 vertices n..n+k-1, each adjacent only to v.
Graph add_leaves(const Graph& g, int v, int k);

// BFS hop count; kUnreachable when u and v lie in different components.
int distance(const Graph& g, int u, int v);

std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

// True iff f is a bijection on the vertices and uv in E <=> f(u)f(v) in E.
bool is_automorphism(const Graph& g, const VertexMap& f);

bool is_bijection(const VertexMap& f, int n);
bool is_involution(const VertexMap& f);

// Image of g under a bijective relabelling (edge uv -> perm[u]perm[v]).
Graph relabel(const Graph& g, const VertexMap& perm);

}  // namespace snortlab
