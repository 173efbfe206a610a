#include "snortlab/graph.hpp"

#include <stdexcept>
#include <string>

namespace snortlab {

std::vector<int> set_to_list(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(set_size(s)));
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

VertexSet list_to_set(const std::vector<int>& vs) {
  VertexSet s = 0;
  for (int v : vs) s |= vertex_bit(v);
  return s;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  if (n > kMaxVertices)
    throw std::length_error("graph order exceeds the 64-vertex limit");
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex index " + std::to_string(v) +
                                " out of range for order " +
                                std::to_string(n_));
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return contains(adj_[static_cast<std::size_t>(u)], v);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (int v = 0; v < n_; ++v)
    twice += static_cast<std::size_t>(set_size(adj_[static_cast<std::size_t>(v)]));
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  adj_[static_cast<std::size_t>(u)] |= vertex_bit(v);
  adj_[static_cast<std::size_t>(v)] |= vertex_bit(u);
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_) return false;
  for (int v = 0; v < n_; ++v)
    if (adj_[static_cast<std::size_t>(v)] !=
        other.adj_[static_cast<std::size_t>(v)])
      return false;
  return true;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph broom_graph(int path_vertices, int leaves) {
  if (path_vertices < 0 || leaves < 0)
    throw std::invalid_argument("broom parameters must be non-negative");
  if (path_vertices == 0 && leaves > 0)
    throw std::invalid_argument("broom needs a path vertex to attach leaves");
  if (path_vertices + leaves > kMaxVertices)
    throw std::length_error("broom exceeds the 64-vertex limit");
  Graph g(path_vertices + leaves);
  for (int v = 0; v + 1 < path_vertices; ++v) g.add_edge(v, v + 1);
  for (int k = 0; k < leaves; ++k)
    g.add_edge(path_vertices - 1, path_vertices + k);
  return g;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph c(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep) {
  if (!is_subset(keep, g.vertices()))
    throw std::invalid_argument("keep set contains out-of-range vertices");
  InducedSubgraph out;
  out.to_new.assign(static_cast<std::size_t>(g.order()), -1);
  for_each_vertex(keep, [&](int v) {
    out.to_new[static_cast<std::size_t>(v)] =
        static_cast<int>(out.to_old.size());
    out.to_old.push_back(v);
  });
  out.graph = Graph(static_cast<int>(out.to_old.size()));
  for (std::size_t i = 0; i < out.to_old.size(); ++i) {
    VertexSet nbrs = g.neighbors(out.to_old[i]) & keep;
    for_each_vertex(nbrs, [&](int w) {
      int j = out.to_new[static_cast<std::size_t>(w)];
      if (static_cast<int>(i) < j)
        out.graph.add_edge(static_cast<int>(i), j);
    });
  }
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  if (g.order() + h.order() > kMaxVertices)
    throw std::length_error("disjoint union exceeds the 64-vertex limit");
  Graph u(g.order() + h.order());
  for (int v = 0; v < g.order(); ++v) {
    for_each_vertex(g.neighbors(v), [&](int w) {
      if (v < w) u.add_edge(v, w);
    });
  }
  const int shift = g.order();
  for (int v = 0; v < h.order(); ++v) {
    for_each_vertex(h.neighbors(v), [&](int w) {
      if (v < w) u.add_edge(v + shift, w + shift);
    });
  }
  return u;
}

Graph add_leaves(const Graph& g, int v, int k) {
  if (k < 0) throw std::invalid_argument("leaf count must be non-negative");
  if (v < 0 || v >= g.order())
    throw std::invalid_argument("attachment vertex out of range");
  if (g.order() + k > kMaxVertices)
    throw std::length_error("add_leaves exceeds the 64-vertex limit");
  Graph out(g.order() + k);
  for (int u = 0; u < g.order(); ++u) {
    for_each_vertex(g.neighbors(u), [&](int w) {
      if (u < w) out.add_edge(u, w);
    });
  }
  for (int i = 0; i < k; ++i) out.add_edge(v, g.order() + i);
  return out;
}

int distance(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
    throw std::invalid_argument("distance endpoints out of range");
  if (u == v) return 0;
  VertexSet visited = vertex_bit(u);
  VertexSet frontier = visited;
  int hops = 0;
  while (frontier != 0) {
    ++hops;
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int w) { next |= g.neighbors(w); });
    next &= ~visited;
    if (contains(next, v)) return hops;
    visited |= next;
    frontier = next;
  }
  return kUnreachable;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet pending = g.vertices();
  while (pending != 0) {
    int start = std::countr_zero(pending);
    VertexSet comp = vertex_bit(start);
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](int w) { next |= g.neighbors(w); });
      next &= ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    pending &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_bijection(const VertexMap& f, int n) {
  if (static_cast<int>(f.size()) != n) return false;
  VertexSet seen = 0;
  for (int v : f) {
    if (v < 0 || v >= n || contains(seen, v)) return false;
    seen |= vertex_bit(v);
  }
  return true;
}

bool is_involution(const VertexMap& f) {
  const int n = static_cast<int>(f.size());
  if (!is_bijection(f, n)) return false;
  for (int v = 0; v < n; ++v)
    if (f[static_cast<std::size_t>(f[static_cast<std::size_t>(v)])] != v)
      return false;
  return true;
}

bool is_automorphism(const Graph& g, const VertexMap& f) {
  const int n = g.order();
  if (!is_bijection(f, n)) return false;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.has_edge(u, v) != g.has_edge(f[static_cast<std::size_t>(u)],
                                         f[static_cast<std::size_t>(v)]))
        return false;
  return true;
}

Graph relabel(const Graph& g, const VertexMap& perm) {
  const int n = g.order();
  if (!is_bijection(perm, n))
    throw std::invalid_argument("relabel requires a bijection");
  Graph out(n);
  for (int u = 0; u < n; ++u) {
    for_each_vertex(g.neighbors(u), [&](int w) {
      if (u < w)
        out.add_edge(perm[static_cast<std::size_t>(u)],
                     perm[static_cast<std::size_t>(w)]);
    });
  }
  return out;
}

}  // namespace snortlab
