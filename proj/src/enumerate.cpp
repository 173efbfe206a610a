#include "snortlab/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "snortlab/canonical.hpp"

namespace snortlab {

namespace {

constexpr int kGraphOrderCap = 8;
constexpr int kTreeOrderCap = 16;

Graph extend_with_vertex(const Graph& base, VertexSet neighbourhood) {
  Graph g(base.order() + 1);
  for (int u = 0; u < base.order(); ++u) {
    for_each_vertex(base.neighbors(u), [&](int w) {
      if (u < w) g.add_edge(u, w);
    });
  }
  for_each_vertex(neighbourhood, [&](int w) { g.add_edge(base.order(), w); });
  return g;
}

}  // namespace

std::vector<Graph> all_graphs(int order, bool connected_only) {
  if (order < 0) throw std::invalid_argument("order must be non-negative");
  if (order > kGraphOrderCap)
    throw std::length_error("graph enumeration is capped at order " +
                            std::to_string(kGraphOrderCap));
  std::vector<Graph> level = {Graph(0)};
  for (int k = 1; k <= order; ++k) {
    std::vector<Graph> next;
    std::unordered_set<std::string> seen;
    for (const Graph& base : level) {
      for (VertexSet nb = 0; nb < vertex_bit(k - 1); ++nb) {
        Graph cand = extend_with_vertex(base, nb);
        if (seen.insert(canonical_code(cand)).second)
          next.push_back(std::move(cand));
      }
    }
    level = std::move(next);
  }
  if (connected_only) {
    std::erase_if(level, [](const Graph& g) { return !is_connected(g); });
  }
  return level;
}

void enumerate_graphs(int order, bool connected_only,
                      const std::function<bool(const Graph&)>& visit) {
  for (const Graph& g : all_graphs(order, connected_only))
    if (!visit(g)) return;
}

namespace {

// Rooted-tree level-sequence successor: sequences start at the path
// 1,2,...,n and end at the star 1,2,2,...,2, each rooted tree appearing
// exactly once in decreasing lexicographic order.
bool next_level_sequence(std::vector<int>& level) {
  const int n = static_cast<int>(level.size());
  int p = -1;
  for (int i = n - 1; i >= 0; --i) {
    if (level[static_cast<std::size_t>(i)] > 2) {
      p = i;
      break;
    }
  }
  if (p < 0) return false;
  int q = -1;
  for (int i = p - 1; i >= 0; --i) {
    if (level[static_cast<std::size_t>(i)] ==
        level[static_cast<std::size_t>(p)] - 1) {
      q = i;
      break;
    }
  }
  for (int i = p; i < n; ++i)
    level[static_cast<std::size_t>(i)] = level[static_cast<std::size_t>(i - (p - q))];
  return true;
}

Graph tree_from_levels(const std::vector<int>& level) {
  const int n = static_cast<int>(level.size());
  Graph g(n);
  for (int i = 1; i < n; ++i) {
    for (int j = i - 1; j >= 0; --j) {
      if (level[static_cast<std::size_t>(j)] ==
          level[static_cast<std::size_t>(i)] - 1) {
        g.add_edge(i, j);
        break;
      }
    }
  }
  return g;
}

std::string rooted_code(const Graph& t, int v, int parent) {
  std::vector<std::string> children;
  for_each_vertex(t.neighbors(v), [&](int w) {
    if (w != parent) children.push_back(rooted_code(t, w, v));
  });
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const std::string& c : children) out += c;
  out.push_back(')');
  return out;
}

}  // namespace

std::string free_tree_code(const Graph& tree) {
  const int n = tree.order();
  if (n == 0) return "";
  // Strip leaves until one or two centre vertices remain.
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = tree.degree(v);
  VertexSet remaining = tree.vertices();
  int remaining_count = n;
  std::vector<int> frontier;
  for (int v = 0; v < n; ++v)
    if (deg[static_cast<std::size_t>(v)] <= 1) frontier.push_back(v);
  while (remaining_count > 2) {
    std::vector<int> next;
    for (int v : frontier) {
      remaining &= ~vertex_bit(v);
      --remaining_count;
      for_each_vertex(tree.neighbors(v) & remaining, [&](int w) {
        if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
      });
    }
    frontier = std::move(next);
  }
  const std::vector<int> centres = set_to_list(remaining);
  if (centres.size() == 1) return rooted_code(tree, centres[0], -1);
  std::string a = rooted_code(tree, centres[0], centres[1]);
  std::string b = rooted_code(tree, centres[1], centres[0]);
  if (b < a) std::swap(a, b);
  return a + b;
}

std::vector<Graph> all_trees(int order) {
  if (order < 0) throw std::invalid_argument("order must be non-negative");
  if (order > kTreeOrderCap)
    throw std::length_error("tree enumeration is capped at order " +
                            std::to_string(kTreeOrderCap));
  std::vector<Graph> out;
  if (order == 0) return out;
  if (order <= 2) {
    out.push_back(path_graph(order));
    return out;
  }
  std::vector<int> level(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) level[static_cast<std::size_t>(i)] = i + 1;
  std::unordered_set<std::string> seen;
  do {
    Graph t = tree_from_levels(level);
    if (seen.insert(free_tree_code(t)).second) out.push_back(std::move(t));
  } while (next_level_sequence(level));
  return out;
}

void enumerate_trees(int order, const std::function<bool(const Graph&)>& visit) {
  for (const Graph& t : all_trees(order))
    if (!visit(t)) return;
}

}  // namespace snortlab
