#pragma once

#include <functional>
#include <string>
#include <vector>

#include "snortlab/graph.hpp"

namespace snortlab {

// Exactly one representative per isomorphism class, deterministic order.
// Levelwise construction: every representative of order k-1 is extended by a
// new vertex with every possible neighbourhood, deduplicated by canonical
// code. Order is capped at 8.
std::vector<Graph> all_graphs(int order, bool connected_only = false);
void enumerate_graphs(int order, bool connected_only,
                      const std::function<bool(const Graph&)>& visit);

// One representative per free-tree isomorphism class, deterministic order.
// Rooted trees come from the level-sequence successor generator; each is
// reduced to a centre-rooted canonical form and reported once. Order is
// capped at 16.
std::vector<Graph> all_trees(int order);
void enumerate_trees(int order, const std::function<bool(const Graph&)>& visit);

// Centre-rooted canonical encoding of a free tree; equal strings iff the
// trees are isomorphic. Independent of canonical_code (used to cross-check
// it on tree inputs).
std::string free_tree_code(const Graph& tree);

}  // namespace snortlab
