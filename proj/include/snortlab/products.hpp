#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "snortlab/boolexpr.hpp"
#include "snortlab/graph.hpp"
#include "snortlab/opposition.hpp"

namespace snortlab {

// Products on V(G) x V(H) whose adjacency is a boolean formula over four
// atoms evaluated on a pair of product vertices (g1,h1), (g2,h2):
//   adjG: g1g2 in E(G)    adjH: h1h2 in E(H)
//   eqG:  g1 = g2         eqH:  h1 = h2
// All four atoms are symmetric in the pair, so every formula defines a
// well-formed undirected adjacency; self-pairs are never consulted.
using ProductFormula = boolexpr::Expr;

enum class ProductAtom : int { AdjG = 0, AdjH = 1, EqG = 2, EqH = 3 };

const std::vector<std::string>& product_atom_names();

ProductFormula parse_formula(std::string_view text);
std::string format_formula(const ProductFormula& formula);

enum class NamedProduct {
  Cartesian,
  Strong,
  Tensor,
  Lexicographic,
  Conormal,
  Homomorphic,
  Cihpromomoh,
};

ProductFormula named_formula(NamedProduct p);
const char* product_name(NamedProduct p);
std::optional<NamedProduct> parse_product_name(std::string_view name);
std::vector<NamedProduct> all_named_products();

struct ProductGraph {
  Graph graph;
  int g_order = 0;
  int h_order = 0;
  // Product vertex (u,v) sits at flat index u*h_order + v.
  int index_of(int u, int v) const { return u * h_order + v; }
};

ProductGraph build_product(const Graph& g, const Graph& h,
                           const ProductFormula& formula);

// The lifting condition: whenever h1 = h2 and g1g2 is not an edge the
// formula must be false. Checked semantically over every atom assignment
// that can arise from a pair of distinct product vertices of a simple graph
// (eq and adj exclude each other per side, and eqG & eqH would be the same
// vertex twice), eight assignments in all.
bool satisfies_opposability_condition(const ProductFormula& formula);

// Lifts an opposition f of g to (u,v) -> (f(u), v) on the product. Refuses
// (throws std::invalid_argument) when the formula fails the condition or f
// is not an opposition of g; the lifted map is re-verified before return.
Opposition lift_opposition(const Opposition& f, const Graph& g, const Graph& h,
                           const ProductFormula& formula);

// Row and column fibers under the fixed index scheme: g_fiber(p, v) is the
// copy of G at height v, h_fiber(p, u) the copy of H over u.
VertexSet g_fiber(const ProductGraph& p, int h_vertex);
VertexSet h_fiber(const ProductGraph& p, int g_vertex);

}  // namespace snortlab
