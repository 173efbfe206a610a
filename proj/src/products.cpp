#include "snortlab/products.hpp"

#include <array>
#include <stdexcept>

namespace snortlab {

const std::vector<std::string>& product_atom_names() {
  static const std::vector<std::string> names = {"adjG", "adjH", "eqG", "eqH"};
  return names;
}

ProductFormula parse_formula(std::string_view text) {
  return boolexpr::parse(text, product_atom_names());
}

std::string format_formula(const ProductFormula& formula) {
  return boolexpr::format(formula, product_atom_names());
}

ProductFormula named_formula(NamedProduct p) {
  switch (p) {
    case NamedProduct::Cartesian:
      return parse_formula("(eqG & adjH) | (adjG & eqH)");
    case NamedProduct::Strong:
      return parse_formula("(eqG & adjH) | (adjG & eqH) | (adjG & adjH)");
    case NamedProduct::Tensor:
      return parse_formula("adjG & adjH");
    case NamedProduct::Lexicographic:
      return parse_formula("adjG | (eqG & adjH)");
    case NamedProduct::Conormal:
      return parse_formula("adjG | adjH");
    case NamedProduct::Homomorphic:
      return parse_formula("eqG | (adjG & !adjH)");
    case NamedProduct::Cihpromomoh:
      return parse_formula("eqH | (adjH & !adjG)");
  }
  throw std::invalid_argument("unknown product");
}

const char* product_name(NamedProduct p) {
  switch (p) {
    case NamedProduct::Cartesian: return "cartesian";
    case NamedProduct::Strong: return "strong";
    case NamedProduct::Tensor: return "tensor";
    case NamedProduct::Lexicographic: return "lexicographic";
    case NamedProduct::Conormal: return "conormal";
    case NamedProduct::Homomorphic: return "homomorphic";
    case NamedProduct::Cihpromomoh: return "cihpromomoh";
  }
  return "?";
}

std::optional<NamedProduct> parse_product_name(std::string_view name) {
  for (NamedProduct p : all_named_products())
    if (name == product_name(p)) return p;
  return std::nullopt;
}

std::vector<NamedProduct> all_named_products() {
  return {NamedProduct::Cartesian,     NamedProduct::Strong,
          NamedProduct::Tensor,        NamedProduct::Lexicographic,
          NamedProduct::Conormal,      NamedProduct::Homomorphic,
          NamedProduct::Cihpromomoh};
}

namespace {

bool eval_atoms(const ProductFormula& formula, bool adj_g, bool adj_h,
                bool eq_g, bool eq_h) {
  const std::array<bool, 4> atoms = {adj_g, adj_h, eq_g, eq_h};
  return boolexpr::eval(formula, [&](int id) {
    return atoms[static_cast<std::size_t>(id)];
  });
}

}  // namespace

ProductGraph build_product(const Graph& g, const Graph& h,
                           const ProductFormula& formula) {
  const long total = static_cast<long>(g.order()) * h.order();
  if (total > kMaxVertices)
    throw std::length_error("product exceeds the 64-vertex limit");
  ProductGraph out;
  out.g_order = g.order();
  out.h_order = h.order();
  out.graph = Graph(static_cast<int>(total));
  for (int u1 = 0; u1 < g.order(); ++u1) {
    for (int v1 = 0; v1 < h.order(); ++v1) {
      const int a = out.index_of(u1, v1);
      for (int u2 = 0; u2 < g.order(); ++u2) {
        for (int v2 = 0; v2 < h.order(); ++v2) {
          const int b = out.index_of(u2, v2);
          if (b <= a) continue;
          const bool adj_g = u1 != u2 && g.has_edge(u1, u2);
          const bool adj_h = v1 != v2 && h.has_edge(v1, v2);
          if (eval_atoms(formula, adj_g, adj_h, u1 == u2, v1 == v2))
            out.graph.add_edge(a, b);
        }
      }
    }
  }
  return out;
}

bool satisfies_opposability_condition(const ProductFormula& formula) {
  // Assignment order: (eqG,adjG) then (eqH,adjH), each side running through
  // (false,false), (false,true), (true,false); the eqG & eqH combination is
  // excluded because distinct product vertices never satisfy both.
  static constexpr std::array<std::pair<bool, bool>, 3> side = {
      {{false, false}, {false, true}, {true, false}}};
  for (const auto& [eq_g, adj_g] : side) {
    for (const auto& [eq_h, adj_h] : side) {
      if (eq_g && eq_h) continue;
      if (eq_h && !adj_g && eval_atoms(formula, adj_g, adj_h, eq_g, eq_h))
        return false;
    }
  }
  return true;
}

Opposition lift_opposition(const Opposition& f, const Graph& g, const Graph& h,
                           const ProductFormula& formula) {
  if (!satisfies_opposability_condition(formula))
    throw std::invalid_argument(
        "formula fails the lifting condition; the lift would be unsound");
  if (!verify_opposition(g, f))
    throw std::invalid_argument("map is not an opposition of the first factor");
  ProductGraph p = build_product(g, h, formula);
  Opposition lifted(static_cast<std::size_t>(p.graph.order()));
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v)
      lifted[static_cast<std::size_t>(p.index_of(u, v))] =
          p.index_of(f[static_cast<std::size_t>(u)], v);
  if (!verify_opposition(p.graph, lifted))
    throw std::logic_error("lifted map failed opposition verification");
  return lifted;
}

VertexSet g_fiber(const ProductGraph& p, int h_vertex) {
  if (h_vertex < 0 || h_vertex >= p.h_order)
    throw std::invalid_argument("fiber vertex out of range");
  VertexSet s = 0;
  for (int u = 0; u < p.g_order; ++u)
    s |= vertex_bit(p.index_of(u, h_vertex));
  return s;
}

VertexSet h_fiber(const ProductGraph& p, int g_vertex) {
  if (g_vertex < 0 || g_vertex >= p.g_order)
    throw std::invalid_argument("fiber vertex out of range");
  VertexSet s = 0;
  for (int v = 0; v < p.h_order; ++v) s |= vertex_bit(p.index_of(g_vertex, v));
  return s;
}

}  // namespace snortlab
