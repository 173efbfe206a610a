#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace snortlab::boolexpr {

// Small boolean-formula AST over named atoms. Connectives by falling
// precedence: ! then & then | then => (right associative); parentheses
// group. Whitespace is insignificant.

enum class Kind { Atom, Not, And, Or, Implies };

struct Node;
using Expr = std::shared_ptr<const Node>;

struct Node {
  Kind kind;
  int atom = -1;
  Expr lhs, rhs;
};

Expr make_atom(int id);
Expr make_not(Expr e);
Expr make_and(Expr a, Expr b);
Expr make_or(Expr a, Expr b);
Expr make_implies(Expr a, Expr b);

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t position);
  std::size_t position;  // 1-based character position
};

// Atom ids are indices into `atom_names`.
Expr parse(std::string_view text, const std::vector<std::string>& atom_names);

bool eval(const Expr& e, const std::function<bool(int)>& atom_value);

// Minimal parentheses; parse(format(e)) is structurally equal to e.
std::string format(const Expr& e, const std::vector<std::string>& atom_names);

bool structurally_equal(const Expr& a, const Expr& b);

// Atom ids referenced anywhere in the expression.
std::vector<int> atoms_used(const Expr& e);

}  // namespace snortlab::boolexpr
