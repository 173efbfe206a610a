#include "snortlab/boolexpr.hpp"

#include <algorithm>
#include <cctype>

namespace snortlab::boolexpr {

Expr make_atom(int id) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->atom = id;
  return n;
}

namespace {
Expr make_binary(Kind k, Expr a, Expr b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}
}  // namespace

Expr make_not(Expr e) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->lhs = std::move(e);
  return n;
}
Expr make_and(Expr a, Expr b) { return make_binary(Kind::And, std::move(a), std::move(b)); }
Expr make_or(Expr a, Expr b) { return make_binary(Kind::Or, std::move(a), std::move(b)); }
Expr make_implies(Expr a, Expr b) { return make_binary(Kind::Implies, std::move(a), std::move(b)); }

ParseError::ParseError(const std::string& message, std::size_t pos)
    : std::runtime_error(message + " at position " + std::to_string(pos)),
      position(pos) {}

namespace {

struct Parser {
  std::string_view text;
  const std::vector<std::string>& names;
  std::size_t i = 0;

  void skip_ws() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  }

  bool eat(std::string_view tok) {
    skip_ws();
    if (text.substr(i, tok.size()) == tok) {
      i += tok.size();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& message) {
    throw ParseError(message, i + 1);
  }

  Expr parse_primary() {
    skip_ws();
    if (i >= text.size()) fail("expected operand");
    if (eat("(")) {
      Expr e = parse_implies();
      skip_ws();
      if (!eat(")")) fail("expected ')'");
      return e;
    }
    if (eat("!")) return make_not(parse_primary());
    if (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_') {
      const std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) ||
              text[i] == '_'))
        ++i;
      const std::string word(text.substr(start, i - start));
      const auto it = std::find(names.begin(), names.end(), word);
      if (it == names.end()) {
        i = start;
        fail("unknown atom '" + word + "'");
      }
      return make_atom(static_cast<int>(it - names.begin()));
    }
    fail("unexpected character");
  }

  Expr parse_and() {
    Expr e = parse_primary();
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == '&') {
        ++i;
        e = make_and(std::move(e), parse_primary());
      } else {
        return e;
      }
    }
  }

  Expr parse_or() {
    Expr e = parse_and();
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == '|') {
        ++i;
        e = make_or(std::move(e), parse_and());
      } else {
        return e;
      }
    }
  }

  Expr parse_implies() {
    Expr lhs = parse_or();
    skip_ws();
    if (eat("=>")) return make_implies(std::move(lhs), parse_implies());
    return lhs;
  }

  Expr run() {
    Expr e = parse_implies();
    skip_ws();
    if (i != text.size()) fail("unexpected trailing input");
    return e;
  }
};

int precedence(Kind k) {
  switch (k) {
    case Kind::Atom: return 4;
    case Kind::Not: return 3;
    case Kind::And: return 2;
    case Kind::Or: return 1;
    case Kind::Implies: return 0;
  }
  return 0;
}

void format_rec(const Expr& e, const std::vector<std::string>& names,
                std::string& out) {
  auto child = [&](const Expr& c, bool needs_parens) {
    if (needs_parens) out.push_back('(');
    format_rec(c, names, out);
    if (needs_parens) out.push_back(')');
  };
  switch (e->kind) {
    case Kind::Atom:
      out += names[static_cast<std::size_t>(e->atom)];
      return;
    case Kind::Not:
      out.push_back('!');
      child(e->lhs, precedence(e->lhs->kind) < precedence(Kind::Not));
      return;
    case Kind::And:
      child(e->lhs, precedence(e->lhs->kind) < precedence(Kind::And));
      out += " & ";
      child(e->rhs, precedence(e->rhs->kind) <= precedence(Kind::And));
      return;
    case Kind::Or:
      child(e->lhs, precedence(e->lhs->kind) < precedence(Kind::Or));
      out += " | ";
      child(e->rhs, precedence(e->rhs->kind) <= precedence(Kind::Or));
      return;
    case Kind::Implies:
      child(e->lhs, precedence(e->lhs->kind) <= precedence(Kind::Implies));
      out += " => ";
      child(e->rhs, false);  // right associative
      return;
  }
}

}  // namespace

Expr parse(std::string_view text, const std::vector<std::string>& atom_names) {
  Parser p{text, atom_names};
  return p.run();
}

bool eval(const Expr& e, const std::function<bool(int)>& atom_value) {
  switch (e->kind) {
    case Kind::Atom: return atom_value(e->atom);
    case Kind::Not: return !eval(e->lhs, atom_value);
    case Kind::And: return eval(e->lhs, atom_value) && eval(e->rhs, atom_value);
    case Kind::Or: return eval(e->lhs, atom_value) || eval(e->rhs, atom_value);
    case Kind::Implies:
      return !eval(e->lhs, atom_value) || eval(e->rhs, atom_value);
  }
  return false;
}

std::string format(const Expr& e, const std::vector<std::string>& atom_names) {
  std::string out;
  format_rec(e, atom_names, out);
  return out;
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a->kind != b->kind) return false;
  if (a->kind == Kind::Atom) return a->atom == b->atom;
  if (a->lhs && !structurally_equal(a->lhs, b->lhs)) return false;
  if (a->rhs) return structurally_equal(a->rhs, b->rhs);
  return true;
}

std::vector<int> atoms_used(const Expr& e) {
  std::vector<int> out;
  std::function<void(const Expr&)> walk = [&](const Expr& node) {
    if (node->kind == Kind::Atom) {
      if (std::find(out.begin(), out.end(), node->atom) == out.end())
        out.push_back(node->atom);
      return;
    }
    if (node->lhs) walk(node->lhs);
    if (node->rhs) walk(node->rhs);
  };
  walk(e);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace snortlab::boolexpr
