#include "snortlab/position.hpp"

#include <sstream>
#include <stdexcept>

#include "snortlab/graph6.hpp"

namespace snortlab {

const char* to_string(Player p) { return p == Player::Left ? "Left" : "Right"; }

char state_char(VertexState s) {
  switch (s) {
    case VertexState::Free: return 'F';
    case VertexState::TintedBlue: return 'b';
    case VertexState::TintedRed: return 'r';
    case VertexState::Dead: return 'D';
    case VertexState::ColouredBlue: return 'B';
    case VertexState::ColouredRed: return 'R';
  }
  return '?';
}

const char* to_string(OutcomeClass o) {
  switch (o) {
    case OutcomeClass::FirstWins: return "FirstWins";
    case OutcomeClass::SecondWins: return "SecondWins";
    case OutcomeClass::LeftWins: return "LeftWins";
    case OutcomeClass::RightWins: return "RightWins";
  }
  return "?";
}

Position initial_position(const Graph& g) {
  return Position{g, std::vector<VertexState>(
                         static_cast<std::size_t>(g.order()),
                         VertexState::Free)};
}

bool is_consistent(const Position& p) {
  const int n = p.graph.order();
  if (static_cast<int>(p.state.size()) != n) return false;
  VertexSet blue = 0, red = 0;
  for (int v = 0; v < n; ++v) {
    if (p.state[static_cast<std::size_t>(v)] == VertexState::ColouredBlue)
      blue |= vertex_bit(v);
    if (p.state[static_cast<std::size_t>(v)] == VertexState::ColouredRed)
      red |= vertex_bit(v);
  }
  for (int v = 0; v < n; ++v) {
    const VertexState s = p.state[static_cast<std::size_t>(v)];
    if (s == VertexState::ColouredBlue || s == VertexState::ColouredRed)
      continue;
    const bool next_blue = (p.graph.neighbors(v) & blue) != 0;
    const bool next_red = (p.graph.neighbors(v) & red) != 0;
    if (next_blue && next_red) {
      if (s != VertexState::Dead) return false;
    } else if (next_blue) {
      if (s != VertexState::TintedBlue && s != VertexState::Dead) return false;
    } else if (next_red) {
      if (s != VertexState::TintedRed && s != VertexState::Dead) return false;
    }
  }
  return true;
}

VertexSet legal_moves(const Position& p, Player who) {
  VertexSet moves = 0;
  const VertexState own_tint =
      who == Player::Left ? VertexState::TintedBlue : VertexState::TintedRed;
  for (int v = 0; v < p.graph.order(); ++v) {
    const VertexState s = p.state[static_cast<std::size_t>(v)];
    if (s == VertexState::Free || s == own_tint) moves |= vertex_bit(v);
  }
  return moves;
}

Position apply_move(const Position& p, Player who, int v) {
  if (v < 0 || v >= p.graph.order())
    throw std::invalid_argument("move vertex out of range");
  if (!contains(legal_moves(p, who), v))
    throw std::invalid_argument(std::string("illegal move for ") +
                                to_string(who) + " at vertex " +
                                std::to_string(v));
  Position out = p;
  out.state[static_cast<std::size_t>(v)] = who == Player::Left
                                               ? VertexState::ColouredBlue
                                               : VertexState::ColouredRed;
  const VertexState mine =
      who == Player::Left ? VertexState::TintedBlue : VertexState::TintedRed;
  const VertexState theirs =
      who == Player::Left ? VertexState::TintedRed : VertexState::TintedBlue;
  for_each_vertex(p.graph.neighbors(v), [&](int w) {
    VertexState& s = out.state[static_cast<std::size_t>(w)];
    if (s == VertexState::Free)
      s = mine;
    else if (s == theirs)
      s = VertexState::Dead;
  });
  return out;
}

Position parse_position(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string graph_line, state_line;
  if (!std::getline(in, graph_line))
    throw g6::ParseError("position fixture: missing graph line");
  if (!std::getline(in, state_line))
    throw g6::ParseError("position fixture: missing state line");
  while (!state_line.empty() &&
         (state_line.back() == '\r' || state_line.back() == ' '))
    state_line.pop_back();
  Position p;
  p.graph = g6::parse(graph_line);
  if (static_cast<int>(state_line.size()) != p.graph.order())
    throw g6::ParseError("position fixture: state line length " +
                         std::to_string(state_line.size()) +
                         " does not match order " +
                         std::to_string(p.graph.order()));
  for (char c : state_line) {
    switch (c) {
      case 'F': p.state.push_back(VertexState::Free); break;
      case 'b': p.state.push_back(VertexState::TintedBlue); break;
      case 'r': p.state.push_back(VertexState::TintedRed); break;
      case 'D': p.state.push_back(VertexState::Dead); break;
      case 'B': p.state.push_back(VertexState::ColouredBlue); break;
      case 'R': p.state.push_back(VertexState::ColouredRed); break;
      default:
        throw g6::ParseError(std::string("position fixture: bad state char '") +
                             c + "'");
    }
  }
  if (!is_consistent(p))
    throw g6::ParseError("position fixture: states contradict the colouring");
  return p;
}

std::string emit_position(const Position& p) {
  std::string out = g6::emit(p.graph);
  out.push_back('\n');
  for (VertexState s : p.state) out.push_back(state_char(s));
  out.push_back('\n');
  return out;
}

}  // namespace snortlab
