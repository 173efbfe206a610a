#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "snortlab/graph.hpp"

namespace snortlab {

enum class Player : std::uint8_t { Left, Right };

constexpr Player opponent(Player p) {
  return p == Player::Left ? Player::Right : Player::Left;
}
const char* to_string(Player p);

// Left colours blue, Right colours red. A tinted vertex is uncoloured but
// reserved: blue-tinted vertices are playable only by Left, red-tinted only
// by Right, and a vertex tinted both ways is dead for both.
enum class VertexState : std::uint8_t {
  Free,
  TintedBlue,
  TintedRed,
  Dead,
  ColouredBlue,
  ColouredRed,
};
char state_char(VertexState s);

enum class OutcomeClass : std::uint8_t {
  FirstWins,
  SecondWins,
  LeftWins,
  RightWins,
};
const char* to_string(OutcomeClass o);

struct Position {
  Graph graph;
  std::vector<VertexState> state;
};

// All vertices start untinted.
Position initial_position(const Graph& g);

// Colour-derived constraints hold: an uncoloured vertex next to a blue
// coloured vertex must carry a blue tint (Dead if next to both colours).
// Tints without a coloured neighbour are allowed; they model positions whose
// reservations are given as data rather than produced by play.
bool is_consistent(const Position& p);

VertexSet legal_moves(const Position& p, Player who);

// Colours v for `who` and tints v's uncoloured neighbours; a neighbour
// already carrying the opposite tint becomes dead. Throws on illegal moves
// and leaves the input untouched.
Position apply_move(const Position& p, Player who, int v);

// Fixture format: a graph6 line followed by a state line, one character per
// vertex: F free, b/r tinted, D dead, B/R coloured.
Position parse_position(std::string_view text);
std::string emit_position(const Position& p);

}  // namespace snortlab
