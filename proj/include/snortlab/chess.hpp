#pragma once

#include <optional>
#include <string_view>

#include "snortlab/graph.hpp"
#include "snortlab/opposition.hpp"

namespace snortlab {

enum class Piece { King, Knight, Bishop, Rook, Queen };

const char* piece_name(Piece p);
std::optional<Piece> parse_piece(std::string_view name);

// Board squares (x,y), 0 <= x < rows, 0 <= y < cols, at flat index x*cols+y.
// Two squares are adjacent when the piece placed on one attacks the other:
//   King:   Chebyshev distance 1
//   Knight: (|dx|,|dy|) is (1,2) or (2,1)
//   Bishop: |dx| = |dy| > 0
//   Rook:   same row or same column
//   Queen:  rook or bishop
Graph chess_grid(Piece piece, int rows, int cols);

enum class Prediction { FirstWins, SecondWins, Unknown };
const char* to_string(Prediction p);

// Closed-form winner table:
//   King:   first player wins always
//   Knight: second player wins iff rows or cols is even
//   Bishop: second player wins iff rows or cols is even
//   Rook:   second player wins iff rows and cols are both even
//   Queen:  first player wins when a side is odd; open when both are even
Prediction predicted_outcome(Piece piece, int rows, int cols);

// Constructive witness behind the prediction: a full-board opposition where
// the second player wins, an admissible deletion plus remainder opposition
// where the first player wins, and neither for the open queen case. Every
// returned witness has passed its verification suite.
struct ChessWitness {
  std::optional<Opposition> opposition;
  std::optional<AlmostWitness> almost;

  bool constructive() const { return opposition || almost; }
};

ChessWitness chess_witness(Piece piece, int rows, int cols);

}  // namespace snortlab
