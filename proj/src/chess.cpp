#include "snortlab/chess.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace snortlab {

const char* piece_name(Piece p) {
  switch (p) {
    case Piece::King: return "king";
    case Piece::Knight: return "knight";
    case Piece::Bishop: return "bishop";
    case Piece::Rook: return "rook";
    case Piece::Queen: return "queen";
  }
  return "?";
}

std::optional<Piece> parse_piece(std::string_view name) {
  for (Piece p : {Piece::King, Piece::Knight, Piece::Bishop, Piece::Rook,
                  Piece::Queen})
    if (name == piece_name(p)) return p;
  return std::nullopt;
}

namespace {

bool attacks(Piece piece, int x1, int y1, int x2, int y2) {
  if (x1 == x2 && y1 == y2) return false;
  const int dx = std::abs(x1 - x2);
  const int dy = std::abs(y1 - y2);
  switch (piece) {
    case Piece::King: return dx <= 1 && dy <= 1;
    case Piece::Knight: return (dx == 1 && dy == 2) || (dx == 2 && dy == 1);
    case Piece::Bishop: return dx == dy;
    case Piece::Rook: return dx == 0 || dy == 0;
    case Piece::Queen: return dx == 0 || dy == 0 || dx == dy;
  }
  return false;
}

void check_board(int rows, int cols) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("board sides must be at least 1");
  if (static_cast<long>(rows) * cols > kMaxVertices)
    throw std::length_error("board exceeds the 64-square limit");
}

}  // namespace

Graph chess_grid(Piece piece, int rows, int cols) {
  check_board(rows, cols);
  Graph g(rows * cols);
  for (int a = 0; a < rows * cols; ++a) {
    for (int b = a + 1; b < rows * cols; ++b) {
      if (attacks(piece, a / cols, a % cols, b / cols, b % cols))
        g.add_edge(a, b);
    }
  }
  return g;
}

const char* to_string(Prediction p) {
  switch (p) {
    case Prediction::FirstWins: return "FirstWins";
    case Prediction::SecondWins: return "SecondWins";
    case Prediction::Unknown: return "Unknown";
  }
  return "?";
}

Prediction predicted_outcome(Piece piece, int rows, int cols) {
  check_board(rows, cols);
  const bool r_even = rows % 2 == 0;
  const bool c_even = cols % 2 == 0;
  switch (piece) {
    case Piece::King: return Prediction::FirstWins;
    case Piece::Knight:
    case Piece::Bishop:
      return (r_even || c_even) ? Prediction::SecondWins
                                : Prediction::FirstWins;
    case Piece::Rook:
      return (r_even && c_even) ? Prediction::SecondWins
                                : Prediction::FirstWins;
    case Piece::Queen:
      if (!r_even || !c_even) return Prediction::FirstWins;
      return Prediction::Unknown;
  }
  return Prediction::Unknown;
}

namespace {

// The usual board reversals; all four are automorphisms of every piece grid.
VertexMap map_reverse_rows(int rows, int cols) {
  VertexMap f(static_cast<std::size_t>(rows * cols));
  for (int x = 0; x < rows; ++x)
    for (int y = 0; y < cols; ++y)
      f[static_cast<std::size_t>(x * cols + y)] = (rows - 1 - x) * cols + y;
  return f;
}

VertexMap map_reverse_cols(int rows, int cols) {
  VertexMap f(static_cast<std::size_t>(rows * cols));
  for (int x = 0; x < rows; ++x)
    for (int y = 0; y < cols; ++y)
      f[static_cast<std::size_t>(x * cols + y)] = x * cols + (cols - 1 - y);
  return f;
}

VertexMap map_reverse_both(int rows, int cols) {
  VertexMap f(static_cast<std::size_t>(rows * cols));
  for (int x = 0; x < rows; ++x)
    for (int y = 0; y < cols; ++y)
      f[static_cast<std::size_t>(x * cols + y)] =
          (rows - 1 - x) * cols + (cols - 1 - y);
  return f;
}

VertexSet row_set(int x, int cols) {
  VertexSet s = 0;
  for (int y = 0; y < cols; ++y) s |= vertex_bit(x * cols + y);
  return s;
}

VertexSet col_set(int y, int rows, int cols) {
  VertexSet s = 0;
  for (int x = 0; x < rows; ++x) s |= vertex_bit(x * cols + y);
  return s;
}

AlmostWitness make_almost(const Graph& g, int anchor, VertexSet s,
                          const VertexMap& full_map) {
  AlmostWitness w;
  w.u = anchor;
  w.s = s;
  w.opposition.assign(static_cast<std::size_t>(g.order()), -1);
  for (int v = 0; v < g.order(); ++v)
    if (!contains(s, v)) w.opposition[static_cast<std::size_t>(v)] =
        full_map[static_cast<std::size_t>(v)];
  if (!verify_almost_witness(g, w))
    throw std::logic_error("constructed board witness failed verification");
  return w;
}

Opposition make_opposition(const Graph& g, const VertexMap& f) {
  if (!verify_opposition(g, f))
    throw std::logic_error("constructed board opposition failed verification");
  return f;
}

}  // namespace

ChessWitness chess_witness(Piece piece, int rows, int cols) {
  check_board(rows, cols);
  const Graph g = chess_grid(piece, rows, cols);
  const bool r_even = rows % 2 == 0;
  const bool c_even = cols % 2 == 0;
  const int cx = (rows - 1) / 2;
  const int cy = (cols - 1) / 2;
  const int centre = cx * cols + cy;
  ChessWitness w;

  switch (piece) {
    case Piece::King: {
      // Delete the middle rows-by-cols block; point reflection on the rest.
      VertexSet s = 0;
      for (int x : r_even ? std::vector<int>{rows / 2 - 1, rows / 2}
                          : std::vector<int>{cx})
        for (int y : c_even ? std::vector<int>{cols / 2 - 1, cols / 2}
                            : std::vector<int>{cy})
          s |= vertex_bit(x * cols + y);
      const int anchor = std::countr_zero(s);
      w.almost = make_almost(g, anchor, s, map_reverse_both(rows, cols));
      return w;
    }
    case Piece::Knight:
    case Piece::Bishop: {
      if (r_even) {
        w.opposition = make_opposition(g, map_reverse_rows(rows, cols));
      } else if (c_even) {
        w.opposition = make_opposition(g, map_reverse_cols(rows, cols));
      } else {
        const VertexSet s = piece == Piece::Knight
                                ? vertex_bit(centre)
                                : g.closed_neighborhood(centre);
        w.almost = make_almost(g, centre, s, map_reverse_both(rows, cols));
      }
      return w;
    }
    case Piece::Rook: {
      if (r_even && c_even) {
        w.opposition = make_opposition(g, map_reverse_both(rows, cols));
      } else if (!r_even && !c_even) {
        w.almost = make_almost(g, centre, g.closed_neighborhood(centre),
                               map_reverse_both(rows, cols));
      } else {
        const VertexSet s =
            r_even ? col_set(cy, rows, cols) : row_set(cx, cols);
        const int anchor = std::countr_zero(s);
        w.almost = make_almost(g, anchor, s, map_reverse_both(rows, cols));
      }
      return w;
    }
    case Piece::Queen: {
      if (r_even && c_even) return w;  // no constructive witness known
      if (!r_even && !c_even) {
        w.almost = make_almost(g, centre, g.closed_neighborhood(centre),
                               map_reverse_both(rows, cols));
      } else {
        const VertexSet s =
            r_even ? col_set(cy, rows, cols) : row_set(cx, cols);
        const int anchor = std::countr_zero(s);
        w.almost = make_almost(g, anchor, s, map_reverse_both(rows, cols));
      }
      return w;
    }
  }
  return w;
}

}  // namespace snortlab
