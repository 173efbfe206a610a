#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "snortlab/graph.hpp"

namespace snortlab::g6 {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Standard graph6 text encoding (optional ">>graph6<<" header accepted).
// Emission never writes the header. Round-trips are labelled identities.
Graph parse(std::string_view text);
std::string emit(const Graph& g);

// Plain-text fixture format: first line is the order n, then one "u v" line
// per edge. Blank lines and lines starting with '#' are ignored.
Graph parse_adjacency_list(std::string_view text);
std::string emit_adjacency_list(const Graph& g);

}  // namespace snortlab::g6
