#pragma once

#include <string>
#include <vector>

#include "snortlab/graph.hpp"

namespace snortlab {

// Colour refinement to the coarsest equitable partition that respects the
// initial colours. Returned colour ids are dense, start at 0, and are ordered
// by an isomorphism-invariant signature, so two colour-isomorphic graphs get
// matching refined colourings.
std::vector<int> refine_colors(const Graph& g, std::vector<int> colors);

// Canonical byte string: equal codes iff the graphs are isomorphic (by a
// colour-preserving isomorphism for the coloured overload). Deterministic
// across runs and relabellings.
std::string canonical_code(const Graph& g);
std::string canonical_code(const Graph& g, const std::vector<int>& colors);

}  // namespace snortlab
