#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "snortlab/graph.hpp"

namespace snortlab {

// An opposition is a fixed-point-free involutive automorphism f with
// f(v) outside N[v] for every v. Stored as a plain vertex map.
using Opposition = VertexMap;

// Checks each defining clause independently: bijective automorphism,
// involution, no fixed points, and image outside the closed neighbourhood.
bool verify_opposition(const Graph& g, const VertexMap& f);

// Backtracking search over perfect matchings of the complement whose edge
// pairs all satisfy the pair condition (every two matching edges induce K4,
// C4 or two disjoint edges in the complement). Returns the opposition given
// by matched partners, or nothing. The empty graph counts as opposable.
std::optional<Opposition> find_opposition(const Graph& g);

// Enumerates every opposition; the callback returns false to stop early.
void for_each_opposition(const Graph& g,
                         const std::function<bool(const Opposition&)>& visit);

// Independent oracle: all fixed-point-free involutions (perfect pairings of
// the vertex indices) filtered by verify_opposition. Guarded to order <= 10.
std::vector<Opposition> brute_force_oppositions(const Graph& g);

struct AdmissibleSet {
  int u;        // anchor with u in s and s within N[u]
  VertexSet s;
};

// All admissible sets, anchors ascending and set masks ascending, with each
// set reported once (under its smallest anchor). The degree cap bounds the
// 2^deg(u) enumeration per anchor.
std::vector<AdmissibleSet> admissible_sets(const Graph& g, int degree_cap = 20);

struct AlmostWitness {
  int u;                 // admissibility anchor
  VertexSet s;           // admissible set removed from the graph
  VertexMap opposition;  // over original labels; -1 on s
  // Involutive automorphism of the whole graph agreeing with the opposition
  // off s, present only for compatible witnesses.
  std::optional<VertexMap> compatible;
};

bool verify_almost_witness(const Graph& g, const AlmostWitness& w);

// First admissible set whose removal leaves an opposable graph. Sets leaving
// an odd number of vertices are skipped up front.
std::optional<AlmostWitness> find_almost_opposition(const Graph& g,
                                                    int degree_cap = 20);

// Every admissible set whose removal leaves an opposable graph.
std::vector<VertexSet> almost_witness_sets(const Graph& g, int degree_cap = 20);

// Searches, per admissible set and per opposition f of the remainder, for an
// involutive extension of f to an automorphism of the whole graph.
std::optional<AlmostWitness> find_compatible_almost_opposition(
    const Graph& g, int degree_cap = 20);

enum class DecompositionStatus {
  Valid,
  NotAPartition,
  InvalidPartOpposition,
  CrossPairViolation,
};
const char* to_string(DecompositionStatus s);

struct DecompositionResult {
  DecompositionStatus status;
  std::optional<VertexMap> stitched;  // global opposition when Valid
};

// Checks that the parts partition the vertices, that each supplied map is an
// opposition of its induced part, and that every pair of matched pairs from
// distinct parts induces C4, 2K2 or 4K1. On success the stitched global map
// is returned and has been re-verified as an opposition.
DecompositionResult verify_decomposition(const Graph& g,
                                         const std::vector<VertexSet>& parts,
                                         const std::vector<Opposition>& opps);

}  // namespace snortlab
