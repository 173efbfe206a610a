#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "snortlab/graph.hpp"
#include "snortlab/position.hpp"

namespace snortlab {

// Predicate atoms over a candidate graph: firstwins, secondwins, leftwins,
// rightwins, opposable, almost, connected. Combined with the usual boolean
// grammar (!, &, |, =>, parentheses). Atoms are evaluated lazily, so cheap
// structure checks can gate expensive solves.
struct ScanOptions {
  enum class Scope { Graphs, Trees };
  Scope scope = Scope::Graphs;
  int min_order = 0;
  int max_order = 0;
  bool connected_only = false;  // graphs scope only; trees are connected
  int threads = 1;              // 0 picks the hardware thread count
  bool early_exit = false;      // stop at the first hit (sequential)
  bool domination_pruning = true;
};

struct ScanHit {
  int sequence = 0;  // position in the enumeration stream
  int order = 0;
  std::string graph6;
  std::string canonical;
  OutcomeClass outcome = OutcomeClass::FirstWins;
  bool opposable = false;
  bool connected = false;
  std::optional<bool> almost;  // only evaluated when the predicate needs it
};

struct SearchReport {
  std::string scope;
  std::string predicate;
  std::vector<ScanHit> hits;              // in enumeration order
  std::map<int, std::size_t> hit_counts;  // per order
  std::size_t examined = 0;
  double wall_seconds = 0.0;
};

// Streams every candidate in scope through the predicate. Reports are
// deterministic across runs and thread counts (wall time aside).
SearchReport scan(const ScanOptions& options, const std::string& predicate);

}  // namespace snortlab
