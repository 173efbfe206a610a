#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "snortlab/position.hpp"

namespace snortlab {

struct SolverStats {
  std::uint64_t nodes = 0;
  std::uint64_t exact_hits = 0;
  std::uint64_t canonical_hits = 0;
};

struct SolverOptions {
  // Skip moves dominated under residual-neighbourhood containment with
  // matching tints; twins collapse to the lowest index. Never changes
  // results (enforced by the oracle suites), only the work done.
  bool domination_pruning = true;
  // Canonical table entries kept before the cache is dropped.
  std::size_t memo_limit = 1u << 23;
};

// Alternating win/loss search under normal play. Memoisation keys erase
// coloured and dead vertices: a key is the canonical form of the residual
// graph together with its tints, taken relative to the player to move. Keys
// are therefore valid across graphs and a solver instance may be reused; it
// is not thread-safe, use one instance per thread.
class Solver {
 public:
  using Options = SolverOptions;

  explicit Solver(Options options = {}) : options_(options) {}

  bool wins_moving_first(const Position& p, Player who);
  OutcomeClass outcome_of_position(const Position& p);
  OutcomeClass outcome(const Graph& g);

  // (u,v) is a response pair when Left playing u answered by Right on v
  // leaves a position that Left, moving next, loses.
  bool is_response_pair(const Graph& g, int u, int v);
  std::vector<std::pair<int, int>> response_pairs(const Graph& g);

  const SolverStats& stats() const { return stats_; }
  void clear();

 private:
  struct State {
    VertexSet alive;  // uncoloured, not dead
    VertexSet blue;   // blue-tinted subset of alive
    VertexSet red;    // red-tinted subset of alive
  };

  void set_graph(const Graph& g);
  State state_of(const Position& p) const;
  bool wins(const State& s, Player who);
  std::string canonical_key(const State& s, Player who) const;

  struct ExactKey {
    VertexSet alive, mine, theirs;
    bool operator==(const ExactKey&) const = default;
  };
  struct ExactKeyHash {
    std::size_t operator()(const ExactKey& k) const {
      std::uint64_t h = k.alive * 0x9e3779b97f4a7c15ull;
      h ^= k.mine + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h ^= k.theirs + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      return static_cast<std::size_t>(h);
    }
  };

  Options options_;
  Graph graph_;
  bool has_graph_ = false;
  SolverStats stats_;
  std::unordered_map<ExactKey, bool, ExactKeyHash> exact_memo_;
  std::unordered_map<std::string, bool> canonical_memo_;
};

// One-shot convenience wrapper.
OutcomeClass solve_outcome(const Graph& g, bool domination_pruning = true);

}  // namespace snortlab
