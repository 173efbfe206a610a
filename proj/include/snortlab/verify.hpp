#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "snortlab/position.hpp"

namespace snortlab::verify {

// Reference solver: plain unmemoised alternating recursion in ascending
// vertex order, no pruning, no transposition detection. Exists only to
// cross-check the production solver and shares no code with it.
bool naive_wins_moving_first(const Position& p, Player who);
OutcomeClass naive_outcome(const Graph& g);

struct CheckResult {
  std::string id;      // short stable identifier, e.g. "3a"
  std::string name;    // what the check establishes
  bool passed = false;
  std::string detail;  // counts, first failure, and similar
  double seconds = 0.0;
};

struct SuiteOptions {
  // full runs the tree scans to order 15; fast stops the odd scan at 13 and
  // checks the order-15 tree fixture directly.
  bool full = false;
  int threads = 0;  // 0 picks the hardware thread count
  std::uint64_t seed = 12345;
};

// The standalone verification checks, in reporting order.
CheckResult check_opposition_oracle();
CheckResult check_solver_oracle();
CheckResult check_minimum_graph_search(int threads);
CheckResult check_minimum_connected_search(int threads);
CheckResult check_minimum_tree_search(bool full, int threads);
CheckResult check_board_outcomes(int threads);
CheckResult check_board_witnesses();
CheckResult check_product_lifts();
CheckResult check_condition_table();
CheckResult check_almost_regressions();
CheckResult check_firework();
CheckResult check_symmetric_forms();
CheckResult check_mirror_playouts(std::uint64_t seed);

std::vector<CheckResult> run_suite(const SuiteOptions& options,
                                   std::ostream* progress = nullptr);

}  // namespace snortlab::verify
