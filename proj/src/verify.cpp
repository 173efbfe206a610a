#include "snortlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "snortlab/canonical.hpp"
#include "snortlab/chess.hpp"
#include "snortlab/constructions.hpp"
#include "snortlab/enumerate.hpp"
#include "snortlab/opposition.hpp"
#include "snortlab/products.hpp"
#include "snortlab/scan.hpp"
#include "snortlab/solver.hpp"

namespace snortlab::verify {

bool naive_wins_moving_first(const Position& p, Player who) {
  const VertexSet moves = legal_moves(p, who);
  bool win = false;
  for_each_vertex(moves, [&](int v) {
    if (win) return;
    if (!naive_wins_moving_first(apply_move(p, who, v), opponent(who)))
      win = true;
  });
  return win;
}

OutcomeClass naive_outcome(const Graph& g) {
  const Position p = initial_position(g);
  const bool left = naive_wins_moving_first(p, Player::Left);
  const bool right = naive_wins_moving_first(p, Player::Right);
  if (left && right) return OutcomeClass::FirstWins;
  if (!left && !right) return OutcomeClass::SecondWins;
  return left ? OutcomeClass::LeftWins : OutcomeClass::RightWins;
}

namespace {

class Timer {
 public:
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

CheckResult finish(CheckResult r, const Timer& timer) {
  r.seconds = timer.elapsed();
  return r;
}

void note_failure(CheckResult& r, const std::string& what) {
  r.passed = false;
  if (r.detail.empty()) r.detail = what;
}

}  // namespace

CheckResult check_opposition_oracle() {
  Timer timer;
  CheckResult r{"1", "opposability search agrees with brute-force involutions, orders 0-6",
                true, "", 0};
  std::size_t classes_1_to_6 = 0;
  std::size_t checked = 0;
  for (int order = 0; order <= 6; ++order) {
    const std::vector<Graph> graphs = all_graphs(order);
    if (order >= 1) classes_1_to_6 += graphs.size();
    for (const Graph& g : graphs) {
      ++checked;
      const auto found = find_opposition(g);
      const auto all = brute_force_oppositions(g);
      if (found.has_value() != !all.empty()) {
        note_failure(r, "disagreement on a graph of order " +
                            std::to_string(order));
      }
      if (found && !verify_opposition(g, *found) && order > 0)
        note_failure(r, "returned witness fails verification");
    }
  }
  if (classes_1_to_6 != 208)
    note_failure(r, "expected 208 classes over orders 1-6, saw " +
                        std::to_string(classes_1_to_6));
  if (r.passed)
    r.detail = std::to_string(checked) + " graphs checked, exact agreement";
  return finish(std::move(r), timer);
}

CheckResult check_solver_oracle() {
  Timer timer;
  CheckResult r{"2", "memoised+pruned solver equals the naive reference, orders 0-6",
                true, "", 0};
  Solver pruned(Solver::Options{true, std::size_t{1} << 23});
  Solver plain(Solver::Options{false, std::size_t{1} << 23});
  std::size_t checked = 0;
  for (int order = 0; order <= 6; ++order) {
    for (const Graph& g : all_graphs(order)) {
      ++checked;
      const OutcomeClass expect = naive_outcome(g);
      if (pruned.outcome(g) != expect)
        note_failure(r, "pruned solver differs at order " +
                            std::to_string(order));
      if (plain.outcome(g) != expect)
        note_failure(r, "unpruned solver differs at order " +
                            std::to_string(order));
    }
  }
  if (r.passed)
    r.detail = std::to_string(checked) + " graphs, three-way agreement";
  return finish(std::move(r), timer);
}

CheckResult check_minimum_graph_search(int threads) {
  Timer timer;
  CheckResult r{"3a", "unique second-player-win non-opposable graph of minimum order",
                true, "", 0};
  ScanOptions opt;
  opt.scope = ScanOptions::Scope::Graphs;
  opt.min_order = 0;
  opt.max_order = 6;
  opt.threads = threads;
  const SearchReport report = scan(opt, "secondwins & !opposable");
  const std::string expect = canonical_code(figure(FigureId::P3uC3).graph);
  if (report.hits.size() != 1)
    note_failure(r, "expected exactly one hit, saw " +
                        std::to_string(report.hits.size()));
  else if (report.hits[0].order != 6 || report.hits[0].canonical != expect)
    note_failure(r, "hit is not the expected order-6 graph");
  if (r.passed)
    r.detail = "examined " + std::to_string(report.examined) +
               " graphs; single hit at order 6 matches the catalog";
  return finish(std::move(r), timer);
}

CheckResult check_minimum_connected_search(int threads) {
  Timer timer;
  CheckResult r{"3b", "exactly five connected order-7 graphs, matching the catalog",
                true, "", 0};
  ScanOptions opt;
  opt.scope = ScanOptions::Scope::Graphs;
  opt.min_order = 7;
  opt.max_order = 7;
  opt.connected_only = true;
  opt.threads = threads;
  const SearchReport report = scan(opt, "secondwins & !opposable");
  std::vector<std::string> got;
  for (const ScanHit& hit : report.hits) got.push_back(hit.canonical);
  std::sort(got.begin(), got.end());
  std::vector<std::string> expect;
  for (FigureId id : {FigureId::SevenVertex1, FigureId::SevenVertex2,
                      FigureId::SevenVertex3, FigureId::SevenVertex4,
                      FigureId::SevenVertex5})
    expect.push_back(canonical_code(figure(id).graph));
  std::sort(expect.begin(), expect.end());
  if (got != expect)
    note_failure(r, "hits do not match the five catalog graphs (got " +
                        std::to_string(got.size()) + ")");
  if (r.passed)
    r.detail = "examined " + std::to_string(report.examined) +
               " connected graphs; five hits match the catalog";
  return finish(std::move(r), timer);
}

CheckResult check_minimum_tree_search(bool full, int threads) {
  Timer timer;
  CheckResult r{"3c", "unique minimal second-player-win trees (even and odd order)",
                true, "", 0};
  ScanOptions even_opt;
  even_opt.scope = ScanOptions::Scope::Trees;
  even_opt.min_order = 1;
  even_opt.max_order = 12;
  even_opt.threads = threads;
  const SearchReport evens = scan(even_opt, "secondwins & !opposable");
  std::size_t even_hits = 0;
  bool even_ok = true;
  for (const ScanHit& hit : evens.hits) {
    if (hit.order % 2 != 0) continue;  // odd orders re-checked below
    ++even_hits;
    if (hit.order != 12 ||
        hit.canonical != canonical_code(figure(FigureId::Tree12).graph))
      even_ok = false;
  }
  if (even_hits != 1 || !even_ok)
    note_failure(r, "even orders <= 12: expected the unique order-12 tree");
  for (const ScanHit& hit : evens.hits)
    if (hit.order % 2 == 1)
      note_failure(r, "unexpected odd-order hit below 13");

  ScanOptions odd_opt = even_opt;
  odd_opt.min_order = 13;
  odd_opt.max_order = full ? 15 : 13;
  const SearchReport odds = scan(odd_opt, "secondwins & !opposable");
  if (full) {
    std::size_t odd_hits = 0;
    bool odd_ok = true;
    for (const ScanHit& hit : odds.hits) {
      if (hit.order % 2 == 0) continue;
      ++odd_hits;
      if (hit.order != 15 ||
          hit.canonical != canonical_code(figure(FigureId::Tree15).graph))
        odd_ok = false;
    }
    if (odd_hits != 1 || !odd_ok)
      note_failure(r, "odd orders <= 15: expected the unique order-15 tree");
  } else {
    if (!odds.hits.empty())
      note_failure(r, "unexpected hit among trees of order 13");
    Solver solver;
    const Graph tree15 = figure(FigureId::Tree15).graph;
    if (solver.outcome(tree15) != OutcomeClass::SecondWins ||
        find_opposition(tree15))
      note_failure(r, "order-15 tree fixture check failed");
  }
  if (r.passed)
    r.detail = "examined " + std::to_string(evens.examined + odds.examined) +
               " trees" + (full ? "" : " (fast mode: odd scan stops at 13)");
  return finish(std::move(r), timer);
}

CheckResult check_board_outcomes(int threads) {
  Timer timer;
  CheckResult r{"4a", "solved board outcomes match the closed-form table, sides <= 4",
                true, "", 0};
  struct Job {
    Piece piece;
    int rows, cols;
    Prediction expect;
  };
  std::vector<Job> jobs;
  for (Piece piece : {Piece::King, Piece::Knight, Piece::Bishop, Piece::Rook,
                      Piece::Queen}) {
    for (int rows = 1; rows <= 4; ++rows) {
      for (int cols = 1; cols <= 4; ++cols) {
        const Prediction expect = predicted_outcome(piece, rows, cols);
        if (expect == Prediction::Unknown) continue;
        jobs.push_back({piece, rows, cols, expect});
      }
    }
  }
  (void)threads;  // boards are small; a single solver is fastest
  Solver solver;
  for (const Job& job : jobs) {
    const OutcomeClass got =
        solver.outcome(chess_grid(job.piece, job.rows, job.cols));
    const bool match =
        (job.expect == Prediction::FirstWins &&
         got == OutcomeClass::FirstWins) ||
        (job.expect == Prediction::SecondWins &&
         got == OutcomeClass::SecondWins);
    if (!match)
      note_failure(r, std::string(piece_name(job.piece)) + " " +
                          std::to_string(job.rows) + "x" +
                          std::to_string(job.cols) + " solved to " +
                          to_string(got));
  }
  if (r.passed)
    r.detail = std::to_string(jobs.size()) + " boards solved, all as predicted";
  return finish(std::move(r), timer);
}

CheckResult check_board_witnesses() {
  Timer timer;
  CheckResult r{"4b", "constructive board witnesses verify for all sides <= 8",
                true, "", 0};
  std::size_t verified = 0;
  for (Piece piece : {Piece::King, Piece::Knight, Piece::Bishop, Piece::Rook,
                      Piece::Queen}) {
    for (int rows = 1; rows <= 8; ++rows) {
      for (int cols = 1; cols <= 8; ++cols) {
        const ChessWitness w = chess_witness(piece, rows, cols);
        const Graph g = chess_grid(piece, rows, cols);
        if (piece == Piece::Queen && rows % 2 == 0 && cols % 2 == 0) {
          if (w.constructive())
            note_failure(r, "queen even-by-even board returned a witness");
          continue;
        }
        if (!w.constructive()) {
          note_failure(r, std::string(piece_name(piece)) +
                              " board missing a witness");
          continue;
        }
        if (w.opposition && !verify_opposition(g, *w.opposition))
          note_failure(r, "board opposition failed verification");
        if (w.almost && !verify_almost_witness(g, *w.almost))
          note_failure(r, "board deletion witness failed verification");
        ++verified;
      }
    }
  }
  if (r.passed)
    r.detail = std::to_string(verified) + " witnesses verified";
  return finish(std::move(r), timer);
}

CheckResult check_product_lifts() {
  Timer timer;
  CheckResult r{"5a", "lifted witnesses verify for all six preserving products",
                true, "", 0};
  std::vector<std::pair<Graph, Opposition>> opposable;
  for (int order = 0; order <= 6; ++order) {
    for (const Graph& g : all_graphs(order)) {
      if (auto f = find_opposition(g)) opposable.emplace_back(g, *f);
    }
  }
  std::vector<Graph> factors;
  for (int order = 0; order <= 4; ++order) {
    for (const Graph& h : all_graphs(order)) factors.push_back(h);
  }
  const std::vector<NamedProduct> preserving = {
      NamedProduct::Cartesian,     NamedProduct::Strong,
      NamedProduct::Tensor,        NamedProduct::Lexicographic,
      NamedProduct::Conormal,      NamedProduct::Homomorphic};
  std::size_t lifted = 0;
  for (const auto& [g, f] : opposable) {
    for (const Graph& h : factors) {
      for (NamedProduct name : preserving) {
        const ProductFormula formula = named_formula(name);
        const Opposition big = lift_opposition(f, g, h, formula);
        const ProductGraph p = build_product(g, h, formula);
        if (!verify_opposition(p.graph, big)) {
          note_failure(r, std::string("lift through ") + product_name(name) +
                              " failed verification");
        }
        ++lifted;
      }
    }
  }
  if (r.passed)
    r.detail = std::to_string(lifted) + " lifts (" +
               std::to_string(opposable.size()) + " opposable bases x " +
               std::to_string(factors.size()) + " factors x 6 products)";
  return finish(std::move(r), timer);
}

CheckResult check_condition_table() {
  Timer timer;
  CheckResult r{"5b", "lifting condition holds for six products and fails for cihpromomoh",
                true, "", 0};
  for (NamedProduct name :
       {NamedProduct::Cartesian, NamedProduct::Strong, NamedProduct::Tensor,
        NamedProduct::Lexicographic, NamedProduct::Conormal,
        NamedProduct::Homomorphic}) {
    if (!satisfies_opposability_condition(named_formula(name)))
      note_failure(r, std::string(product_name(name)) +
                          " unexpectedly fails the condition");
  }
  if (satisfies_opposability_condition(
          named_formula(NamedProduct::Cihpromomoh)))
    note_failure(r, "cihpromomoh unexpectedly passes the condition");
  if (r.passed) r.detail = "seven formulas checked";
  return finish(std::move(r), timer);
}

CheckResult check_almost_regressions() {
  Timer timer;
  CheckResult r{"6", "first-player mirroring regressions (deletion witnesses)",
                true, "", 0};
  const Graph ag = figure(FigureId::AlmostAG).graph;
  // Labels a..g are 0..6; the expected unique deletion set is {c,d,g}.
  const VertexSet cdg = vertex_bit(2) | vertex_bit(3) | vertex_bit(6);
  const std::vector<VertexSet> sets = almost_witness_sets(ag);
  if (sets.size() != 1 || sets[0] != cdg)
    note_failure(r, "seven-vertex tree: deletion set is not uniquely {c,d,g}");
  if (auto w = find_almost_opposition(ag); !w || !verify_almost_witness(ag, *w))
    note_failure(r, "seven-vertex tree witness missing or invalid");
  if (find_compatible_almost_opposition(ag))
    note_failure(r, "seven-vertex tree unexpectedly has a compatible witness");

  const Graph ag_cart_p3 =
      build_product(ag, path_graph(3), named_formula(NamedProduct::Cartesian))
          .graph;
  if (find_almost_opposition(ag_cart_p3))
    note_failure(r, "AG box P3 is unexpectedly almost-winnable for the first player");
  const Graph ag_strong_p4 =
      build_product(ag, path_graph(4), named_formula(NamedProduct::Strong))
          .graph;
  if (find_almost_opposition(ag_strong_p4))
    note_failure(r, "AG strong P4 unexpectedly has a deletion witness");
  const ProductGraph ag_strong_p3 =
      build_product(ag, path_graph(3), named_formula(NamedProduct::Strong));
  if (auto w = find_almost_opposition(ag_strong_p3.graph);
      !w || !verify_almost_witness(ag_strong_p3.graph, *w))
    note_failure(r, "AG strong P3 should have a deletion witness");
  // The c,d,g columns specifically leave an opposable remainder.
  VertexSet columns = 0;
  for (int x : {2, 3, 6})
    columns |= h_fiber(ag_strong_p3, x);
  const InducedSubgraph rest =
      induced_subgraph(ag_strong_p3.graph, ag_strong_p3.graph.vertices() & ~columns);
  if (!find_opposition(rest.graph))
    note_failure(r, "AG strong P3 minus the c,d,g columns is not opposable");

  for (int rows = 1; rows <= 5; ++rows) {
    for (int cols = 1; cols <= 5; ++cols) {
      const Graph grid =
          build_product(path_graph(rows), path_graph(cols),
                        named_formula(NamedProduct::Cartesian))
              .graph;
      const bool both_even = rows % 2 == 0 && cols % 2 == 0;
      const bool opposable = find_opposition(grid).has_value();
      const bool almost = find_almost_opposition(grid).has_value();
      if (both_even && (!opposable || almost))
        note_failure(r, "even-by-even grid misclassified");
      if (!both_even && (opposable || !almost))
        note_failure(r, "grid with an odd side misclassified");
    }
  }

  if (find_almost_opposition(broom_graph(8, 2)))
    note_failure(r, "broom(8,2) unexpectedly has a deletion witness");
  if (find_almost_opposition(broom_graph(5, 3)))
    note_failure(r, "broom(5,3) unexpectedly has a deletion witness");
  if (r.passed)
    r.detail = "catalog, products, 25 grids and two brooms all as expected";
  return finish(std::move(r), timer);
}

CheckResult check_firework() {
  Timer timer;
  CheckResult r{"7", "firework construction keeps the second-player win at desk scale",
                true, "", 0};
  const Graph base = figure(FigureId::P3uC3).graph;
  const int u = 3;  // triangle vertex
  const int v = 1;  // path centre
  const FireworkPreconditions pre = check_firework_preconditions(base, u, v);
  if (!pre.response_pair || !pre.distance_ok)
    note_failure(r, "response-pair preconditions do not hold");
  const Graph fw = firework(base, u, v, 6);
  if (fw.order() != 18) note_failure(r, "6-firework should have 18 vertices");
  Solver solver;
  if (solver.outcome(fw) != OutcomeClass::SecondWins)
    note_failure(r, "6-firework did not solve to a second-player win");

  // Structural check at the theorem's own scale: leaves only, split evenly.
  const Graph tree = figure(FigureId::ResponsePairTree).graph;
  const Graph big = firework(tree, 4, 7, 14);
  if (big.order() != 42)
    note_failure(r, "14-firework of the 14-vertex tree should have 42 vertices");
  int leaves_u = 0, leaves_v = 0;
  for (int w = tree.order(); w < big.order(); ++w) {
    if (big.degree(w) != 1) note_failure(r, "added vertex is not a leaf");
    if (contains(big.neighbors(w), 4)) ++leaves_u;
    if (contains(big.neighbors(w), 7)) ++leaves_v;
  }
  if (leaves_u != 14 || leaves_v != 14)
    note_failure(r, "leaves are not split evenly between the pair");
  if (r.passed)
    r.detail = "18-vertex instance solved SecondWins; 42-vertex construction sound";
  return finish(std::move(r), timer);
}

CheckResult check_symmetric_forms() {
  Timer timer;
  CheckResult r{"8a", "untinted outcomes are first- or second-player wins, orders <= 7",
                true, "", 0};
  Solver solver;
  std::size_t checked = 0;
  for (int order = 0; order <= 7; ++order) {
    for (const Graph& g : all_graphs(order)) {
      ++checked;
      const OutcomeClass o = solver.outcome(g);
      if (o != OutcomeClass::FirstWins && o != OutcomeClass::SecondWins)
        note_failure(r, "asymmetric outcome at order " + std::to_string(order));
    }
  }
  if (r.passed) r.detail = std::to_string(checked) + " graphs checked";
  return finish(std::move(r), timer);
}

CheckResult check_mirror_playouts(std::uint64_t seed) {
  Timer timer;
  CheckResult r{"8b", "mirror responses stay legal through random playouts",
                true, "", 0};
  std::mt19937_64 rng(seed);
  std::size_t graphs = 0, playouts = 0;
  for (int order = 0; order <= 7; ++order) {
    for (const Graph& g : all_graphs(order)) {
      const auto f = find_opposition(g);
      if (!f) continue;
      ++graphs;
      for (int round = 0; round < 1000; ++round) {
        ++playouts;
        Position p = initial_position(g);
        Player mover = Player::Left;
        for (;;) {
          const std::vector<int> moves = set_to_list(legal_moves(p, mover));
          if (moves.empty()) break;  // first player ran out: mirror held
          const int pick = moves[std::uniform_int_distribution<std::size_t>(
              0, moves.size() - 1)(rng)];
          p = apply_move(p, mover, pick);
          const int reply = (*f)[static_cast<std::size_t>(pick)];
          if (!contains(legal_moves(p, opponent(mover)), reply)) {
            note_failure(r, "mirror reply was illegal");
            break;
          }
          p = apply_move(p, opponent(mover), reply);
        }
        if (!r.passed) break;
      }
      if (!r.passed) break;
    }
  }
  if (r.passed)
    r.detail = std::to_string(playouts) + " playouts over " +
               std::to_string(graphs) + " graphs, no illegal reply";
  return finish(std::move(r), timer);
}

std::vector<CheckResult> run_suite(const SuiteOptions& options,
                                   std::ostream* progress) {
  std::vector<CheckResult> results;
  const auto run = [&](CheckResult result) {
    if (progress) {
      *progress << (result.passed ? "[PASS] " : "[FAIL] ") << result.id << "  "
                << result.name << " (" << result.detail << ", "
                << static_cast<long>(result.seconds * 1000) << " ms)\n";
      progress->flush();
    }
    results.push_back(std::move(result));
  };
  run(check_opposition_oracle());
  run(check_solver_oracle());
  run(check_minimum_graph_search(options.threads));
  run(check_minimum_connected_search(options.threads));
  run(check_minimum_tree_search(options.full, options.threads));
  run(check_board_outcomes(options.threads));
  run(check_board_witnesses());
  run(check_product_lifts());
  run(check_condition_table());
  run(check_almost_regressions());
  run(check_firework());
  run(check_symmetric_forms());
  run(check_mirror_playouts(options.seed));
  return results;
}

}  // namespace snortlab::verify
