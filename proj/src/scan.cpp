#include "snortlab/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "snortlab/boolexpr.hpp"
#include "snortlab/canonical.hpp"
#include "snortlab/enumerate.hpp"
#include "snortlab/graph6.hpp"
#include "snortlab/opposition.hpp"
#include "snortlab/solver.hpp"

namespace snortlab {

namespace {

enum PredicateAtom {
  kFirstWins = 0,
  kSecondWins,
  kLeftWins,
  kRightWins,
  kOpposable,
  kAlmost,
  kConnected,
};

const std::vector<std::string>& predicate_atom_names() {
  static const std::vector<std::string> names = {
      "firstwins", "secondwins", "leftwins",  "rightwins",
      "opposable", "almost",     "connected"};
  return names;
}

// Per-candidate lazy atom evaluation with caching, so a predicate like
// "connected & secondwins" never solves disconnected graphs.
struct CandidateFacts {
  const Graph& g;
  Solver& solver;
  std::optional<OutcomeClass> outcome;
  std::optional<bool> opposable;
  std::optional<bool> almost;
  std::optional<bool> connected;

  OutcomeClass get_outcome() {
    if (!outcome) outcome = solver.outcome(g);
    return *outcome;
  }
  bool atom(int id) {
    switch (id) {
      case kFirstWins: return get_outcome() == OutcomeClass::FirstWins;
      case kSecondWins: return get_outcome() == OutcomeClass::SecondWins;
      case kLeftWins: return get_outcome() == OutcomeClass::LeftWins;
      case kRightWins: return get_outcome() == OutcomeClass::RightWins;
      case kOpposable:
        if (!opposable) opposable = find_opposition(g).has_value();
        return *opposable;
      case kAlmost:
        if (!almost) almost = find_almost_opposition(g).has_value();
        return *almost;
      case kConnected:
        if (!connected) connected = is_connected(g);
        return *connected;
    }
    throw std::logic_error("unknown predicate atom");
  }
};

}  // namespace

SearchReport scan(const ScanOptions& options, const std::string& predicate) {
  const auto start = std::chrono::steady_clock::now();
  const boolexpr::Expr expr =
      boolexpr::parse(predicate, predicate_atom_names());
  const std::vector<int> used = boolexpr::atoms_used(expr);
  const bool wants_almost =
      std::find(used.begin(), used.end(), kAlmost) != used.end();

  std::vector<Graph> candidates;
  for (int order = options.min_order; order <= options.max_order; ++order) {
    std::vector<Graph> level =
        options.scope == ScanOptions::Scope::Graphs
            ? all_graphs(order, options.connected_only)
            : all_trees(order);
    candidates.insert(candidates.end(), level.begin(), level.end());
  }

  SearchReport report;
  report.scope =
      options.scope == ScanOptions::Scope::Graphs
          ? (options.connected_only ? "connected graphs" : "graphs")
          : "trees";
  report.predicate = predicate;
  report.examined = candidates.size();

  auto evaluate = [&](Solver& solver, int seq) -> std::optional<ScanHit> {
    const Graph& g = candidates[static_cast<std::size_t>(seq)];
    CandidateFacts facts{g, solver, {}, {}, {}, {}};
    const bool match =
        boolexpr::eval(expr, [&](int id) { return facts.atom(id); });
    if (!match) return std::nullopt;
    ScanHit hit;
    hit.sequence = seq;
    hit.order = g.order();
    hit.graph6 = g6::emit(g);
    hit.canonical = canonical_code(g);
    hit.outcome = facts.get_outcome();
    hit.opposable = facts.atom(kOpposable);
    hit.connected = facts.atom(kConnected);
    if (wants_almost) hit.almost = facts.atom(kAlmost);
    return hit;
  };

  const int total = static_cast<int>(candidates.size());
  int threads = options.threads;
  if (threads == 0)
    threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min(threads, total == 0 ? 1 : total));

  if (options.early_exit || threads == 1) {
    Solver solver(
        Solver::Options{options.domination_pruning, std::size_t{1} << 23});
    for (int seq = 0; seq < total; ++seq) {
      if (auto hit = evaluate(solver, seq)) {
        report.hits.push_back(std::move(*hit));
        if (options.early_exit) break;
      }
    }
  } else {
    std::vector<std::vector<ScanHit>> per_worker(
        static_cast<std::size_t>(threads));
    std::atomic<int> cursor{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        Solver solver(
            Solver::Options{options.domination_pruning, std::size_t{1} << 23});
        for (;;) {
          const int seq = cursor.fetch_add(1);
          if (seq >= total) break;
          if (auto hit = evaluate(solver, seq))
            per_worker[static_cast<std::size_t>(w)].push_back(std::move(*hit));
        }
      });
    }
    for (std::thread& t : pool) t.join();
    for (auto& chunk : per_worker)
      report.hits.insert(report.hits.end(), chunk.begin(), chunk.end());
    std::sort(report.hits.begin(), report.hits.end(),
              [](const ScanHit& a, const ScanHit& b) {
                return a.sequence < b.sequence;
              });
  }

  for (const ScanHit& hit : report.hits) ++report.hit_counts[hit.order];
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace snortlab
