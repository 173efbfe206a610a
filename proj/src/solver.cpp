#include "snortlab/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "snortlab/canonical.hpp"

namespace snortlab {

void Solver::clear() {
  exact_memo_.clear();
  canonical_memo_.clear();
  stats_ = SolverStats{};
  has_graph_ = false;
}

void Solver::set_graph(const Graph& g) {
  if (has_graph_ && graph_ == g) return;
  graph_ = g;
  has_graph_ = true;
  exact_memo_.clear();  // exact keys are label-specific to one graph
}

Solver::State Solver::state_of(const Position& p) const {
  State s{0, 0, 0};
  for (int v = 0; v < p.graph.order(); ++v) {
    switch (p.state[static_cast<std::size_t>(v)]) {
      case VertexState::Free: s.alive |= vertex_bit(v); break;
      case VertexState::TintedBlue:
        s.alive |= vertex_bit(v);
        s.blue |= vertex_bit(v);
        break;
      case VertexState::TintedRed:
        s.alive |= vertex_bit(v);
        s.red |= vertex_bit(v);
        break;
      default: break;  // coloured and dead vertices leave the residual
    }
  }
  return s;
}

std::string Solver::canonical_key(const State& s, Player who) const {
  const VertexSet mine = who == Player::Left ? s.blue : s.red;
  const VertexSet theirs = who == Player::Left ? s.red : s.blue;
  InducedSubgraph sub = induced_subgraph(graph_, s.alive);
  std::vector<int> colors(sub.to_old.size(), 0);
  for (std::size_t i = 0; i < sub.to_old.size(); ++i) {
    if (contains(mine, sub.to_old[i])) colors[i] = 1;
    if (contains(theirs, sub.to_old[i])) colors[i] = 2;
  }
  return canonical_code(sub.graph, colors);
}

bool Solver::wins(const State& s, Player who) {
  ++stats_.nodes;
  const VertexSet mine = who == Player::Left ? s.blue : s.red;
  const VertexSet theirs = who == Player::Left ? s.red : s.blue;
  const VertexSet legal = s.alive & ~theirs;
  if (legal == 0) return false;

  const ExactKey ekey{s.alive, mine, theirs};
  if (auto it = exact_memo_.find(ekey); it != exact_memo_.end()) {
    ++stats_.exact_hits;
    return it->second;
  }
  const std::string ckey = canonical_key(s, who);
  if (auto it = canonical_memo_.find(ckey); it != canonical_memo_.end()) {
    ++stats_.canonical_hits;
    exact_memo_.emplace(ekey, it->second);
    return it->second;
  }

  std::vector<int> moves = set_to_list(legal);
  if (options_.domination_pruning) {
    std::vector<int> kept;
    kept.reserve(moves.size());
    for (int u : moves) {
      const VertexSet nu = graph_.neighbors(u) & s.alive;
      const bool u_tinted = contains(mine, u);
      bool dominated = false;
      for (int v : moves) {
        if (v == u || contains(mine, v) != u_tinted) continue;
        const VertexSet nv = graph_.neighbors(v) & s.alive;
        if (is_subset(nu, nv) && (nu != nv || v < u)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) kept.push_back(u);
    }
    moves = std::move(kept);
  }
  std::stable_sort(moves.begin(), moves.end(), [&](int a, int b) {
    return set_size(graph_.neighbors(a) & s.alive) >
           set_size(graph_.neighbors(b) & s.alive);
  });

  bool result = false;
  for (int v : moves) {
    const VertexSet tinted = graph_.neighbors(v) & s.alive;
    State next;
    VertexSet my_tint = mine | tinted;
    const VertexSet dead = my_tint & theirs;
    next.alive = s.alive & ~vertex_bit(v) & ~dead;
    my_tint &= next.alive;
    const VertexSet their_tint = theirs & next.alive;
    next.blue = who == Player::Left ? my_tint : their_tint;
    next.red = who == Player::Left ? their_tint : my_tint;
    if (!wins(next, opponent(who))) {
      result = true;
      break;
    }
  }

  if (canonical_memo_.size() >= options_.memo_limit) canonical_memo_.clear();
  if (exact_memo_.size() >= options_.memo_limit) exact_memo_.clear();
  canonical_memo_.emplace(ckey, result);
  exact_memo_.emplace(ekey, result);
  return result;
}

bool Solver::wins_moving_first(const Position& p, Player who) {
  if (!is_consistent(p))
    throw std::invalid_argument("inconsistent position");
  set_graph(p.graph);
  return wins(state_of(p), who);
}

OutcomeClass Solver::outcome_of_position(const Position& p) {
  const bool left_first = wins_moving_first(p, Player::Left);
  const bool right_first = wins_moving_first(p, Player::Right);
  if (left_first && right_first) return OutcomeClass::FirstWins;
  if (!left_first && !right_first) return OutcomeClass::SecondWins;
  return left_first ? OutcomeClass::LeftWins : OutcomeClass::RightWins;
}

OutcomeClass Solver::outcome(const Graph& g) {
  return outcome_of_position(initial_position(g));
}

bool Solver::is_response_pair(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order() || u == v)
    return false;
  Position p = initial_position(g);
  p = apply_move(p, Player::Left, u);
  if (!contains(legal_moves(p, Player::Right), v)) return false;
  p = apply_move(p, Player::Right, v);
  return !wins_moving_first(p, Player::Left);
}

std::vector<std::pair<int, int>> Solver::response_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v)
      if (u != v && is_response_pair(g, u, v)) out.emplace_back(u, v);
  return out;
}

OutcomeClass solve_outcome(const Graph& g, bool domination_pruning) {
  Solver solver(Solver::Options{domination_pruning, 1u << 23});
  return solver.outcome(g);
}

}  // namespace snortlab
