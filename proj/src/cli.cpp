#include "snortlab/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "snortlab/canonical.hpp"
#include "snortlab/chess.hpp"
#include "snortlab/constructions.hpp"
#include "snortlab/enumerate.hpp"
#include "snortlab/graph6.hpp"
#include "snortlab/opposition.hpp"
#include "snortlab/products.hpp"
#include "snortlab/scan.hpp"
#include "snortlab/solver.hpp"
#include "snortlab/verify.hpp"

namespace snortlab::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;
constexpr int kResourceCap = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "-" reads one graph from the stream; otherwise the argument is a file
// path when it names a readable file, else it is taken as a literal string.
std::string read_source(const std::string& arg, std::istream& in) {
  if (arg == "-") {
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos)
        return line;
    }
    throw UsageError("no input on stdin");
  }
  std::ifstream file(arg);
  if (file.good()) {
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
  }
  return arg;
}

Graph load_graph(const std::string& arg, std::istream& in, bool adjacency) {
  const std::string text = read_source(arg, in);
  return adjacency ? g6::parse_adjacency_list(text)
                   : g6::parse(text.substr(0, text.find('\n')));
}

json map_to_json(const VertexMap& f) {
  json arr = json::array();
  for (int v : f) {
    if (v < 0)
      arr.push_back(nullptr);
    else
      arr.push_back(v);
  }
  return arr;
}

json witness_to_json(const AlmostWitness& w) {
  json j;
  j["type"] = w.compatible ? "compatible-almost" : "almost";
  j["u"] = w.u;
  j["S"] = set_to_list(w.s);
  j["map"] = map_to_json(w.opposition);
  if (w.compatible) j["compat"] = map_to_json(*w.compatible);
  return j;
}

void print_position(const Position& p, std::ostream& out) {
  out << "vertex:";
  for (int v = 0; v < p.graph.order(); ++v) out << ' ' << v;
  out << "\nstate: ";
  for (VertexState s : p.state) out << ' ' << state_char(s);
  out << '\n';
}

int cmd_solve(const std::string& input, bool no_prune, bool trace, bool json_out,
              std::istream& in, std::ostream& out) {
  const Graph g = load_graph(input, in, false);
  Solver solver(Solver::Options{!no_prune, std::size_t{1} << 23});
  const OutcomeClass o = solver.outcome(g);
  if (trace) {
    for (Player who : {Player::Left, Player::Right}) {
      out << to_string(who) << " first moves that win:";
      const Position p = initial_position(g);
      bool any = false;
      for_each_vertex(legal_moves(p, who), [&](int v) {
        if (!solver.wins_moving_first(apply_move(p, who, v), opponent(who))) {
          out << ' ' << v;
          any = true;
        }
      });
      if (!any) out << " (none)";
      out << '\n';
    }
  }
  if (json_out) {
    json j;
    j["graph6"] = g6::emit(g);
    j["order"] = g.order();
    j["outcome"] = to_string(o);
    out << j.dump() << '\n';
  } else {
    out << to_string(o) << '\n';
  }
  return kOk;
}

int cmd_opposable(const std::string& input, bool json_out, std::istream& in,
                  std::ostream& out) {
  const Graph g = load_graph(input, in, false);
  const auto f = find_opposition(g);
  if (json_out) {
    json j;
    j["order"] = g.order();
    j["opposable"] = f.has_value();
    if (f) {
      j["witness"] = {{"type", "opposition"}, {"map", map_to_json(*f)}};
    }
    out << j.dump() << '\n';
  } else if (f) {
    out << "opposable; map:";
    for (int v : *f) out << ' ' << v;
    out << '\n';
  } else {
    out << "not opposable\n";
  }
  return kOk;
}

int cmd_almost(const std::string& input, bool compatible, bool json_out,
               std::istream& in, std::ostream& out) {
  const Graph g = load_graph(input, in, false);
  const auto w = compatible ? find_compatible_almost_opposition(g)
                            : find_almost_opposition(g);
  if (json_out) {
    json j;
    j["order"] = g.order();
    j["almost_opposable"] = w.has_value();
    if (w) j["witness"] = witness_to_json(*w);
    out << j.dump() << '\n';
  } else if (w) {
    out << (compatible ? "compatibly almost opposable" : "almost opposable")
        << "; S = {";
    bool first = true;
    for (int v : set_to_list(w->s)) {
      if (!first) out << ',';
      out << v;
      first = false;
    }
    out << "}\n";
  } else {
    out << (compatible ? "not compatibly almost opposable"
                       : "not almost opposable")
        << '\n';
  }
  return kOk;
}

int cmd_product(const std::string& g_arg, const std::string& h_arg,
                const std::string& named, const std::string& formula_text,
                bool check_condition, bool lift, bool json_out,
                std::istream& in, std::ostream& out) {
  ProductFormula formula;
  if (!named.empty()) {
    const auto p = parse_product_name(named);
    if (!p) throw UsageError("unknown product name '" + named + "'");
    formula = named_formula(*p);
  } else if (!formula_text.empty()) {
    formula = parse_formula(formula_text);
  } else {
    throw UsageError("product needs --named or --formula");
  }
  const Graph g = load_graph(g_arg, in, false);
  const Graph h = load_graph(h_arg, in, false);
  const ProductGraph p = build_product(g, h, formula);
  const bool condition = satisfies_opposability_condition(formula);

  std::optional<Opposition> lifted;
  if (lift) {
    const auto f = find_opposition(g);
    if (!f) {
      throw UsageError("first factor is not opposable; nothing to lift");
    }
    lifted = lift_opposition(*f, g, h, formula);  // throws if condition fails
  }
  if (json_out) {
    json j;
    j["formula"] = format_formula(formula);
    j["graph6"] = g6::emit(p.graph);
    j["order"] = p.graph.order();
    if (check_condition) j["condition"] = condition;
    if (lifted)
      j["witness"] = {{"type", "opposition"}, {"map", map_to_json(*lifted)}};
    out << j.dump() << '\n';
  } else {
    out << g6::emit(p.graph) << '\n';
    if (check_condition)
      out << "condition: " << (condition ? "holds" : "fails") << '\n';
    if (lifted) {
      out << "lifted opposition:";
      for (int v : *lifted) out << ' ' << v;
      out << '\n';
    }
  }
  return kOk;
}

int cmd_figure(const std::string& name, bool labels, bool json_out,
               std::ostream& out) {
  const auto id = parse_figure_id(name);
  if (!id) {
    std::string known;
    for (FigureId fid : figure_catalog()) {
      if (!known.empty()) known += ", ";
      known += figure_name(fid);
    }
    throw UsageError("unknown figure '" + name + "'; known: " + known);
  }
  const Figure fig = figure(*id);
  if (json_out) {
    json j;
    j["id"] = figure_name(*id);
    j["graph6"] = g6::emit(fig.graph);
    j["order"] = fig.graph.order();
    j["labels"] = fig.labels;
    out << j.dump() << '\n';
  } else {
    out << g6::emit(fig.graph) << '\n';
    if (labels) {
      for (std::size_t v = 0; v < fig.labels.size(); ++v)
        out << v << ' ' << fig.labels[v] << '\n';
    }
  }
  return kOk;
}

int cmd_firework(const std::string& input, int u, int v, int n, bool check,
                 bool json_out, std::istream& in, std::ostream& out,
                 std::ostream& err) {
  const Graph g = load_graph(input, in, false);
  const Graph fw = firework(g, u, v, n);
  FireworkPreconditions pre;
  if (check) pre = check_firework_preconditions(g, u, v);
  if (json_out) {
    json j;
    j["graph6"] = g6::emit(fw);
    j["order"] = fw.order();
    if (check) {
      j["response_pair"] = pre.response_pair;
      j["distance_ok"] = pre.distance_ok;
    }
    out << j.dump() << '\n';
  } else {
    out << g6::emit(fw) << '\n';
  }
  if (check && (!pre.response_pair || !pre.distance_ok)) {
    err << "warning: (" << u << "," << v
        << ") does not satisfy the response-pair hypotheses\n";
    return kVerificationFailure;
  }
  return kOk;
}

int cmd_chess(const std::string& piece_arg, int rows, int cols, bool witness,
              bool solve, bool force_solve, std::ostream& out) {
  const auto piece = parse_piece(piece_arg);
  if (!piece) throw UsageError("unknown piece '" + piece_arg + "'");
  json j;
  j["piece"] = piece_name(*piece);
  j["n"] = rows;
  j["m"] = cols;
  const Prediction predicted = predicted_outcome(*piece, rows, cols);
  j["predicted"] = to_string(predicted);
  if (witness) {
    const ChessWitness w = chess_witness(*piece, rows, cols);
    if (w.opposition)
      j["witness"] = {{"type", "opposition"}, {"map", map_to_json(*w.opposition)}};
    else if (w.almost)
      j["witness"] = witness_to_json(*w.almost);
    else
      j["witness"] = nullptr;
  }
  if (solve || force_solve) {
    if (predicted == Prediction::Unknown && !force_solve) {
      j["solved"] = nullptr;  // open case; use --force-solve on tiny boards
    } else {
      Solver solver;
      j["solved"] = to_string(solver.outcome(chess_grid(*piece, rows, cols)));
    }
  }
  out << j.dump() << '\n';
  return kOk;
}

int cmd_scan(const std::string& scope, int min_order, int max_order,
             bool connected, const std::string& predicate, int threads,
             bool early_exit, bool no_prune, const std::string& out_path,
             std::ostream& out) {
  ScanOptions opt;
  if (scope == "graphs")
    opt.scope = ScanOptions::Scope::Graphs;
  else if (scope == "trees")
    opt.scope = ScanOptions::Scope::Trees;
  else
    throw UsageError("scope must be 'graphs' or 'trees'");
  opt.min_order = min_order;
  opt.max_order = max_order;
  opt.connected_only = connected;
  opt.threads = threads;
  opt.early_exit = early_exit;
  opt.domination_pruning = !no_prune;
  const SearchReport report = scan(opt, predicate);

  std::ofstream file;
  std::ostream* sink = &out;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw UsageError("cannot open output file '" + out_path + "'");
    sink = &file;
  }
  for (const ScanHit& hit : report.hits) {
    json j;
    j["type"] = "hit";
    j["order"] = hit.order;
    j["graph6"] = hit.graph6;
    j["outcome"] = to_string(hit.outcome);
    j["opposable"] = hit.opposable;
    j["connected"] = hit.connected;
    if (hit.almost) j["almost"] = *hit.almost;
    *sink << j.dump() << '\n';
  }
  json summary;
  summary["type"] = "summary";
  summary["scope"] = report.scope;
  summary["predicate"] = report.predicate;
  summary["examined"] = report.examined;
  summary["hits"] = report.hits.size();
  json counts = json::object();
  for (const auto& [order, count] : report.hit_counts)
    counts[std::to_string(order)] = count;
  summary["hits_per_order"] = counts;
  summary["wall_seconds"] = report.wall_seconds;
  *sink << summary.dump() << '\n';
  return kOk;
}

int cmd_verify(bool full, int threads, std::uint64_t seed, std::ostream& out) {
  verify::SuiteOptions opt;
  opt.full = full;
  opt.threads = threads;
  opt.seed = seed;
  out << "verification suite (" << (full ? "full" : "fast") << " mode)\n";
  const std::vector<verify::CheckResult> results =
      verify::run_suite(opt, &out);
  std::size_t passed = 0;
  for (const auto& r : results)
    if (r.passed) ++passed;
  out << passed << "/" << results.size() << " checks passed\n";
  return passed == results.size() ? kOk : kVerificationFailure;
}

int cmd_play(const std::string& input, const std::string& human_side,
             std::istream& in, std::ostream& out) {
  const Graph g = load_graph(input, in, false);
  Player human;
  if (human_side == "left")
    human = Player::Left;
  else if (human_side == "right")
    human = Player::Right;
  else
    throw UsageError("--human must be 'left' or 'right'");
  Solver solver;
  Position p = initial_position(g);
  Player mover = Player::Left;
  out << "playing on " << g6::emit(g) << " (" << g.order()
      << " vertices); you are " << to_string(human) << "\n";
  for (;;) {
    const VertexSet moves = legal_moves(p, mover);
    if (moves == 0) {
      out << to_string(mover) << " has no move; " << to_string(opponent(mover))
          << " wins\n";
      return kOk;
    }
    print_position(p, out);
    if (mover == human) {
      out << "your move (legal:";
      for_each_vertex(moves, [&](int v) { out << ' ' << v; });
      out << "): " << std::flush;
      std::string token;
      if (!(in >> token) || token == "q" || token == "quit") {
        out << "\nresigned\n";
        return kOk;
      }
      int v;
      try {
        v = std::stoi(token);
      } catch (const std::exception&) {
        out << "enter a vertex number or q\n";
        continue;
      }
      if (v < 0 || v >= g.order() || !contains(moves, v)) {
        out << "illegal move\n";
        continue;
      }
      p = apply_move(p, mover, v);
    } else {
      int choice = -1;
      for (int v : set_to_list(moves)) {
        if (!solver.wins_moving_first(apply_move(p, mover, v),
                                      opponent(mover))) {
          choice = v;
          break;
        }
      }
      if (choice < 0) choice = set_to_list(moves).front();
      out << to_string(mover) << " plays " << choice << '\n';
      p = apply_move(p, mover, choice);
    }
    mover = opponent(mover);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"snortlab: graph colouring game analysis"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "solve a graph's outcome");
  std::string solve_input;
  bool solve_no_prune = false, solve_trace = false, solve_json = false;
  solve->add_option("graph", solve_input, "graph6 string, file, or - for stdin")
      ->required();
  solve->add_flag("--no-prune", solve_no_prune, "disable dominated-move pruning");
  solve->add_flag("--trace", solve_trace, "list winning first moves");
  solve->add_flag("--json", solve_json, "machine-readable output");

  // opposable
  auto* opp = app.add_subcommand("opposable", "decide opposability");
  std::string opp_input;
  bool opp_json = false;
  opp->add_option("graph", opp_input)->required();
  opp->add_flag("--json", opp_json);

  // almost
  auto* almost = app.add_subcommand("almost", "decide almost-opposability");
  std::string almost_input;
  bool almost_compatible = false, almost_json = false;
  almost->add_option("graph", almost_input)->required();
  almost->add_flag("--compatible", almost_compatible,
                   "require a whole-graph involutive extension");
  almost->add_flag("--json", almost_json);

  // product
  auto* product = app.add_subcommand("product", "build a formula product");
  std::string product_g, product_h, product_named, product_formula;
  bool product_check = false, product_lift = false, product_json = false;
  product->add_option("G", product_g, "first factor (graph6, file, or -)")
      ->required();
  product->add_option("H", product_h, "second factor (graph6, file, or -)")
      ->required();
  product->add_option("--named", product_named,
                      "cartesian|strong|tensor|lexicographic|conormal|"
                      "homomorphic|cihpromomoh");
  product->add_option("--formula", product_formula,
                      "formula over adjG, adjH, eqG, eqH");
  product->add_flag("--check-condition", product_check,
                    "report whether opposition lifting is sound");
  product->add_flag("--lift", product_lift,
                    "lift an opposition of g to the product");
  product->add_flag("--json", product_json);

  // figure
  auto* fig = app.add_subcommand("figure", "emit a catalog graph");
  std::string fig_name;
  bool fig_labels = false, fig_json = false;
  fig->add_option("id", fig_name)->required();
  fig->add_flag("--labels", fig_labels, "also print the vertex label map");
  fig->add_flag("--json", fig_json);

  // firework
  auto* fw = app.add_subcommand("firework", "attach leaves to a vertex pair");
  std::string fw_input;
  int fw_u = 0, fw_v = 0, fw_n = 0;
  bool fw_check = false, fw_json = false;
  fw->add_option("graph", fw_input)->required();
  fw->add_option("u", fw_u)->required();
  fw->add_option("v", fw_v)->required();
  fw->add_option("n", fw_n)->required();
  fw->add_flag("--check", fw_check, "check the response-pair hypotheses");
  fw->add_flag("--json", fw_json);

  // chess
  auto* chess = app.add_subcommand("chess", "piece-grid predictions");
  std::string chess_piece;
  int chess_rows = 0, chess_cols = 0;
  bool chess_witness_flag = false, chess_solve = false, chess_force = false;
  chess->add_option("piece", chess_piece, "king|knight|bishop|rook|queen")
      ->required();
  chess->add_option("n", chess_rows)->required();
  chess->add_option("m", chess_cols)->required();
  chess->add_flag("--witness", chess_witness_flag, "emit the verified witness");
  chess->add_flag("--solve", chess_solve, "also solve the board");
  chess->add_flag("--force-solve", chess_force,
                  "solve even when no prediction exists (tiny boards only)");

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "exhaustive predicate search");
  std::string scan_scope = "graphs", scan_predicate, scan_out;
  int scan_min = 0, scan_max = 0, scan_threads = 0;
  bool scan_connected = false, scan_early = false, scan_no_prune = false;
  scan_cmd->add_option("--scope", scan_scope, "graphs or trees");
  scan_cmd->add_option("--min-order", scan_min);
  scan_cmd->add_option("--max-order", scan_max)->required();
  scan_cmd->add_flag("--connected", scan_connected, "connected graphs only");
  scan_cmd->add_option("--predicate", scan_predicate,
                       "e.g. \"secondwins & !opposable\"")
      ->required();
  scan_cmd->add_option("--threads", scan_threads, "0 = hardware threads");
  scan_cmd->add_flag("--early-exit", scan_early, "stop at the first hit");
  scan_cmd->add_flag("--no-prune", scan_no_prune);
  scan_cmd->add_option("--out", scan_out, "write JSON lines to a file");

  // verify-paper
  auto* verify_cmd =
      app.add_subcommand("verify-paper", "run the bundled verification suite");
  bool verify_full = false, verify_fast = false;
  int verify_threads = 0;
  std::uint64_t verify_seed = 12345;
  verify_cmd->add_flag("--full", verify_full, "include the order-15 tree scan");
  verify_cmd->add_flag("--fast", verify_fast, "skip the order-15 tree scan");
  verify_cmd->add_option("--threads", verify_threads, "0 = hardware threads");
  verify_cmd->add_option("--seed", verify_seed, "seed for randomised checks");

  // play
  auto* play = app.add_subcommand("play", "interactive game against the solver");
  std::string play_input, play_side = "left";
  play->add_option("graph", play_input)->required();
  play->add_option("--human", play_side, "left or right");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*solve)
      return cmd_solve(solve_input, solve_no_prune, solve_trace, solve_json,
                       in, out);
    if (*opp) return cmd_opposable(opp_input, opp_json, in, out);
    if (*almost)
      return cmd_almost(almost_input, almost_compatible, almost_json, in, out);
    if (*product)
      return cmd_product(product_g, product_h, product_named, product_formula,
                         product_check, product_lift, product_json, in, out);
    if (*fig) return cmd_figure(fig_name, fig_labels, fig_json, out);
    if (*fw)
      return cmd_firework(fw_input, fw_u, fw_v, fw_n, fw_check, fw_json, in,
                          out, err);
    if (*chess)
      return cmd_chess(chess_piece, chess_rows, chess_cols, chess_witness_flag,
                       chess_solve, chess_force, out);
    if (*scan_cmd)
      return cmd_scan(scan_scope, scan_min, scan_max, scan_connected,
                      scan_predicate, scan_threads, scan_early, scan_no_prune,
                      scan_out, out);
    if (*verify_cmd)
      return cmd_verify(verify_full && !verify_fast, verify_threads,
                        verify_seed, out);
    if (*play) return cmd_play(play_input, play_side, in, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const g6::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const boolexpr::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  err << "error: no subcommand\n";
  return kUsageError;
}

}  // namespace snortlab::cli
