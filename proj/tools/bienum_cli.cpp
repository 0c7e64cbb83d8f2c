// Command-line front end for the biobjective enumeration library.
//
// Subcommands:
//   extremes         nondominated extreme points via a dichotomic scheme
//   front            full Pareto front (eps-constraint sweep or subset merge)
//   lp-extremes      extreme-point walk over a biobjective LP
//   generate-gadget  knapsack-to-shortest-path reduction instance
//   brute            exhaustive ground-truth front (small instances only)
//   bench-delay      per-emission delay counters with a PASS/FAIL verdict
//
// Every enumeration streams one NDJSON record per emitted point (or a table
// row with --format table) followed by a single summary record; both modes
// flush per line so delay is observable by external tooling.  Exit codes:
// 0 success, 1 internal failure or FAIL verdict, 2 usage error (including
// unbounded instances, which violate the ideal-point precondition),
// 3 capacity exceeded, 4 infeasible instance.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bienum/bifront.hpp"
#include "bienum/brute/image.hpp"
#include "bienum/brute/lp_vertices.hpp"
#include "bienum/dichotomic.hpp"
#include "bienum/enumeration_log.hpp"
#include "bienum/eps_sweep.hpp"
#include "bienum/errors.hpp"
#include "bienum/explicit_set.hpp"
#include "bienum/lp/extreme_walk.hpp"
#include "bienum/lp/instance.hpp"
#include "bienum/oracle.hpp"
#include "bienum/point.hpp"
#include "bienum/problems/graphs.hpp"
#include "bienum/problems/knapsack_gadget.hpp"
#include "bienum/problems/min_cut.hpp"
#include "bienum/problems/shortest_path.hpp"
#include "bienum/problems/spanning_tree.hpp"
#include "bienum/problems/unconstrained.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace bienum;

// ---------------------------------------------------------------------------
// Options shared across subcommands (only one subcommand parses per run).

struct Options {
  std::string algorithm;
  std::string input;
  std::string format = "ndjson";
  bool timestamps = false;
  bool hull = false;
  bool cuts = false;
  std::optional<std::size_t> cap_nodes;
  std::optional<std::size_t> cap_n;
  std::uint64_t seed = 0;
  std::optional<std::size_t> random_points;
};

// ---------------------------------------------------------------------------
// Streaming output.

class RecordWriter {
 public:
  RecordWriter(std::ostream& out, bool table) : out_(out), table_(table) {}

  void record(const EmitEvent& ev) {
    if (table_) {
      if (!header_done_) {
        out_ << "     i    ws   lex   eps    t_mono_ns  point\n" << std::flush;
        header_done_ = true;
      }
      out_ << pad(ev.index, 6) << pad(ev.calls.ws, 6) << pad(ev.calls.lex, 6)
           << pad(ev.calls.eps, 6) << pad(ev.t_mono_ns, 13) << "  "
           << format_point(ev.point) << '\n'
           << std::flush;
      return;
    }
    json j;
    j["i"] = ev.index;
    j["point"] = {format_rational(ev.point[0]), format_rational(ev.point[1])};
    j["ws_calls"] = ev.calls.ws;
    j["lex_calls"] = ev.calls.lex;
    j["eps_calls"] = ev.calls.eps;
    j["t_mono_ns"] = ev.t_mono_ns;
    out_ << j.dump() << '\n' << std::flush;
  }

  void summary(const EnumerationLog& log, std::size_t count) {
    if (table_) {
      out_ << "count=" << count << " ws=" << log.total_calls.ws
           << " lex=" << log.total_calls.lex << " eps=" << log.total_calls.eps
           << " max_interemission_lex=" << log.max_interemission_lex() << '\n'
           << std::flush;
      return;
    }
    json j;
    j["count"] = count;
    j["total_calls"] = {{"ws", log.total_calls.ws},
                        {"lex", log.total_calls.lex},
                        {"eps", log.total_calls.eps}};
    j["max_interemission_lex_calls"] = log.max_interemission_lex();
    out_ << j.dump() << '\n' << std::flush;
  }

 private:
  static std::string pad(std::uint64_t value, int width) {
    std::string s = std::to_string(value);
    const std::size_t w = static_cast<std::size_t>(width);
    return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
  }

  std::ostream& out_;
  bool table_;
  bool header_done_ = false;
};

/// Streams an already-computed point list as records with zeroed counters
/// (used by commands that have no oracle: brute force and the subset merge).
void write_point_list(RecordWriter& writer, const std::vector<Point>& points) {
  EnumerationLog log;
  for (std::size_t i = 0; i < points.size(); ++i) {
    EmitEvent ev;
    ev.index = i + 1;
    ev.point = points[i];
    writer.record(ev);
  }
  writer.summary(log, points.size());
}

// ---------------------------------------------------------------------------
// Input loading.  The instance kind is sniffed from the first token: the
// graph/unconstrained/knapsack formats announce themselves with a keyword,
// an LP header line has three integers, and an explicit-set line has two
// rationals.

using ParsedInput = std::variant<std::vector<Point>, CostDigraph, CostGraph,
                                 UnconstrainedBi, KPInstance, LPInstance>;

ParsedInput parse_input(std::istream& in) {
  std::stringstream buffered;
  buffered << in.rdbuf();
  const std::string text = buffered.str();

  std::istringstream sniff(text);
  std::string first_line;
  std::string first_token;
  while (std::getline(sniff, first_line)) {
    std::istringstream row(first_line);
    if (row >> first_token) {
      break;
    }
    first_token.clear();
  }
  if (first_token.empty()) {
    throw UsageError("input is empty");
  }

  std::istringstream stream(text);
  if (first_token == "directed") {
    return std::get<CostDigraph>(parse_graph(stream));
  }
  if (first_token == "undirected") {
    return std::get<CostGraph>(parse_graph(stream));
  }
  if (first_token == "unconstrained") {
    return parse_unconstrained(stream);
  }
  if (first_token == "knapsack") {
    return parse_knapsack(stream);
  }

  std::istringstream row(first_line);
  std::size_t tokens = 0;
  for (std::string tok; row >> tok;) {
    ++tokens;
  }
  if (tokens == 3) {
    return parse_lp(stream);
  }
  if (tokens == 2) {
    return parse_explicit_set(stream);
  }
  throw UsageError(
      "unrecognized input format: expected a directed/undirected/"
      "unconstrained/knapsack header, an LP header line 'd n m', or "
      "explicit-set lines with two rationals");
}

ParsedInput load_input(const std::string& path) {
  if (path == "-") {
    return parse_input(std::cin);
  }
  std::ifstream file(path);
  if (!file) {
    throw UsageError("cannot open input file: " + path);
  }
  return parse_input(file);
}

const char* input_kind_name(const ParsedInput& input) {
  struct Namer {
    const char* operator()(const std::vector<Point>&) { return "explicit set"; }
    const char* operator()(const CostDigraph&) { return "directed graph"; }
    const char* operator()(const CostGraph&) { return "undirected graph"; }
    const char* operator()(const UnconstrainedBi&) {
      return "unconstrained instance";
    }
    const char* operator()(const KPInstance&) { return "knapsack instance"; }
    const char* operator()(const LPInstance&) { return "LP instance"; }
  };
  return std::visit(Namer{}, input);
}

/// Weighted-sum / lexicographic oracle for the dichotomic schemes: explicit
/// sets as-is, directed graphs as biobjective shortest path, undirected
/// graphs as biobjective spanning tree.
std::unique_ptr<ScalarizationOracle> make_dichotomic_oracle(
    ParsedInput&& input) {
  if (auto* pts = std::get_if<std::vector<Point>>(&input)) {
    return std::make_unique<ExplicitSetOracle>(std::move(*pts));
  }
  if (auto* dg = std::get_if<CostDigraph>(&input)) {
    return std::make_unique<ShortestPathOracle>(std::move(*dg));
  }
  if (auto* g = std::get_if<CostGraph>(&input)) {
    return std::make_unique<SpanningTreeOracle>(std::move(*g));
  }
  throw UsageError(std::string("this command does not accept a ") +
                   input_kind_name(input) +
                   " (use front for unconstrained instances, lp-extremes for "
                   "LPs, generate-gadget for knapsack files)");
}

/// Eps-constraint-capable oracle for the sweep: explicit sets as-is,
/// undirected graphs as biobjective minimum cut.
std::unique_ptr<ScalarizationOracle> make_sweep_oracle(
    ParsedInput&& input, std::optional<std::size_t> cap_nodes) {
  if (auto* pts = std::get_if<std::vector<Point>>(&input)) {
    return std::make_unique<ExplicitSetOracle>(std::move(*pts));
  }
  if (auto* g = std::get_if<CostGraph>(&input)) {
    return std::make_unique<MinCutOracle>(
        std::move(*g), cap_nodes.value_or(kDefaultCutNodeCap));
  }
  throw UsageError(std::string("eps-sweep does not accept a ") +
                   input_kind_name(input) +
                   " (supported: explicit sets, undirected min-cut graphs)");
}

// ---------------------------------------------------------------------------
// Subcommand handlers.

int cmd_extremes(const Options& opts) {
  auto oracle = make_dichotomic_oracle(load_input(opts.input));
  RecordWriter writer(std::cout, opts.format == "table");
  const EmitFn emit = [&](const EmitEvent& ev) { writer.record(ev); };

  EnumerationResult result;
  if (opts.algorithm == "da-plain") {
    result = dichotomic_plain(*oracle, emit, opts.timestamps);
  } else if (opts.algorithm == "da-lex") {
    result = dichotomic_lex(*oracle, emit, opts.timestamps);
  } else if (opts.algorithm == "da-polydelay") {
    result = dichotomic_poly_delay(*oracle, emit, opts.timestamps);
  } else {
    throw UsageError("algorithm '" + opts.algorithm +
                     "' is not valid for extremes (choose da-plain, da-lex, "
                     "or da-polydelay)");
  }
  writer.summary(result.log, result.front.size());
  return 0;
}

int cmd_front(const Options& opts) {
  RecordWriter writer(std::cout, opts.format == "table");
  if (opts.algorithm == "eps-sweep") {
    auto oracle = make_sweep_oracle(load_input(opts.input), opts.cap_nodes);
    const EmitFn emit = [&](const EmitEvent& ev) { writer.record(ev); };
    const EnumerationResult result =
        eps_constraint_front(*oracle, emit, opts.timestamps);
    writer.summary(result.log, result.front.size());
    return 0;
  }
  if (opts.algorithm == "prop1-merge") {
    ParsedInput input = load_input(opts.input);
    auto* instance = std::get_if<UnconstrainedBi>(&input);
    if (instance == nullptr) {
      throw UsageError(std::string("prop1-merge does not accept a ") +
                       input_kind_name(input) +
                       " (supported: unconstrained instances)");
    }
    const BiFront front = subset_sum_front(*instance);
    write_point_list(writer, front.points());
    return 0;
  }
  throw UsageError("algorithm '" + opts.algorithm +
                   "' is not valid for front (choose eps-sweep or "
                   "prop1-merge)");
}

int cmd_lp_extremes(const Options& opts) {
  if (opts.algorithm != "bilp-walk") {
    throw UsageError("algorithm '" + opts.algorithm +
                     "' is not valid for lp-extremes (only bilp-walk)");
  }
  ParsedInput input = load_input(opts.input);
  auto* lp = std::get_if<LPInstance>(&input);
  if (lp == nullptr) {
    throw UsageError(std::string("lp-extremes does not accept a ") +
                     input_kind_name(input) + " (supported: LP instances)");
  }
  RecordWriter writer(std::cout, opts.format == "table");
  const EmitFn emit = [&](const EmitEvent& ev) { writer.record(ev); };
  const WalkResult result = extreme_point_walk(*lp, emit, opts.timestamps);
  writer.summary(result.log, result.front.size());
  return 0;
}

int cmd_generate_gadget(const Options& opts) {
  ParsedInput input = load_input(opts.input);
  auto* kp = std::get_if<KPInstance>(&input);
  if (kp == nullptr) {
    throw UsageError(std::string("generate-gadget does not accept a ") +
                     input_kind_name(input) +
                     " (supported: knapsack instances)");
  }
  const GadgetResult gadget = knapsack_to_shortest_path(*kp);
  write_graph(std::cout, gadget.graph);
  const auto bound_point = [](const Point& p) {
    return "(" + format_rational(p[0]) + "," + format_rational(p[1]) + ")";
  };
  std::cout << "M: " << bound_point(gadget.sentinels[0]) << ' '
            << bound_point(gadget.sentinels[1]) << '\n'
            << std::flush;
  return 0;
}

int cmd_brute(const Options& opts) {
  ParsedInput input = load_input(opts.input);
  RecordWriter writer(std::cout, opts.format == "table");

  if (auto* lp = std::get_if<LPInstance>(&input)) {
    // The LP image is continuous, so only the extreme points are a finite
    // ground truth; --hull is implied.
    write_point_list(writer, brute_lp_vertices(*lp).points());
    return 0;
  }

  std::vector<Point> image;
  if (auto* pts = std::get_if<std::vector<Point>>(&input)) {
    image = std::move(*pts);
  } else if (auto* dg = std::get_if<CostDigraph>(&input)) {
    image = enumerate_path_image(*dg,
                                 opts.cap_nodes.value_or(kDefaultPathNodeCap));
  } else if (auto* g = std::get_if<CostGraph>(&input)) {
    image = opts.cuts
                ? enumerate_cut_image(
                      *g, opts.cap_nodes.value_or(kDefaultCutNodeCap))
                : enumerate_tree_image(
                      *g, opts.cap_nodes.value_or(kDefaultTreeNodeCap));
  } else if (auto* u = std::get_if<UnconstrainedBi>(&input)) {
    image = enumerate_subset_image(*u, opts.cap_n.value_or(kDefaultSubsetCap));
  } else {
    throw UsageError(std::string("brute does not accept a ") +
                     input_kind_name(input) +
                     " (run generate-gadget first, then brute on its graph)");
  }
  const BiFront front = opts.hull ? brute_extremes(image) : brute_front(image);
  write_point_list(writer, front.points());
  return 0;
}

// ---------------------------------------------------------------------------
// bench-delay: run an enumeration, then grade its delay counters.

struct DelayCheck {
  std::string metric;
  std::uint64_t value = 0;
  std::uint64_t limit = 0;
  bool pass = false;
};

std::vector<DelayCheck> grade_delay(const std::string& algorithm,
                                    const EnumerationLog& log) {
  std::vector<DelayCheck> checks;
  const std::uint64_t k = log.events.size();
  if (algorithm == "da-polydelay") {
    const std::uint64_t value = log.max_interemission_lex();
    checks.push_back({"max_interemission_lex_calls", value, 2, value <= 2});
    return checks;
  }
  if (algorithm == "da-lex") {
    // Cumulative lex calls at emission i must stay within 2i−1; the total
    // gets the degenerate singleton allowance of 2 (the second seed call
    // lands after the only emission).  Reported value/limit come from the
    // emission with the least slack.
    std::uint64_t worst_value = 0;
    std::uint64_t worst_limit = 0;
    std::int64_t worst_gap = std::numeric_limits<std::int64_t>::min();
    for (const EmitEvent& ev : log.events) {
      const std::uint64_t limit = 2 * ev.index - 1;
      const std::int64_t gap = static_cast<std::int64_t>(ev.calls.lex) -
                               static_cast<std::int64_t>(limit);
      if (gap > worst_gap) {
        worst_gap = gap;
        worst_value = ev.calls.lex;
        worst_limit = limit;
      }
    }
    checks.push_back({"cumulative_lex_calls_at_emission", worst_value,
                      worst_limit, worst_gap <= 0});
    const std::uint64_t total_limit = k <= 1 ? 2 : 2 * k - 1;
    checks.push_back({"total_lex_calls", log.total_calls.lex, total_limit,
                      log.total_calls.lex <= total_limit});
    return checks;
  }
  if (algorithm == "eps-sweep") {
    const std::uint64_t expected = k + 1;
    checks.push_back({"eps_calls", log.total_calls.eps, expected,
                      log.total_calls.eps == expected});
    return checks;
  }
  throw UsageError("algorithm '" + algorithm +
                   "' is not valid for bench-delay (choose da-lex, "
                   "da-polydelay, or eps-sweep)");
}

int cmd_bench_delay(const Options& opts) {
  if (opts.algorithm != "da-lex" && opts.algorithm != "da-polydelay" &&
      opts.algorithm != "eps-sweep") {
    throw UsageError("algorithm '" + opts.algorithm +
                     "' is not valid for bench-delay (choose da-lex, "
                     "da-polydelay, or eps-sweep)");
  }
  const bool have_input = !opts.input.empty();
  const bool have_random = opts.random_points.has_value();
  if (have_input == have_random) {
    throw UsageError(
        "bench-delay needs exactly one instance source: --input or "
        "--random-points");
  }

  ParsedInput input;
  if (opts.random_points) {
    std::mt19937_64 rng(opts.seed);
    std::vector<Point> points;
    points.reserve(*opts.random_points);
    for (std::size_t i = 0; i < *opts.random_points; ++i) {
      const auto a = static_cast<long>(rng() % 1000);
      const auto b = static_cast<long>(rng() % 1000);
      points.emplace_back(Rational(a), Rational(b));
    }
    input = std::move(points);
  } else {
    input = load_input(opts.input);
  }

  RecordWriter writer(std::cout, opts.format == "table");
  const EmitFn emit = [&](const EmitEvent& ev) { writer.record(ev); };

  EnumerationResult result;
  if (opts.algorithm == "da-lex") {
    auto oracle = make_dichotomic_oracle(std::move(input));
    result = dichotomic_lex(*oracle, emit, opts.timestamps);
  } else if (opts.algorithm == "da-polydelay") {
    auto oracle = make_dichotomic_oracle(std::move(input));
    result = dichotomic_poly_delay(*oracle, emit, opts.timestamps);
  } else {
    auto oracle = make_sweep_oracle(std::move(input), opts.cap_nodes);
    result = eps_constraint_front(*oracle, emit, opts.timestamps);
  }
  writer.summary(result.log, result.front.size());

  const std::vector<DelayCheck> checks = grade_delay(opts.algorithm, result.log);
  bool pass = true;
  for (const DelayCheck& c : checks) {
    pass = pass && c.pass;
  }

  if (opts.format == "table") {
    for (const DelayCheck& c : checks) {
      std::cout << "check " << c.metric << ": value=" << c.value
                << (c.metric == "eps_calls" ? " expected=" : " limit=")
                << c.limit << ' ' << (c.pass ? "PASS" : "FAIL") << '\n';
    }
    std::cout << "verdict: " << (pass ? "PASS" : "FAIL") << '\n' << std::flush;
  } else {
    json j;
    j["verdict"] = pass ? "PASS" : "FAIL";
    j["emissions"] = result.log.events.size();
    j["checks"] = json::array();
    for (const DelayCheck& c : checks) {
      j["checks"].push_back({{"metric", c.metric},
                             {"value", c.value},
                             {"limit", c.limit},
                             {"pass", c.pass}});
    }
    std::cout << j.dump() << '\n' << std::flush;
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"biobjective enumeration toolkit"};
  app.require_subcommand(1);
  Options opts;

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opts.format, "output mode")
        ->check(CLI::IsMember({"ndjson", "table"}));
    cmd->add_flag("--timestamps", opts.timestamps,
                  "record monotonic emission timestamps (off by default so "
                  "repeated runs are byte-identical)");
  };
  const auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input", opts.input, "instance file ('-' for stdin)")
        ->required();
  };

  CLI::App* extremes = app.add_subcommand(
      "extremes", "enumerate nondominated extreme points (dichotomic)");
  extremes->add_option("--algorithm", opts.algorithm,
                       "da-plain | da-lex | da-polydelay")
      ->required();
  add_input(extremes);
  add_format(extremes);

  CLI::App* front = app.add_subcommand(
      "front", "enumerate the full Pareto front");
  front->add_option("--algorithm", opts.algorithm, "eps-sweep | prop1-merge")
      ->required();
  add_input(front);
  add_format(front);
  front->add_option("--cap-nodes", opts.cap_nodes,
                    "node cap for the min-cut oracle");

  CLI::App* lp_extremes = app.add_subcommand(
      "lp-extremes", "walk the extreme points of a biobjective LP");
  lp_extremes->add_option("--algorithm", opts.algorithm, "bilp-walk")
      ->default_val(std::string("bilp-walk"));
  add_input(lp_extremes);
  add_format(lp_extremes);

  CLI::App* gadget = app.add_subcommand(
      "generate-gadget",
      "emit the shortest-path reduction graph for a knapsack instance");
  add_input(gadget);

  CLI::App* brute = app.add_subcommand(
      "brute", "exhaustive ground-truth Pareto front (small instances)");
  add_input(brute);
  add_format(brute);
  brute->add_flag("--hull", opts.hull,
                  "reduce the front to its extreme points");
  brute->add_flag("--cuts", opts.cuts,
                  "treat an undirected graph as a min-cut instance "
                  "(default: spanning trees)");
  brute->add_option("--cap-nodes", opts.cap_nodes,
                    "node cap for graph enumeration");
  brute->add_option("--cap-n", opts.cap_n,
                    "item cap for unconstrained enumeration");

  CLI::App* bench = app.add_subcommand(
      "bench-delay", "grade delay counters against the per-algorithm bounds");
  bench->add_option("--algorithm", opts.algorithm,
                    "da-lex | da-polydelay | eps-sweep")
      ->required();
  bench->add_option("--input", opts.input, "instance file ('-' for stdin)");
  bench->add_option("--random-points", opts.random_points,
                    "generate a random explicit set of this many points");
  bench->add_option("--seed", opts.seed, "seed for --random-points");
  add_format(bench);
  bench->add_option("--cap-nodes", opts.cap_nodes,
                    "node cap for the min-cut oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "bienum: " << e.what() << '\n';
    return 2;
  }

  try {
    if (extremes->parsed()) {
      return cmd_extremes(opts);
    }
    if (front->parsed()) {
      return cmd_front(opts);
    }
    if (lp_extremes->parsed()) {
      return cmd_lp_extremes(opts);
    }
    if (gadget->parsed()) {
      return cmd_generate_gadget(opts);
    }
    if (brute->parsed()) {
      return cmd_brute(opts);
    }
    if (bench->parsed()) {
      return cmd_bench_delay(opts);
    }
    throw bienum::InternalError("no subcommand dispatched");
  } catch (const bienum::UsageError& e) {
    std::cerr << "bienum: " << e.what() << '\n';
    return 2;
  } catch (const bienum::UnboundedError& e) {
    std::cerr << "bienum: " << e.what() << '\n';
    return 2;
  } catch (const bienum::CapacityError& e) {
    std::cerr << "bienum: " << e.what() << '\n';
    return 3;
  } catch (const bienum::InfeasibleError& e) {
    std::cerr << "bienum: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "bienum: internal error: " << e.what() << '\n';
    return 1;
  }
}
