#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "permdual/bijection.hpp"
#include "permdual/chord.hpp"
#include "permdual/dual.hpp"
#include "permdual/render.hpp"
#include "permdual/text.hpp"
#include "permdual/trails.hpp"
#include "verify.hpp"

using namespace permdual;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceCap = 3;

std::string read_all(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_all(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) fail(ErrorKind::ParseError, "cannot open " + path);
  out << content;
}

// Sequences and graphs are interchangeable; accept either text form.
TranspositionSequence read_sequence_or_graph(const std::string& path) {
  std::string text = read_all(path);
  if (text.find("m=") != std::string::npos) return parse_graph(text).to_sequence();
  return parse_sequence(text);
}

int run_dual(const std::string& input, const std::string& method,
             const std::string& dot_path) {
  TranspositionSequence s = read_sequence_or_graph(input);
  LabeledMultigraph g = LabeledMultigraph::from_sequence(s);
  if (method == "all") {
    DualEquivalenceReport report = dual_equivalence_report(s);
    std::cout << "mb:        " << format_sequence(report.mind_body) << '\n';
    std::cout << "trail:     " << format_sequence(report.trail) << '\n';
    std::cout << "algebraic: " << format_sequence(report.algebraic) << '\n';
    std::cout << "graph-alg: " << format_sequence(report.label_swap) << '\n';
    std::cout << "agreement: " << (report.agree ? "yes" : "no");
    if (!report.agree)
      std::cout << " (first divergence at entry " << report.first_divergence << ")";
    std::cout << '\n';
    if (!dot_path.empty())
      write_all(dot_path,
                graph_to_dot(g, "before") +
                    graph_to_dot(LabeledMultigraph::from_sequence(report.mind_body),
                                 "after"));
    return report.agree ? kExitPass : kExitVerifyFail;
  }
  TranspositionSequence dual(1);
  if (method == "mb") dual = mind_body_dual(s);
  else if (method == "trail") dual = trail_dual(g).to_sequence();
  else if (method == "algebraic") dual = algebraic_dual(s);
  else if (method == "graph-alg") dual = label_swap_dual(g).to_sequence();
  else fail(ErrorKind::InvalidArgument, "unknown method " + method);
  std::cout << format_sequence(dual) << '\n';
  if (!dot_path.empty())
    write_all(dot_path, graph_to_dot(g, "before") +
                            graph_to_dot(LabeledMultigraph::from_sequence(dual), "after"));
  return kExitPass;
}

int run_mb_trace(const std::string& input) {
  TranspositionSequence s = read_sequence_or_graph(input);
  auto trace = mind_body_trace(s);
  for (std::size_t k = 0; k < trace.size(); ++k) {
    std::cout << "A" << k << " = " << trace[k].to_string();
    if (k > 0) std::cout << "   after (" << s[k - 1].x() << ',' << s[k - 1].y() << ')';
    std::cout << '\n';
  }
  std::cout << "dual: " << format_sequence(mind_body_dual(s)) << '\n';
  return kExitPass;
}

int run_enumerate(int n, const std::string& direction, bool count_only,
                  const std::string& generator) {
  FactorizationGenerator gen = generator == "dfs" ? FactorizationGenerator::PrunedDfs
                                                  : FactorizationGenerator::Prufer;
  bool up = direction == "up";
  std::uint64_t count = 0;
  for_each_down_factorization(n, gen, [&](const TranspositionSequence& s) {
    ++count;
    if (!count_only) std::cout << format_sequence(up ? mind_body_dual(s) : s) << '\n';
  });
  if (count_only) std::cout << count << '\n';
  return kExitPass;
}

int run_bijection(const std::string& input, bool inverse) {
  std::string text = read_all(input);
  if (inverse) {
    VertexLabeledTree tree = parse_tree(text);
    std::cout << format_sequence(tree_to_down_factorization(tree)) << '\n';
  } else {
    TranspositionSequence s = parse_sequence(text);
    std::cout << format_tree(down_factorization_to_tree(s)) << '\n';
  }
  return kExitPass;
}

int run_migt(const std::string& input, int start, const std::string& dot_path) {
  TranspositionSequence s = read_sequence_or_graph(input);
  LabeledMultigraph g = LabeledMultigraph::from_sequence(s);
  if (start > 0) {
    std::cout << format_trail(greedy_trail(g, start)) << '\n';
  } else {
    TrailDoubleCover cover = greedy_trail_cover(g);
    std::cout << format_cover(cover);
    std::cout << "permutation: " << cover_permutation(cover).cycle_string() << '\n';
  }
  if (!dot_path.empty())
    write_all(dot_path, edge_digraph_to_dot(edge_digraph(greedy_trail_cover(g))));
  return kExitPass;
}

int run_realize(const std::string& input) {
  ParsedCover parsed = parse_cover(read_all(input));
  TrailDoubleCover cover = TrailDoubleCover::from_trails(parsed.graph, parsed.trails);
  RealizeResult result = realize(cover);
  if (!result.realizable) {
    std::cout << "not-realizable cycle=";
    for (std::size_t i = 0; i < result.cycle.size(); ++i)
      std::cout << (i ? "->" : "") << result.cycle[i];
    std::cout << "->" << result.cycle.front() << '\n';
    return kExitVerifyFail;
  }
  std::cout << "realizable labeling=";
  for (std::size_t i = 0; i < result.labeling.size(); ++i)
    std::cout << (i ? "," : "") << result.labeling[i];
  std::cout << '\n';
  std::cout << format_graph(cover.graph().relabeled(result.labeling));
  return kExitPass;
}

int run_chord(const std::string& input, bool check, const std::string& svg_path,
              bool with_dual) {
  TranspositionSequence s = read_sequence_or_graph(input);
  CircleChordDiagram d = CircleChordDiagram::from_tree_sequence(s);
  int code = kExitPass;
  if (check) {
    auto crossing = find_crossing(d);
    auto violation = find_clockwise_violation(d);
    std::cout << "non-crossing: " << (crossing ? "fail" : "ok");
    if (crossing)
      std::cout << " (chords " << crossing->first << " and " << crossing->second << ")";
    std::cout << '\n';
    std::cout << "clockwise-decreasing: " << (violation ? "fail" : "ok");
    if (violation) std::cout << " (point " << *violation << ")";
    std::cout << '\n';
    if (crossing || violation) code = kExitVerifyFail;
  }
  if (!svg_path.empty()) {
    if (with_dual) {
      LabeledMultigraph dual = circle_dual(s);
      write_all(svg_path, chord_diagram_to_svg(d, &dual));
    } else {
      write_all(svg_path, chord_diagram_to_svg(d));
    }
  }
  return code;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int n = std::stoi(text);
    return {n, n};
  }
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "duals of transposition sequences, greedy-trail covers, and the tree bijection"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string method = "all";
  std::string dot_path;
  auto* dual_cmd = app.add_subcommand("dual", "compute the dual of a sequence");
  dual_cmd->add_option("--input,-i", input, "sequence file (default stdin)");
  dual_cmd->add_option("--method", method, "mb|trail|algebraic|graph-alg|all");
  dual_cmd->add_option("--emit-dot", dot_path, "write before/after graphs as DOT");

  auto* trace_cmd = app.add_subcommand("mb-trace", "print the assignment after each swap");
  trace_cmd->add_option("--input,-i", input, "sequence file (default stdin)");

  int enum_n = 3;
  std::string direction = "down";
  std::string generator = "prufer";
  bool count_only = false;
  bool emit = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "list factorizations of the long cycle");
  enum_cmd->add_option("--n", enum_n, "ground-set size")->required();
  enum_cmd->add_option("--direction", direction, "down|up");
  enum_cmd->add_option("--generator", generator, "dfs|prufer");
  enum_cmd->add_flag("--count-only", count_only, "print only the count");
  enum_cmd->add_flag("--emit", emit, "print every member");

  bool forward = false;
  bool inverse = false;
  auto* bij_cmd = app.add_subcommand("bijection", "map factorizations to trees and back");
  bij_cmd->add_option("--input,-i", input, "input file (default stdin)");
  bij_cmd->add_flag("--forward", forward, "sequence -> tree");
  bij_cmd->add_flag("--inverse", inverse, "tree -> sequence");

  int start = 0;
  auto* migt_cmd = app.add_subcommand("migt", "greedy trails of a labeled graph");
  migt_cmd->add_option("--input,-i", input, "sequence or graph file (default stdin)");
  migt_cmd->add_option("--start", start, "single start vertex (default: whole cover)");
  migt_cmd->add_option("--emit-dot", dot_path, "write the edge digraph as DOT");

  auto* realize_cmd = app.add_subcommand("realize", "label a cover or report a cycle");
  realize_cmd->add_option("--input,-i", input, "cover file (default stdin)");

  bool check = false;
  bool with_dual = false;
  std::string svg_path;
  auto* chord_cmd = app.add_subcommand("chord", "circle chord diagram of a tree");
  chord_cmd->add_option("--input,-i", input, "sequence file (default stdin)");
  chord_cmd->add_flag("--check", check, "run both diagram property checks");
  chord_cmd->add_option("--emit-svg", svg_path, "render the diagram");
  chord_cmd->add_flag("--with-dual", with_dual, "overlay the region dual in the SVG");

  cli::VerifyOptions verify_options;
  std::string range = "3..6";
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", verify_options.suite, "duals|tdc|structural|chord|all");
  verify_cmd->add_option("--n", range, "range A..B of ground-set sizes");
  verify_cmd->add_option("--seed", verify_options.seed, "random seed");
  verify_cmd->add_option("--sample-size", verify_options.sample_size,
                         "random samples per check (0 = exhaustive)");
  verify_cmd->add_option("--fixture", verify_options.fixture,
                         "cover fixture for the tdc suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (dual_cmd->parsed()) return run_dual(input, method, dot_path);
    if (trace_cmd->parsed()) return run_mb_trace(input);
    if (enum_cmd->parsed())
      return run_enumerate(enum_n, direction, count_only || !emit, generator);
    if (bij_cmd->parsed()) {
      if (forward == inverse)
        fail(ErrorKind::InvalidArgument, "choose exactly one of --forward/--inverse");
      return run_bijection(input, inverse);
    }
    if (migt_cmd->parsed()) return run_migt(input, start, dot_path);
    if (realize_cmd->parsed()) return run_realize(input);
    if (chord_cmd->parsed()) return run_chord(input, check, svg_path, with_dual);
    if (verify_cmd->parsed()) {
      auto [lo, hi] = parse_range(range);
      verify_options.n_lo = lo;
      verify_options.n_hi = hi;
      return cli::run_verify(verify_options, std::cout, std::cerr);
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return e.kind() == ErrorKind::ResourceCap ? kExitResourceCap : kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitPass;
}
