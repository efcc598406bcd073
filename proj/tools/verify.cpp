#include "verify.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "permdual/bijection.hpp"
#include "permdual/chord.hpp"
#include "permdual/dual.hpp"
#include "permdual/sampling.hpp"
#include "permdual/text.hpp"
#include "permdual/trails.hpp"

namespace permdual::cli {

namespace {

struct Tally {
  int checks = 0;
  std::uint64_t items = 0;
  bool all_pass = true;
};

void emit_check(std::ostream& out, Tally& tally, const std::string& name,
                std::uint64_t items, bool pass,
                const std::string& counterexample = {}) {
  ++tally.checks;
  tally.items += items;
  tally.all_pass = tally.all_pass && pass;
  out << "check: " << name << " items=" << items
      << " status=" << (pass ? "pass" : "fail") << '\n';
  if (!pass && !counterexample.empty())
    out << "counterexample: " << counterexample << '\n';
}

std::optional<std::string> dual_failure(const TranspositionSequence& s) {
  DualEquivalenceReport report = dual_equivalence_report(s);
  if (!report.agree) return "dual methods diverge at entry " +
                            std::to_string(report.first_divergence);
  if (mind_body_dual(report.mind_body) != s) return std::string("dual is not an involution");
  if (report.mind_body.product() != s.product().inverse())
    return std::string("dual product is not the inverse");
  return std::nullopt;
}

std::optional<std::string> tdc_failure(const LabeledMultigraph& g) {
  TrailDoubleCover cover = greedy_trail_cover(g);
  CoverReport report = validate_cover(g, cover.trails());
  if (!report.ok()) return "greedy cover invalid: " + report.detail;
  RealizeResult realization = realize(cover);
  if (!realization.realizable) return std::string("greedy cover not realizable");
  if (!cover_survives_relabel(cover, realization.labeling))
    return std::string("realized labeling does not reproduce the cover");
  return std::nullopt;
}

std::optional<std::string> structural_failure(const TranspositionSequence& s) {
  PartitionDualityReport report = verify_partition_duality(s);
  if (!report.ok)
    return report.detail + " (entry " + std::to_string(report.bad_entry) + ")";
  return std::nullopt;
}

std::optional<std::string> chord_failure(const TranspositionSequence& s) {
  CircleChordDiagram d = CircleChordDiagram::from_tree_sequence(s);
  if (auto crossing = find_crossing(d))
    return "chords " + std::to_string(crossing->first) + " and " +
           std::to_string(crossing->second) + " cross";
  if (auto point = find_clockwise_violation(d))
    return "labels do not decrease clockwise at point " + std::to_string(*point);
  LabeledMultigraph g = LabeledMultigraph::from_sequence(s);
  for (int x = 1; x <= s.n(); ++x) {
    std::multiset<int> walk_edges, trail_edges;
    for (int e : region_walk(d, x).boundary.edge_labels) walk_edges.insert(e);
    for (int e : greedy_trail(g, x).edge_labels) trail_edges.insert(e);
    if (walk_edges != trail_edges)
      return "region " + std::to_string(x) + " differs from the greedy trail";
  }
  if (circle_dual(s) != trail_dual(g))
    return std::string("circle dual differs from trail dual");
  return std::nullopt;
}

using MemberCheck = std::optional<std::string> (*)(const TranspositionSequence&);

void run_member_suite(std::ostream& out, Tally& tally, const std::string& name,
                      const VerifyOptions& options, MemberCheck check) {
  for (int n = options.n_lo; n <= options.n_hi; ++n) {
    std::uint64_t members = 0;
    bool pass = true;
    std::string counterexample;
    auto consider = [&](const TranspositionSequence& s) {
      ++members;
      if (!pass) return;
      if (auto failure = check(s)) {
        pass = false;
        counterexample = format_sequence(s) + "  [" + *failure + "]";
      }
    };
    if (options.sample_size > 0) {
      std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(n));
      for (int i = 0; i < options.sample_size; ++i)
        consider(random_down_factorization(rng, n));
    } else {
      for_each_down_factorization(n, FactorizationGenerator::PrunedDfs, consider);
    }
    std::ostringstream label;
    label << name << " n=" << n
          << (options.sample_size > 0 ? " sampled" : " exhaustive");
    emit_check(out, tally, label.str(), members, pass, counterexample);
  }
}

void run_tdc_random(std::ostream& out, Tally& tally, const VerifyOptions& options) {
  int samples = options.sample_size > 0 ? options.sample_size : 10000;
  std::mt19937_64 rng(options.seed);
  bool pass = true;
  std::string counterexample;
  for (int i = 0; i < samples && pass; ++i) {
    int n = 1 + static_cast<int>(rand_below(rng, 9));
    int m = n < 2 ? 0 : static_cast<int>(rand_below(rng, 13));
    LabeledMultigraph g = random_graph(rng, n, m);
    if (auto failure = tdc_failure(g)) {
      pass = false;
      counterexample = format_sequence(g.to_sequence()) + "  [" + *failure + "]";
    }
  }
  emit_check(out, tally, "tdc random-graphs seed=" + std::to_string(options.seed),
             samples, pass, counterexample);
}

void run_tdc_fixture(std::ostream& out, Tally& tally, const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open fixture " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  ParsedCover parsed = parse_cover(buffer.str());
  TrailDoubleCover cover = TrailDoubleCover::from_trails(parsed.graph, parsed.trails);
  RealizeResult result = realize(cover);
  bool pass = true;
  std::ostringstream line;
  line << "tdc fixture=" << path;
  if (result.realizable) {
    pass = cover_survives_relabel(cover, result.labeling);
    line << " result=realizable labeling=";
    for (std::size_t i = 0; i < result.labeling.size(); ++i)
      line << (i ? "," : "") << result.labeling[i];
  } else {
    // the certificate must really be a directed cycle of the edge digraph
    EdgeDigraph d = edge_digraph(cover);
    std::set<std::pair<int, int>> arcs(d.arcs.begin(), d.arcs.end());
    for (std::size_t i = 0; i < result.cycle.size(); ++i) {
      int from = result.cycle[i];
      int to = result.cycle[(i + 1) % result.cycle.size()];
      if (!arcs.count({from, to})) pass = false;
    }
    line << " result=not-realizable cycle=";
    for (std::size_t i = 0; i < result.cycle.size(); ++i)
      line << (i ? "->" : "") << result.cycle[i];
    line << "->" << result.cycle.front();
  }
  emit_check(out, tally, line.str(), 1, pass);
}

void run_tdc_members(std::ostream& out, Tally& tally, const VerifyOptions& options) {
  // Deterministic variant used by --suite all: the factorization graphs
  // themselves go through cover validation and realization.
  for (int n = options.n_lo; n <= options.n_hi; ++n) {
    std::uint64_t members = 0;
    bool pass = true;
    std::string counterexample;
    for_each_down_factorization(
        n, FactorizationGenerator::Prufer, [&](const TranspositionSequence& s) {
          ++members;
          if (!pass) return;
          if (auto failure = tdc_failure(LabeledMultigraph::from_sequence(s))) {
            pass = false;
            counterexample = format_sequence(s) + "  [" + *failure + "]";
          }
        });
    emit_check(out, tally, "tdc n=" + std::to_string(n) + " exhaustive", members, pass,
               counterexample);
  }
}

}  // namespace

int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& timing_out) {
  auto started = std::chrono::steady_clock::now();
  out << "report: verify suite=" << options.suite << " n=" << options.n_lo << ".."
      << options.n_hi << " seed=" << options.seed
      << " sample-size=" << options.sample_size;
  if (!options.fixture.empty()) out << " fixture=" << options.fixture;
  out << '\n';

  Tally tally;
  bool duals = options.suite == "duals" || options.suite == "all";
  bool tdc = options.suite == "tdc" || options.suite == "all";
  bool structural = options.suite == "structural" || options.suite == "all";
  bool chord = options.suite == "chord" || options.suite == "all";
  if (!duals && !tdc && !structural && !chord)
    fail(ErrorKind::InvalidArgument, "unknown suite " + options.suite);

  if (duals) run_member_suite(out, tally, "duals", options, dual_failure);
  if (tdc) {
    if (!options.fixture.empty()) run_tdc_fixture(out, tally, options.fixture);
    else if (options.suite == "all") run_tdc_members(out, tally, options);
    else run_tdc_random(out, tally, options);
  }
  if (structural) run_member_suite(out, tally, "structural", options, structural_failure);
  if (chord) run_member_suite(out, tally, "chord", options, chord_failure);

  out << "summary: status=" << (tally.all_pass ? "pass" : "fail")
      << " checks=" << tally.checks << " items=" << tally.items << '\n';
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  timing_out << "elapsed_ms=" << elapsed.count() << '\n';
  return tally.all_pass ? 0 : 1;
}

}  // namespace permdual::cli
