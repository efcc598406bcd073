#include "doctest.h"

#include "permdual/dual.hpp"
#include "permdual/text.hpp"
#include "support.hpp"

using namespace permdual;
using testsupport::fixture_sequence;

namespace {

TranspositionSequence seq(int n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Transposition> entries;
  for (auto [x, y] : pairs) entries.emplace_back(x, y);
  return TranspositionSequence(n, std::move(entries));
}

}  // namespace

TEST_CASE("all four constructions agree on the worked example") {
  TranspositionSequence s = fixture_sequence("fig1.seq");
  TranspositionSequence expected = fixture_sequence("fig6.seq");
  LabeledMultigraph g = LabeledMultigraph::from_sequence(s);

  CHECK(mind_body_dual(s) == expected);
  CHECK(trail_dual(g).to_sequence() == expected);
  CHECK(algebraic_dual(s) == expected);
  CHECK(label_swap_dual(g).to_sequence() == expected);

  DualEquivalenceReport report = dual_equivalence_report(s);
  CHECK(report.agree);
  CHECK(report.first_divergence == 0);
}

TEST_CASE("algebraic dual entry by entry") {
  TranspositionSequence s = fixture_sequence("fig1.seq");
  CHECK(algebraic_dual(s)[2] == Transposition(4, 2));
  CHECK(algebraic_dual(s)[0] == s[0]);
}

TEST_CASE("small duals") {
  TranspositionSequence single = seq(3, {{1, 2}});
  CHECK(algebraic_dual(single) == single);
  LabeledMultigraph one_edge(2, {Edge(1, 2)});
  CHECK(trail_dual(one_edge) == one_edge);
  LabeledMultigraph edgeless(5, {});
  CHECK(label_swap_dual(edgeless) == edgeless);
  CHECK(trail_dual(edgeless) == edgeless);
}

TEST_CASE("the descending pass builds the dual suffix by suffix") {
  // The pass runs from the last label down, so its state after absorbing
  // the last j edges is the dual of that suffix taken alone.
  TranspositionSequence s = fixture_sequence("fig1.seq");
  const std::vector<TranspositionSequence> suffix_duals{
      seq(4, {{2, 3}}),
      seq(4, {{3, 4}, {2, 4}}),
      seq(4, {{1, 2}, {3, 4}, {1, 4}}),
      seq(4, {{1, 3}, {2, 3}, {1, 4}, {3, 4}}),
      seq(4, {{3, 4}, {1, 4}, {2, 4}, {1, 3}, {3, 4}}),
  };
  for (std::size_t j = 1; j <= s.size(); ++j) {
    std::vector<Transposition> tail(s.end() - j, s.end());
    LabeledMultigraph suffix =
        LabeledMultigraph::from_sequence(TranspositionSequence(4, tail));
    CHECK(label_swap_dual(suffix).to_sequence() == suffix_duals[j - 1]);
  }
}

TEST_CASE("four-way agreement on random sequences") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 2000; ++round) {
    int n = 2 + static_cast<int>(rand_below(rng, 8));
    TranspositionSequence s =
        random_sequence(rng, n, static_cast<int>(rand_below(rng, 13)));
    DualEquivalenceReport report = dual_equivalence_report(s);
    REQUIRE_MESSAGE(report.agree, format_sequence(s));
  }
}

TEST_CASE("dual laws") {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 300; ++round) {
    int n = 2 + static_cast<int>(rand_below(rng, 8));
    int m = static_cast<int>(rand_below(rng, 13));
    TranspositionSequence s = random_sequence(rng, n, m);
    TranspositionSequence dual = algebraic_dual(s);

    CHECK(algebraic_dual(dual) == s);
    CHECK(dual.product() == s.product().inverse());

    // Each pair of mirrored prefixes cancels.
    for (int k = 1; k <= m; ++k) {
      std::vector<Transposition> mixed;
      for (int j = k - 1; j >= 1; --j) mixed.push_back(s[j - 1]);
      for (int j = k - 1; j >= 1; --j) mixed.push_back(dual[j - 1]);
      CHECK(TranspositionSequence(n, mixed).product().is_identity());
    }

    // Prepending t dualizes to prepending t and conjugating the rest.
    Transposition t = random_transposition(rng, n);
    std::vector<Transposition> extended{t};
    extended.insert(extended.end(), s.begin(), s.end());
    std::vector<Transposition> expected{t};
    expected.insert(expected.end(), dual.begin(), dual.end());
    CHECK(algebraic_dual(TranspositionSequence(n, extended)) ==
          conjugate_sequence(TranspositionSequence(n, expected), t));
  }
}
