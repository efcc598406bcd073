#include "doctest.h"

#include "permdual/perm.hpp"
#include "permdual/text.hpp"
#include "support.hpp"

using namespace permdual;

namespace {

TranspositionSequence seq(int n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Transposition> entries;
  for (auto [x, y] : pairs) entries.emplace_back(x, y);
  return TranspositionSequence(n, std::move(entries));
}

const TranspositionSequence kWorked =
    seq(4, {{3, 4}, {1, 3}, {1, 2}, {3, 4}, {2, 3}});

}  // namespace

TEST_CASE("transpositions store canonically and validate") {
  Transposition t(4, 2);
  CHECK(t.x() == 2);
  CHECK(t.y() == 4);
  CHECK(t == Transposition(2, 4));
  CHECK(t.apply(2) == 4);
  CHECK(t.apply(3) == 3);
  CHECK_THROWS_AS(Transposition(3, 3), Error);
  CHECK_THROWS_AS(Transposition(0, 1), Error);
  CHECK_THROWS_AS(TranspositionSequence(3, {Transposition(2, 4)}), Error);
}

TEST_CASE("product multiplies left to right") {
  CHECK(kWorked.product() == Permutation::down_cycle(4));

  CHECK(TranspositionSequence(5).product() == Permutation::identity(5));

  CHECK(seq(2, {{1, 2}, {1, 2}}).product().is_identity());
}

TEST_CASE("down and up cycles") {
  Permutation down = Permutation::down_cycle(4);
  CHECK(down(4) == 3);
  CHECK(down(3) == 2);
  CHECK(down(2) == 1);
  CHECK(down(1) == 4);
  CHECK(down.cycle_string() == "(1,4,3,2)");
  CHECK(Permutation::up_cycle(4) == down.inverse());
  CHECK(Permutation::down_cycle(1).is_identity());
}

TEST_CASE("product splits multiplicatively") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    int n = 2 + static_cast<int>(rand_below(rng, 8));
    int m = static_cast<int>(rand_below(rng, 13));
    TranspositionSequence s = random_sequence(rng, n, m);
    std::size_t cut = rand_below(rng, m + 1);
    std::vector<Transposition> head(s.begin(), s.begin() + cut);
    std::vector<Transposition> tail(s.begin() + cut, s.end());
    Permutation glued = TranspositionSequence(n, head).product() *
                        TranspositionSequence(n, tail).product();
    CHECK(glued == s.product());
  }
}

TEST_CASE("conjugation of a transposition swaps the conjugator's labels") {
  Transposition step1 = conjugate(Transposition(1, 2), Transposition(1, 3));
  CHECK(step1 == Transposition(3, 2));
  CHECK(conjugate(step1, Transposition(3, 4)) == Transposition(4, 2));
}

TEST_CASE("conjugation by the identity and composition law") {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 100; ++round) {
    int n = 2 + static_cast<int>(rand_below(rng, 8));
    Permutation p = testsupport::random_permutation(rng, n);
    CHECK(conjugate(p, Permutation::identity(n)) == p);
    Permutation a = testsupport::random_permutation(rng, n);
    Permutation b = testsupport::random_permutation(rng, n);
    CHECK(conjugate(conjugate(p, a), b) == conjugate(p, a * b));
  }
  CHECK_THROWS_AS(conjugate(Permutation::identity(3), Permutation::identity(4)), Error);
}

TEST_CASE("sequence conjugation is entrywise") {
  TranspositionSequence dual = conjugate_sequence(kWorked, Transposition(3, 4));
  CHECK(dual == seq(4, {{3, 4}, {1, 4}, {1, 2}, {3, 4}, {2, 4}}));

  TranspositionSequence disjoint = seq(5, {{1, 2}, {1, 2}});
  CHECK(conjugate_sequence(disjoint, Transposition(4, 5)) == disjoint);

  std::mt19937_64 rng(13);
  for (int round = 0; round < 100; ++round) {
    int n = 2 + static_cast<int>(rand_below(rng, 8));
    TranspositionSequence s =
        random_sequence(rng, n, static_cast<int>(rand_below(rng, 13)));
    Transposition t = random_transposition(rng, n);
    CHECK(conjugate_sequence(conjugate_sequence(s, t), t) == s);
  }
}

TEST_CASE("contraction collapses runs") {
  CHECK(contraction({3, 4, 4, 4, 3, 2, 2}) == std::vector<int>{3, 4, 3, 2});
  CHECK(contraction({5}) == std::vector<int>{5});
  CHECK(contraction({1, 1, 1}) == std::vector<int>{1});
  CHECK_THROWS_AS(contraction({}), Error);
}

TEST_CASE("trajectory of a point") {
  CHECK(trajectory(kWorked, 3) == std::vector<int>{3, 4, 3, 2});
  CHECK(trajectory(seq(6, {{1, 2}}), 5) == std::vector<int>{5});
  CHECK_THROWS_AS(trajectory(kWorked, 5), Error);

  std::mt19937_64 rng(14);
  for (int round = 0; round < 200; ++round) {
    int n = 2 + static_cast<int>(rand_below(rng, 8));
    TranspositionSequence s =
        random_sequence(rng, n, static_cast<int>(rand_below(rng, 13)));
    int x = 1 + static_cast<int>(rand_below(rng, n));
    CHECK(trajectory(s, x).back() == s.product()(x));
  }
}

TEST_CASE("cycle strings parse back") {
  Permutation p = Permutation::from_images({2, 1, 4, 5, 3});
  CHECK(p.cycle_string() == "(1,2)(3,4,5)");
  CHECK(parse_cycles(p.cycle_string(), 5) == p);
  CHECK(parse_cycles("(4,3,2,1)", 4) == Permutation::down_cycle(4));
  CHECK(parse_cycles("()", 3).is_identity());
  CHECK(Permutation::identity(3).cycle_string() == "()");
}
