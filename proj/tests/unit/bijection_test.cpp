#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "permdual/bijection.hpp"
#include "permdual/mindbody.hpp"
#include "permdual/text.hpp"
#include "support.hpp"

using namespace permdual;
using testsupport::fixture_sequence;
using testsupport::read_fixture;

namespace {

TranspositionSequence seq(int n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Transposition> entries;
  for (auto [x, y] : pairs) entries.emplace_back(x, y);
  return TranspositionSequence(n, std::move(entries));
}

}  // namespace

TEST_CASE("prufer codes round-trip") {
  std::mt19937_64 rng(51);
  for (int round = 0; round < 200; ++round) {
    int n = 3 + static_cast<int>(rand_below(rng, 7));
    std::vector<int> code(n - 2);
    for (int& c : code) c = 1 + static_cast<int>(rand_below(rng, n));
    VertexLabeledTree t = tree_from_prufer(n, code);
    CHECK(prufer_from_tree(t) == code);
  }
  CHECK(tree_from_prufer(2, {}) == VertexLabeledTree(2, {{1, 2}}));
}

TEST_CASE("tree enumeration matches the subset oracle") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<std::pair<int, int>>> via_prufer;
    for_each_tree(n, [&](const VertexLabeledTree& t) { via_prufer.insert(t.edges); });
    auto oracle = testsupport::brute_force_trees(n);
    std::set<std::vector<std::pair<int, int>>> expected(oracle.begin(), oracle.end());
    CHECK(via_prufer == expected);
    CHECK(via_prufer.size() == tree_count(n));
  }
}

TEST_CASE("the three factorizations for n=3") {
  auto members = enumerate_down_factorizations(3, FactorizationGenerator::PrunedDfs);
  auto got = testsupport::formatted_sorted(members);
  std::vector<std::string> expected{
      format_sequence(seq(3, {{1, 2}, {2, 3}})),
      format_sequence(seq(3, {{1, 3}, {1, 2}})),
      format_sequence(seq(3, {{2, 3}, {1, 3}})),
  };
  std::sort(expected.begin(), expected.end());
  CHECK(got == expected);
}

TEST_CASE("factorization counts and generator agreement") {
  auto two = enumerate_down_factorizations(2, FactorizationGenerator::PrunedDfs);
  REQUIRE(two.size() == 1);
  CHECK(two[0] == seq(2, {{1, 2}}));

  for (int n = 1; n <= 5; ++n) {
    auto dfs = enumerate_down_factorizations(n, FactorizationGenerator::PrunedDfs);
    auto prufer = enumerate_down_factorizations(n, FactorizationGenerator::Prufer);
    CHECK(dfs.size() == tree_count(n));
    CHECK(testsupport::formatted_sorted(dfs) == testsupport::formatted_sorted(prufer));
    if (n <= 5) {
      auto oracle = testsupport::brute_force_down(n);
      CHECK(testsupport::formatted_sorted(dfs) == testsupport::formatted_sorted(oracle));
    }
    for (const auto& member : dfs) CHECK(is_tree_sequence(member));
  }
}

TEST_CASE("the enumeration cap guards big n and follows PERMDUAL_MAX_N") {
  unsetenv("PERMDUAL_MAX_N");
  CHECK(enumeration_cap() == 8);
  CHECK_THROWS_AS(count_down_factorizations(9, FactorizationGenerator::Prufer), Error);
  setenv("PERMDUAL_MAX_N", "9", 1);
  CHECK(enumeration_cap() == 9);
  setenv("PERMDUAL_MAX_N", "4", 1);
  CHECK_THROWS_AS(count_down_factorizations(5, FactorizationGenerator::Prufer), Error);
  unsetenv("PERMDUAL_MAX_N");
}

TEST_CASE("vertex relabeling of the fig8 fixture tree") {
  TranspositionSequence t = fixture_sequence("fig8.seq");
  VertexLabeledTree expected = parse_tree(read_fixture("fig8_s.tree"));
  CHECK(edge_labels_to_vertex_labels(t) == expected);

  // The fig8 tree multiplies to (8, ..., 1), so the checked entry
  // point rejects it; the relabeling itself is product-agnostic.
  CHECK_THROWS_AS(up_factorization_to_tree(t), Error);

  TranspositionSequence up = tree_to_up_factorization(expected);
  CHECK(is_up_factorization(up));
  CHECK(up_factorization_to_tree(up) == expected);
}

TEST_CASE("relabeling small trees") {
  CHECK(edge_labels_to_vertex_labels(seq(2, {{1, 2}})) ==
        VertexLabeledTree(2, {{1, 2}}));

  // Star centered at 1: each leaf takes one more than its edge label.
  TranspositionSequence star = seq(4, {{1, 3}, {1, 4}, {1, 2}});
  VertexLabeledTree relabeled = edge_labels_to_vertex_labels(star);
  CHECK(relabeled == VertexLabeledTree(4, {{1, 2}, {1, 3}, {1, 4}}));

  CHECK_THROWS_AS(edge_labels_to_vertex_labels(seq(3, {{1, 2}, {1, 2}})), Error);
}

TEST_CASE("relabeling round-trips over all small trees") {
  for (int n = 1; n <= 6; ++n) {
    for_each_tree(n, [&](const VertexLabeledTree& t) {
      TranspositionSequence up = tree_to_up_factorization(t);
      CHECK(is_up_factorization(up));
      CHECK(up_factorization_to_tree(up) == t);
    });
  }
}

TEST_CASE("bijection pairs factorizations with trees for n=3") {
  auto members = enumerate_down_factorizations(3, FactorizationGenerator::PrunedDfs);
  std::set<std::vector<std::pair<int, int>>> images;
  for (const auto& s : members) images.insert(down_factorization_to_tree(s).edges);
  auto oracle = testsupport::brute_force_trees(3);
  std::set<std::vector<std::pair<int, int>>> expected;
  for (auto& edges : oracle) expected.insert(VertexLabeledTree(3, edges).edges);
  CHECK(images == expected);
}

TEST_CASE("bijection round-trips and image sizes") {
  for (int n = 2; n <= 5; ++n) {
    std::set<std::vector<std::pair<int, int>>> images;
    for_each_down_factorization(
        n, FactorizationGenerator::PrunedDfs, [&](const TranspositionSequence& s) {
          VertexLabeledTree image = down_factorization_to_tree(s);
          images.insert(image.edges);
          CHECK(tree_to_down_factorization(image) == s);
        });
    CHECK(images.size() == tree_count(n));
  }
  CHECK_THROWS_AS(down_factorization_to_tree(seq(3, {{1, 2}, {1, 3}})), Error);
  CHECK_THROWS_AS(down_factorization_to_tree(seq(4, {{1, 2}, {1, 2}, {3, 4}})), Error);
}

TEST_CASE("edge deletion partitions") {
  TranspositionSequence t = fixture_sequence("fig8.seq");
  // entry 4 is (2,8)
  CHECK(edge_deletion_partition(t, 4) ==
        VertexPartition({1, 8}, {2, 3, 4, 5, 6, 7}));
  // entry 1 is the leaf edge (4,5)
  CHECK(edge_deletion_partition(t, 1) ==
        VertexPartition({4}, {1, 2, 3, 5, 6, 7, 8}));
  for (int k = 1; k <= 7; ++k) {
    VertexPartition p = edge_deletion_partition(t, k);
    CHECK(p.first().size() + p.second().size() == 8);
  }
}

TEST_CASE("cycle split partitions") {
  TranspositionSequence t = fixture_sequence("fig8.seq");
  CHECK(cycle_split_partition(t, 4) ==
        VertexPartition({1, 2}, {3, 4, 5, 6, 7, 8}));
  CHECK(cycle_split_partition(seq(2, {{1, 2}}), 1) == VertexPartition({1}, {2}));
}

TEST_CASE("partition indices") {
  TranspositionSequence t = fixture_sequence("fig8.seq");
  CHECK(edge_deletion_index(t, 4) == 2);
  CHECK(cycle_split_index(t, 4) == 2);
  CHECK(edge_deletion_index(t, 1) == 1);
  for (int k = 1; k <= 7; ++k) {
    CHECK(cycle_split_index(t, k) >= 1);
    CHECK(cycle_split_index(t, k) <= 4);
  }
}

TEST_CASE("partition duality on sampled large factorizations") {
  std::mt19937_64 rng(52);
  for (int round = 0; round < 300; ++round) {
    int n = 7 + static_cast<int>(rand_below(rng, 2));
    TranspositionSequence s = random_down_factorization(rng, n);
    PartitionDualityReport report = verify_partition_duality(s);
    std::string context = format_sequence(s) + ": " + report.detail;
    REQUIRE_MESSAGE(report.ok, context);
  }
}
