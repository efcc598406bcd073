#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "permdual/perm.hpp"
#include "permdual/tree.hpp"

namespace permdual {

bool is_tree_sequence(const TranspositionSequence& s);
// Length n-1, tree, product (n, ..., 2, 1).
bool is_down_factorization(const TranspositionSequence& s);
// Length n-1, tree, product (1, 2, ..., n).
bool is_up_factorization(const TranspositionSequence& s);

// Keeps vertex 1; every other vertex takes 1 + the label of its edge
// toward vertex 1, then edge labels are dropped. Bijective on any tree.
VertexLabeledTree edge_labels_to_vertex_labels(const TranspositionSequence& t);

// The same relabeling, restricted to factorizations of (1, ..., n).
VertexLabeledTree up_factorization_to_tree(const TranspositionSequence& t);

// Inverse: each vertex v != 1 labels its edge toward 1 with v - 1; vertex
// labels are then reassigned by chaining greedy trails from vertex 1.
TranspositionSequence tree_to_up_factorization(const VertexLabeledTree& t);

// Dual followed by the relabeling; bijection between factorizations of
// (n, ..., 1) and vertex-labeled trees.
VertexLabeledTree down_factorization_to_tree(const TranspositionSequence& s);
TranspositionSequence tree_to_down_factorization(const VertexLabeledTree& t);

// Unordered pair of disjoint nonempty sets covering [n]. The part holding
// the smallest label is stored first, so equality is order-free.
class VertexPartition {
 public:
  VertexPartition(std::vector<int> a, std::vector<int> b);

  const std::vector<int>& first() const { return a_; }
  const std::vector<int>& second() const { return b_; }
  int min_part_size() const;
  std::string to_string() const;

  bool operator==(const VertexPartition&) const = default;

 private:
  std::vector<int> a_, b_;
};

// Components left when entry k's edge is deleted from the tree.
VertexPartition edge_deletion_partition(const TranspositionSequence& tree_seq, int k);
VertexPartition edge_deletion_partition(const VertexLabeledTree& t,
                                        std::pair<int, int> edge);

// Split of the product cycle (x, x1, ..., xa, y, y1, ..., yb) at entry
// k = (x, y) into {x, x1, ..., xa} and {y, y1, ..., yb}.
VertexPartition cycle_split_partition(const TranspositionSequence& tree_seq, int k);

int edge_deletion_index(const TranspositionSequence& tree_seq, int k);
int edge_deletion_index(const VertexLabeledTree& t, std::pair<int, int> edge);
int cycle_split_index(const TranspositionSequence& tree_seq, int k);

// For every entry k, the edge-deletion partition of s must equal the
// cycle-split partition of the dual at k and vice versa; the multiset of
// cycle-split indices of s must equal the multiset of edge-deletion
// indices of its tree image.
struct PartitionDualityReport {
  bool ok = false;
  int bad_entry = 0;  // 1-based; 0 when ok
  std::string detail;
};

PartitionDualityReport verify_partition_duality(const TranspositionSequence& s);

// Cap for exhaustive enumeration; PERMDUAL_MAX_N overrides the default 8.
int enumeration_cap();

enum class FactorizationGenerator {
  PrunedDfs,  // depth-first over transpositions, forest-pruned, product-checked
  Prufer,     // trees by Prufer code, pulled back through the bijection
};

// Streams every factorization of (n, ..., 2, 1) into n-1 transpositions.
void for_each_down_factorization(
    int n, FactorizationGenerator gen,
    const std::function<void(const TranspositionSequence&)>& visit);

void for_each_up_factorization(
    int n, FactorizationGenerator gen,
    const std::function<void(const TranspositionSequence&)>& visit);

std::vector<TranspositionSequence> enumerate_down_factorizations(
    int n, FactorizationGenerator gen = FactorizationGenerator::Prufer);

std::uint64_t count_down_factorizations(int n, FactorizationGenerator gen);

}  // namespace permdual
