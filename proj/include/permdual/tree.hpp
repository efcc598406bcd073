#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "permdual/perm.hpp"

namespace permdual {

// Tree on vertex set [n] with no edge labels; edges stored sorted with u < v.
struct VertexLabeledTree {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  VertexLabeledTree(int n_, std::vector<std::pair<int, int>> edges_);

  bool operator==(const VertexLabeledTree&) const = default;
};

bool is_connected_tree(int n, const std::vector<std::pair<int, int>>& edges);

// Standard Prufer correspondence between [n]^(n-2) and trees on [n].
VertexLabeledTree tree_from_prufer(int n, const std::vector<int>& code);
std::vector<int> prufer_from_tree(const VertexLabeledTree& t);

// All n^(n-2) trees, in lexicographic Prufer-code order.
void for_each_tree(int n, const std::function<void(const VertexLabeledTree&)>& visit);

std::uint64_t tree_count(int n);  // n^(n-2)

}  // namespace permdual
