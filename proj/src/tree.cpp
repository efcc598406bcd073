#include "permdual/tree.hpp"

#include <algorithm>
#include <queue>

#include "permdual/errors.hpp"

namespace permdual {

VertexLabeledTree::VertexLabeledTree(int n_, std::vector<std::pair<int, int>> edges_)
    : n(n_) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "vertex count must be positive");
  edges.reserve(edges_.size());
  for (auto [a, b] : edges_) {
    if (a < 1 || b < 1 || a > n || b > n)
      fail(ErrorKind::LabelOutOfRange, "tree edge endpoint out of range");
    if (a == b) fail(ErrorKind::InvalidArgument, "loops are not allowed");
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  if (!is_connected_tree(n, edges)) fail(ErrorKind::NotATree, "edges do not form a tree");
}

bool is_connected_tree(int n, const std::vector<std::pair<int, int>>& edges) {
  if (static_cast<int>(edges.size()) != n - 1) return false;
  std::vector<std::vector<int>> adj(n + 1);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(n + 1, false);
  std::queue<int> queue;
  queue.push(1);
  seen[1] = true;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push(w);
      }
  }
  return reached == n;
}

VertexLabeledTree tree_from_prufer(int n, const std::vector<int>& code) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "vertex count must be positive");
  if (n <= 2) {
    if (!code.empty()) fail(ErrorKind::InvalidArgument, "code length must be n-2");
    if (n == 1) return VertexLabeledTree(1, {});
    return VertexLabeledTree(2, {{1, 2}});
  }
  if (static_cast<int>(code.size()) != n - 2)
    fail(ErrorKind::InvalidArgument, "code length must be n-2");
  std::vector<int> degree(n + 1, 1);
  for (int c : code) {
    if (c < 1 || c > n) fail(ErrorKind::LabelOutOfRange, "code value out of range");
    ++degree[c];
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
  for (int v = 1; v <= n; ++v)
    if (degree[v] == 1) leaves.push(v);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (int c : code) {
    int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  int a = leaves.top();
  leaves.pop();
  int b = leaves.top();
  edges.emplace_back(a, b);
  return VertexLabeledTree(n, std::move(edges));
}

std::vector<int> prufer_from_tree(const VertexLabeledTree& t) {
  int n = t.n;
  if (n <= 2) return {};
  std::vector<std::vector<int>> adj(n + 1);
  for (auto [a, b] : t.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> degree(n + 1, 0);
  for (int v = 1; v <= n; ++v) degree[v] = static_cast<int>(adj[v].size());
  std::vector<bool> gone(n + 1, false);
  std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
  for (int v = 1; v <= n; ++v)
    if (degree[v] == 1) leaves.push(v);
  std::vector<int> code;
  code.reserve(n - 2);
  for (int step = 0; step < n - 2; ++step) {
    int leaf = leaves.top();
    leaves.pop();
    gone[leaf] = true;
    int neighbor = 0;
    for (int w : adj[leaf])
      if (!gone[w]) neighbor = w;
    code.push_back(neighbor);
    if (--degree[neighbor] == 1) leaves.push(neighbor);
  }
  return code;
}

void for_each_tree(int n, const std::function<void(const VertexLabeledTree&)>& visit) {
  if (n <= 2) {
    visit(tree_from_prufer(n, {}));
    return;
  }
  std::vector<int> code(n - 2, 1);
  for (;;) {
    visit(tree_from_prufer(n, code));
    int pos = n - 3;
    while (pos >= 0 && code[pos] == n) code[pos--] = 1;
    if (pos < 0) break;
    ++code[pos];
  }
}

std::uint64_t tree_count(int n) {
  if (n <= 2) return 1;
  std::uint64_t result = 1;
  for (int i = 0; i < n - 2; ++i) result *= static_cast<std::uint64_t>(n);
  return result;
}

}  // namespace permdual
