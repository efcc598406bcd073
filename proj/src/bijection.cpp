#include "permdual/bijection.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "permdual/graph.hpp"
#include "permdual/mindbody.hpp"
#include "permdual/trails.hpp"

namespace permdual {

bool is_tree_sequence(const TranspositionSequence& s) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(s.size());
  for (const auto& t : s) edges.emplace_back(t.x(), t.y());
  return is_connected_tree(s.n(), edges);
}

bool is_down_factorization(const TranspositionSequence& s) {
  return is_tree_sequence(s) && s.product() == Permutation::down_cycle(s.n());
}

bool is_up_factorization(const TranspositionSequence& s) {
  return is_tree_sequence(s) && s.product() == Permutation::up_cycle(s.n());
}

namespace {

// parent_edge[v] = label of the edge joining v to its BFS parent, root 1.
std::vector<int> parent_edge_labels(const TranspositionSequence& t) {
  int n = t.n();
  std::vector<std::vector<std::pair<int, int>>> adj(n + 1);  // (label, other)
  for (std::size_t k = 0; k < t.size(); ++k) {
    adj[t[k].x()].emplace_back(static_cast<int>(k) + 1, t[k].y());
    adj[t[k].y()].emplace_back(static_cast<int>(k) + 1, t[k].x());
  }
  std::vector<int> parent_edge(n + 1, 0);
  std::vector<bool> seen(n + 1, false);
  std::queue<int> queue;
  queue.push(1);
  seen[1] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (auto [label, w] : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        parent_edge[w] = label;
        queue.push(w);
      }
  }
  return parent_edge;
}

}  // namespace

VertexLabeledTree edge_labels_to_vertex_labels(const TranspositionSequence& t) {
  if (!is_tree_sequence(t)) fail(ErrorKind::NotATree, "sequence is not a tree");
  int n = t.n();
  std::vector<int> parent_edge = parent_edge_labels(t);
  std::vector<int> new_label(n + 1, 0);
  new_label[1] = 1;
  for (int v = 2; v <= n; ++v) new_label[v] = 1 + parent_edge[v];
  std::vector<std::pair<int, int>> edges;
  edges.reserve(t.size());
  for (const auto& e : t) edges.emplace_back(new_label[e.x()], new_label[e.y()]);
  return VertexLabeledTree(n, std::move(edges));
}

VertexLabeledTree up_factorization_to_tree(const TranspositionSequence& t) {
  if (!is_tree_sequence(t)) fail(ErrorKind::NotATree, "sequence is not a tree");
  if (t.product() != Permutation::up_cycle(t.n()))
    fail(ErrorKind::WrongProduct, "product is not (1, 2, ..., n)");
  return edge_labels_to_vertex_labels(t);
}

TranspositionSequence tree_to_up_factorization(const VertexLabeledTree& t) {
  int n = t.n;
  if (n == 1) return TranspositionSequence(1);
  // Edge toward vertex 1 takes the label (child vertex) - 1.
  std::vector<std::vector<std::pair<int, int>>> adj(n + 1);  // (edge index, other)
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    auto [a, b] = t.edges[i];
    adj[a].emplace_back(static_cast<int>(i), b);
    adj[b].emplace_back(static_cast<int>(i), a);
  }
  std::vector<int> edge_label(t.edges.size(), 0);
  std::vector<bool> seen(n + 1, false);
  std::queue<int> queue;
  queue.push(1);
  seen[1] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (auto [index, w] : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        edge_label[index] = w - 1;
        queue.push(w);
      }
  }
  std::vector<Edge> labeled(n - 1, Edge(1, 2));
  for (std::size_t i = 0; i < t.edges.size(); ++i)
    labeled[edge_label[i] - 1] = Edge(t.edges[i].first, t.edges[i].second);
  LabeledMultigraph g(n, std::move(labeled));

  // Vertex labels come from chaining greedy trails: the trail from the
  // vertex labeled k ends at the vertex to label k + 1.
  std::vector<int> vertex_label(n + 1, 0);
  vertex_label[1] = 1;
  int cur = 1;
  for (int next = 2; next <= n; ++next) {
    int end = greedy_trail(g, cur).end();
    assert(vertex_label[end] == 0);
    vertex_label[end] = next;
    cur = end;
  }
  std::vector<Transposition> entries;
  entries.reserve(n - 1);
  for (int k = 1; k <= n - 1; ++k) {
    const Edge& e = g.edge(k);
    entries.emplace_back(vertex_label[e.u], vertex_label[e.v]);
  }
  return TranspositionSequence(n, std::move(entries));
}

VertexLabeledTree down_factorization_to_tree(const TranspositionSequence& s) {
  if (!is_tree_sequence(s)) fail(ErrorKind::NotATree, "sequence is not a tree");
  if (s.product() != Permutation::down_cycle(s.n()))
    fail(ErrorKind::WrongProduct, "product is not (n, ..., 2, 1)");
  return up_factorization_to_tree(mind_body_dual(s));
}

TranspositionSequence tree_to_down_factorization(const VertexLabeledTree& t) {
  return mind_body_dual(tree_to_up_factorization(t));
}

VertexPartition::VertexPartition(std::vector<int> a, std::vector<int> b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.empty() || b_.empty())
    fail(ErrorKind::InvalidArgument, "partition parts must be nonempty");
  std::sort(a_.begin(), a_.end());
  std::sort(b_.begin(), b_.end());
  if (b_.front() < a_.front()) std::swap(a_, b_);
}

int VertexPartition::min_part_size() const {
  return static_cast<int>(std::min(a_.size(), b_.size()));
}

std::string VertexPartition::to_string() const {
  auto part = [](const std::vector<int>& p) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) out << ',';
      out << p[i];
    }
    out << '}';
    return out.str();
  };
  return "{" + part(a_) + "," + part(b_) + "}";
}

namespace {

void check_entry_index(const TranspositionSequence& s, int k) {
  if (k < 1 || k > static_cast<int>(s.size()))
    fail(ErrorKind::LabelOutOfRange, "entry index out of range");
}

VertexPartition split_by_deleted_edge(int n,
                                      const std::vector<std::pair<int, int>>& edges,
                                      std::size_t deleted) {
  std::vector<std::vector<int>> adj(n + 1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i == deleted) continue;
    adj[edges[i].first].push_back(edges[i].second);
    adj[edges[i].second].push_back(edges[i].first);
  }
  std::vector<bool> seen(n + 1, false);
  std::queue<int> queue;
  queue.push(edges[deleted].first);
  seen[edges[deleted].first] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        queue.push(w);
      }
  }
  std::vector<int> a, b;
  for (int v = 1; v <= n; ++v) (seen[v] ? a : b).push_back(v);
  return VertexPartition(std::move(a), std::move(b));
}

}  // namespace

VertexPartition edge_deletion_partition(const TranspositionSequence& tree_seq, int k) {
  check_entry_index(tree_seq, k);
  if (!is_tree_sequence(tree_seq)) fail(ErrorKind::NotATree, "sequence is not a tree");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(tree_seq.size());
  for (const auto& t : tree_seq) edges.emplace_back(t.x(), t.y());
  return split_by_deleted_edge(tree_seq.n(), edges, static_cast<std::size_t>(k) - 1);
}

VertexPartition edge_deletion_partition(const VertexLabeledTree& t,
                                        std::pair<int, int> edge) {
  auto canonical = std::make_pair(std::min(edge.first, edge.second),
                                  std::max(edge.first, edge.second));
  auto it = std::find(t.edges.begin(), t.edges.end(), canonical);
  if (it == t.edges.end()) fail(ErrorKind::InvalidArgument, "no such tree edge");
  return split_by_deleted_edge(t.n, t.edges,
                               static_cast<std::size_t>(it - t.edges.begin()));
}

VertexPartition cycle_split_partition(const TranspositionSequence& tree_seq, int k) {
  check_entry_index(tree_seq, k);
  if (!is_tree_sequence(tree_seq)) fail(ErrorKind::NotATree, "sequence is not a tree");
  Permutation p = tree_seq.product();
  int n = tree_seq.n();
  int x = tree_seq[k - 1].x();
  int y = tree_seq[k - 1].y();
  // The product of a tree sequence is a single n-cycle; walk it from x.
  std::vector<int> a, b;
  std::vector<int>* side = &a;
  int v = x;
  for (int step = 0; step < n; ++step) {
    if (v == y) side = &b;
    side->push_back(v);
    v = p(v);
  }
  if (v != x || a.empty() || b.empty())
    fail(ErrorKind::InvalidArgument, "product is not a full cycle through both labels");
  return VertexPartition(std::move(a), std::move(b));
}

int edge_deletion_index(const TranspositionSequence& tree_seq, int k) {
  return edge_deletion_partition(tree_seq, k).min_part_size();
}

int edge_deletion_index(const VertexLabeledTree& t, std::pair<int, int> edge) {
  return edge_deletion_partition(t, edge).min_part_size();
}

int cycle_split_index(const TranspositionSequence& tree_seq, int k) {
  return cycle_split_partition(tree_seq, k).min_part_size();
}

PartitionDualityReport verify_partition_duality(const TranspositionSequence& s) {
  PartitionDualityReport report;
  if (!is_down_factorization(s)) {
    report.detail = "input is not a factorization of (n, ..., 1)";
    return report;
  }
  TranspositionSequence dual = mind_body_dual(s);
  for (int k = 1; k <= static_cast<int>(s.size()); ++k) {
    if (edge_deletion_partition(s, k) != cycle_split_partition(dual, k)) {
      report.bad_entry = k;
      report.detail = "edge-deletion partition differs from dual cycle split";
      return report;
    }
    if (cycle_split_partition(s, k) != edge_deletion_partition(dual, k)) {
      report.bad_entry = k;
      report.detail = "cycle-split partition differs from dual edge deletion";
      return report;
    }
  }
  VertexLabeledTree image = down_factorization_to_tree(s);
  std::vector<int> cycle_indices, tree_indices;
  for (int k = 1; k <= static_cast<int>(s.size()); ++k)
    cycle_indices.push_back(cycle_split_index(s, k));
  for (const auto& edge : image.edges)
    tree_indices.push_back(edge_deletion_index(image, edge));
  std::sort(cycle_indices.begin(), cycle_indices.end());
  std::sort(tree_indices.begin(), tree_indices.end());
  if (cycle_indices != tree_indices) {
    report.bad_entry = 0;
    report.detail = "index multisets differ";
    return report;
  }
  report.ok = true;
  return report;
}

int enumeration_cap() {
  if (const char* env = std::getenv("PERMDUAL_MAX_N")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end && *end == '\0' && value >= 1 && value <= 16) return static_cast<int>(value);
  }
  return 8;
}

namespace {

void check_cap(int n) {
  int cap = enumeration_cap();
  if (n > cap)
    fail(ErrorKind::ResourceCap, "n=" + std::to_string(n) + " exceeds enumeration cap " +
                                     std::to_string(cap) +
                                     " (set PERMDUAL_MAX_N to raise it)");
  if (n < 1) fail(ErrorKind::InvalidArgument, "n must be positive");
}

class ForestDfs {
 public:
  ForestDfs(int n, const std::function<void(const TranspositionSequence&)>& visit)
      : n_(n), visit_(visit), target_(Permutation::down_cycle(n).images()),
        image_(n), inverse_(n), parent_(n + 1), size_(n + 1, 1) {
    for (int x = 1; x < n_; ++x)
      for (int y = x + 1; y <= n_; ++y) candidates_.emplace_back(x, y);
    std::iota(image_.begin(), image_.end(), 1);
    std::iota(inverse_.begin(), inverse_.end(), 1);
    std::iota(parent_.begin(), parent_.end(), 0);
    entries_.reserve(n_ - 1);
  }

  void run() {
    if (n_ == 1) {
      visit_(TranspositionSequence(1));
      return;
    }
    descend();
  }

 private:
  int find(int v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  void apply(const Transposition& t) {
    int i = inverse_[t.x() - 1], j = inverse_[t.y() - 1];
    std::swap(image_[i - 1], image_[j - 1]);
    std::swap(inverse_[t.x() - 1], inverse_[t.y() - 1]);
  }

  void descend() {
    if (static_cast<int>(entries_.size()) == n_ - 1) {
      if (image_ == target_) visit_(TranspositionSequence(n_, entries_));
      return;
    }
    for (const Transposition& t : candidates_) {
      int ra = find(t.x()), rb = find(t.y());
      if (ra == rb) continue;  // keeps the partial edge set a forest
      if (size_[ra] < size_[rb]) std::swap(ra, rb);
      parent_[rb] = ra;
      size_[ra] += size_[rb];
      apply(t);
      entries_.push_back(t);

      descend();

      entries_.pop_back();
      apply(t);
      size_[ra] -= size_[rb];
      parent_[rb] = rb;
    }
  }

  int n_;
  const std::function<void(const TranspositionSequence&)>& visit_;
  std::vector<int> target_;
  std::vector<Transposition> candidates_;
  std::vector<int> image_, inverse_;
  std::vector<int> parent_, size_;
  std::vector<Transposition> entries_;
};

}  // namespace

void for_each_down_factorization(
    int n, FactorizationGenerator gen,
    const std::function<void(const TranspositionSequence&)>& visit) {
  check_cap(n);
  if (gen == FactorizationGenerator::PrunedDfs) {
    ForestDfs(n, visit).run();
    return;
  }
  Permutation target = Permutation::down_cycle(n);
  for_each_tree(n, [&](const VertexLabeledTree& t) {
    TranspositionSequence s = tree_to_down_factorization(t);
    if (s.product() != target)
      throw std::logic_error("bijection produced a wrong-product factorization");
    visit(s);
  });
}

void for_each_up_factorization(
    int n, FactorizationGenerator gen,
    const std::function<void(const TranspositionSequence&)>& visit) {
  for_each_down_factorization(
      n, gen, [&](const TranspositionSequence& s) { visit(mind_body_dual(s)); });
}

std::vector<TranspositionSequence> enumerate_down_factorizations(
    int n, FactorizationGenerator gen) {
  std::vector<TranspositionSequence> all;
  for_each_down_factorization(n, gen,
                              [&](const TranspositionSequence& s) { all.push_back(s); });
  return all;
}

std::uint64_t count_down_factorizations(int n, FactorizationGenerator gen) {
  std::uint64_t count = 0;
  for_each_down_factorization(n, gen, [&](const TranspositionSequence&) { ++count; });
  return count;
}

}  // namespace permdual
