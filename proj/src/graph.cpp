#include "permdual/graph.hpp"

#include <algorithm>

namespace permdual {

Edge::Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (u < 1) fail(ErrorKind::LabelOutOfRange, "vertex labels must be positive");
  if (u == v) fail(ErrorKind::InvalidArgument, "loops are not allowed");
}

LabeledMultigraph::LabeledMultigraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) fail(ErrorKind::InvalidArgument, "vertex count must be positive");
  adj_.resize(n_ + 1);
  for (int k = 1; k <= edge_count(); ++k) {
    const Edge& e = edges_[k - 1];
    if (e.v > n_) fail(ErrorKind::LabelOutOfRange, "edge endpoint exceeds vertex count");
    adj_[e.u].emplace_back(k, e.v);
    adj_[e.v].emplace_back(k, e.u);
  }
  // already label-sorted: edges are pushed in label order
}

LabeledMultigraph LabeledMultigraph::from_sequence(const TranspositionSequence& s) {
  std::vector<Edge> edges;
  edges.reserve(s.size());
  for (const auto& t : s) edges.emplace_back(t.x(), t.y());
  return LabeledMultigraph(s.n(), std::move(edges));
}

TranspositionSequence LabeledMultigraph::to_sequence() const {
  std::vector<Transposition> entries;
  entries.reserve(edges_.size());
  for (const auto& e : edges_) entries.emplace_back(e.u, e.v);
  return TranspositionSequence(n_, std::move(entries));
}

const Edge& LabeledMultigraph::edge(int label) const {
  if (label < 1 || label > edge_count())
    fail(ErrorKind::LabelOutOfRange, "edge label out of range");
  return edges_[label - 1];
}

const std::vector<std::pair<int, int>>& LabeledMultigraph::incident(int v) const {
  if (v < 1 || v > n_) fail(ErrorKind::LabelOutOfRange, "vertex out of range");
  return adj_[v];
}

LabeledMultigraph LabeledMultigraph::relabeled(const std::vector<int>& new_label_of) const {
  int m = edge_count();
  if (static_cast<int>(new_label_of.size()) != m)
    fail(ErrorKind::DimensionMismatch, "relabeling size differs from edge count");
  std::vector<bool> seen(m + 1, false);
  for (int lbl : new_label_of) {
    if (lbl < 1 || lbl > m) fail(ErrorKind::LabelOutOfRange, "new label out of range");
    if (seen[lbl]) fail(ErrorKind::InvalidArgument, "new labels are not a bijection");
    seen[lbl] = true;
  }
  std::vector<Edge> edges(m, Edge(1, 2));
  for (int e = 1; e <= m; ++e) edges[new_label_of[e - 1] - 1] = edges_[e - 1];
  return LabeledMultigraph(n_, std::move(edges));
}

}  // namespace permdual
