#pragma once

#include <utility>
#include <vector>

#include "permdual/perm.hpp"

namespace permdual {

// Loop-less undirected edge, endpoints stored with u < v.
struct Edge {
  int u, v;

  Edge(int a, int b);
  bool operator==(const Edge&) const = default;
};

// Multigraph on vertices [n] whose m edges carry the distinct labels [m].
// Parallel edges are distinguished by label only. Interchangeable with a
// TranspositionSequence: entry k of the sequence is the edge labeled k.
class LabeledMultigraph {
 public:
  LabeledMultigraph(int n, std::vector<Edge> edges);
  static LabeledMultigraph from_sequence(const TranspositionSequence& s);
  TranspositionSequence to_sequence() const;

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int label) const;
  const std::vector<Edge>& edges() const { return edges_; }

  // (label, other endpoint) pairs at v, ascending by label.
  const std::vector<std::pair<int, int>>& incident(int v) const;

  // New graph in which the edge labeled e becomes the edge labeled
  // new_label_of[e-1]; new labels must form a bijection of [m].
  LabeledMultigraph relabeled(const std::vector<int>& new_label_of) const;

  bool operator==(const LabeledMultigraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;                            // edges_[k-1] has label k
  std::vector<std::vector<std::pair<int, int>>> adj_;  // per vertex, by label
};

}  // namespace permdual
