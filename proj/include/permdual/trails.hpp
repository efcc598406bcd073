#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permdual/graph.hpp"

namespace permdual {

// Walk that never repeats an edge; edge_labels[i] joins vertices[i] and
// vertices[i+1]. A trivial trail is a single vertex and no edges.
struct Trail {
  std::vector<int> vertices;
  std::vector<int> edge_labels;

  int start() const { return vertices.front(); }
  int end() const { return vertices.back(); }
  bool trivial() const { return edge_labels.empty(); }

  bool operator==(const Trail&) const = default;
};

// From u, repeatedly take the smallest incident edge label exceeding every
// label used so far; stops when no such edge exists.
Trail greedy_trail(const LabeledMultigraph& g, int u);

enum class CoverViolation {
  None,
  TrailLegality,
  StartUniqueness,
  EdgeUse,
  EndUniqueness,
};

struct CoverReport {
  CoverViolation violation = CoverViolation::None;
  std::string detail;

  bool ok() const { return violation == CoverViolation::None; }
};

// Checks the double-cover conditions: every trail legal in g, exactly one
// trail starting at each vertex, every edge used exactly twice across the
// cover, and (implied but still checked) one trail ending at each vertex.
CoverReport validate_cover(const LabeledMultigraph& g,
                           const std::vector<Trail>& trails);

class TrailDoubleCover {
 public:
  // Accepts trails in any order; validates and stores them by start vertex.
  static TrailDoubleCover from_trails(LabeledMultigraph g,
                                      std::vector<Trail> trails);

  const LabeledMultigraph& graph() const { return graph_; }
  const Trail& trail_starting_at(int v) const;
  const std::vector<Trail>& trails() const { return trails_; }

  bool operator==(const TrailDoubleCover& other) const {
    return graph_ == other.graph_ && trails_ == other.trails_;
  }

 private:
  friend TrailDoubleCover greedy_trail_cover(const LabeledMultigraph& g);
  TrailDoubleCover(LabeledMultigraph g, std::vector<Trail> trails_by_start)
      : graph_(std::move(g)), trails_(std::move(trails_by_start)) {}

  LabeledMultigraph graph_;
  std::vector<Trail> trails_;  // trails_[v-1] starts at v
};

// The set of greedy trails of g, one per start vertex.
TrailDoubleCover greedy_trail_cover(const LabeledMultigraph& g);

// Start vertex -> end vertex of each trail.
Permutation cover_permutation(const TrailDoubleCover& c);

// Digraph on the edge labels of the base graph; one arc per consecutive
// edge pair of some trail (duplicates collapsed).
struct EdgeDigraph {
  int node_count = 0;
  std::vector<std::pair<int, int>> arcs;  // sorted, unique

  bool operator==(const EdgeDigraph&) const = default;
};

EdgeDigraph edge_digraph(const TrailDoubleCover& c);

struct RealizeResult {
  bool realizable = false;
  // When realizable: labeling[e-1] is the new label of edge e, and the
  // greedy trails of the relabeled graph reproduce the cover (verified).
  std::vector<int> labeling;
  // Otherwise: a directed cycle in the edge digraph, rotated to start at
  // its smallest node; cycle[i] -> cycle[i+1], last -> first.
  std::vector<int> cycle;
};

RealizeResult realize(const TrailDoubleCover& c);

// True when the greedy cover of original.graph().relabeled(new_label_of)
// is the original cover with every edge label mapped through new_label_of.
bool cover_survives_relabel(const TrailDoubleCover& original,
                            const std::vector<int>& new_label_of);

}  // namespace permdual
