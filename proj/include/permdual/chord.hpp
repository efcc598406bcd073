#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "permdual/graph.hpp"
#include "permdual/perm.hpp"
#include "permdual/trails.hpp"

namespace permdual {

// Chord between two of the n circle points; endpoints stored with a < b.
struct Chord {
  int a, b;

  Chord(int a_, int b_);
  bool operator==(const Chord&) const = default;
};

// n points labeled 1..n clockwise on a circle, plus one labeled chord per
// tree edge. Geometry is purely combinatorial: only the circular order of
// the points matters.
class CircleChordDiagram {
 public:
  CircleChordDiagram(int n, std::vector<Chord> chords);
  static CircleChordDiagram from_tree_sequence(const TranspositionSequence& t);

  int point_count() const { return n_; }
  int chord_count() const { return static_cast<int>(chords_.size()); }
  const Chord& chord(int label) const;
  const std::vector<Chord>& chords() const { return chords_; }

  // Steps from v to u going clockwise; 0 for u == v.
  int clockwise_distance(int v, int u) const;

  // Chords at v as (far endpoint, label), ordered by clockwise distance of
  // the far endpoint from v. The last entry is the most clockwise chord.
  std::vector<std::pair<int, int>> incident_clockwise(int v) const;

 private:
  int n_;
  std::vector<Chord> chords_;  // chords_[k-1] has label k
};

// Two chords with disjoint endpoints cross iff exactly one endpoint of one
// lies strictly between the endpoints of the other in clockwise order;
// chords sharing an endpoint never cross. Returns the labels of some
// crossing pair, or nullopt.
std::optional<std::pair<int, int>> find_crossing(const CircleChordDiagram& d);

// At each point the labels of the incident chords must strictly decrease
// as we turn clockwise. Returns a violating point, or nullopt.
std::optional<int> find_clockwise_violation(const CircleChordDiagram& d);

// Boundary of the region containing arc x (the arc from x-1 to x). The
// trail records the chords traversed, in order; for tree diagrams it runs
// from x to x-1 (with 0 read as n). Uses only circular order, never labels.
struct RegionWalk {
  int region = 0;
  Trail boundary;
};

RegionWalk region_walk(const CircleChordDiagram& d, int x);

// Dual read off the circle: one vertex per region, an edge labeled k
// between the two regions bordered by chord k. Input must be a tree whose
// diagram is non-crossing with clockwise-decreasing labels.
LabeledMultigraph circle_dual(const TranspositionSequence& t);

}  // namespace permdual
