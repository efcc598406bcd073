#include "permdual/chord.hpp"

#include <algorithm>
#include <cassert>

#include "permdual/bijection.hpp"

namespace permdual {

Chord::Chord(int a_, int b_) : a(std::min(a_, b_)), b(std::max(a_, b_)) {
  if (a < 1) fail(ErrorKind::LabelOutOfRange, "chord endpoints must be positive");
  if (a == b) fail(ErrorKind::InvalidArgument, "chord endpoints must differ");
}

CircleChordDiagram::CircleChordDiagram(int n, std::vector<Chord> chords)
    : n_(n), chords_(std::move(chords)) {
  if (n_ < 1) fail(ErrorKind::InvalidArgument, "point count must be positive");
  for (const Chord& c : chords_)
    if (c.b > n_) fail(ErrorKind::LabelOutOfRange, "chord endpoint exceeds point count");
}

CircleChordDiagram CircleChordDiagram::from_tree_sequence(const TranspositionSequence& t) {
  if (!is_tree_sequence(t)) fail(ErrorKind::NotATree, "sequence is not a tree");
  std::vector<Chord> chords;
  chords.reserve(t.size());
  for (const auto& e : t) chords.emplace_back(e.x(), e.y());
  return CircleChordDiagram(t.n(), std::move(chords));
}

const Chord& CircleChordDiagram::chord(int label) const {
  if (label < 1 || label > chord_count())
    fail(ErrorKind::LabelOutOfRange, "chord label out of range");
  return chords_[label - 1];
}

int CircleChordDiagram::clockwise_distance(int v, int u) const {
  return ((u - v) % n_ + n_) % n_;
}

std::vector<std::pair<int, int>> CircleChordDiagram::incident_clockwise(int v) const {
  if (v < 1 || v > n_) fail(ErrorKind::LabelOutOfRange, "point out of range");
  std::vector<std::pair<int, int>> result;  // (far endpoint, label)
  for (int label = 1; label <= chord_count(); ++label) {
    const Chord& c = chords_[label - 1];
    if (c.a == v) result.emplace_back(c.b, label);
    else if (c.b == v) result.emplace_back(c.a, label);
  }
  std::sort(result.begin(), result.end(),
            [&](const std::pair<int, int>& p, const std::pair<int, int>& q) {
              int dp = clockwise_distance(v, p.first);
              int dq = clockwise_distance(v, q.first);
              if (dp != dq) return dp < dq;
              return p.second < q.second;  // parallel chords: keep order stable
            });
  return result;
}

std::optional<std::pair<int, int>> find_crossing(const CircleChordDiagram& d) {
  int m = d.chord_count();
  for (int i = 1; i <= m; ++i) {
    const Chord& c1 = d.chord(i);
    for (int j = i + 1; j <= m; ++j) {
      const Chord& c2 = d.chord(j);
      if (c1.a == c2.a || c1.a == c2.b || c1.b == c2.a || c1.b == c2.b)
        continue;  // chords meeting at a circle point do not cross
      int da = d.clockwise_distance(c1.a, c1.b);
      bool c_inside = 0 < d.clockwise_distance(c1.a, c2.a) &&
                      d.clockwise_distance(c1.a, c2.a) < da;
      bool d_inside = 0 < d.clockwise_distance(c1.a, c2.b) &&
                      d.clockwise_distance(c1.a, c2.b) < da;
      if (c_inside != d_inside) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

std::optional<int> find_clockwise_violation(const CircleChordDiagram& d) {
  for (int v = 1; v <= d.point_count(); ++v) {
    auto incident = d.incident_clockwise(v);
    for (std::size_t i = 0; i + 1 < incident.size(); ++i)
      if (incident[i].second <= incident[i + 1].second) return v;
  }
  return std::nullopt;
}

RegionWalk region_walk(const CircleChordDiagram& d, int x) {
  if (x < 1 || x > d.point_count()) fail(ErrorKind::LabelOutOfRange, "point out of range");
  if (auto crossing = find_crossing(d))
    fail(ErrorKind::CrossingChords,
         "chords " + std::to_string(crossing->first) + " and " +
             std::to_string(crossing->second) + " cross");

  RegionWalk walk;
  walk.region = x;
  int n = d.point_count();
  if (n == 1) {
    walk.boundary.vertices.push_back(x);
    return walk;
  }

  // Face tracing around the region containing arc x. The rotation at a
  // point v, clockwise, is: arc toward v+1, the chords ordered by their far
  // endpoints, arc toward v-1. Each step departs by the predecessor of the
  // arrival element; arriving along an arc counts as arriving on the
  // counter-clockwise side. The walk closes when the departure would be
  // arc x itself, i.e. the clockwise arc at x-1.
  int stop_point = x == 1 ? n : x - 1;
  int cur = x;
  int arrival_label = 0;  // 0 = arrived along an arc (or the start)
  for (;;) {
    auto incident = d.incident_clockwise(cur);
    int depart_label = 0;
    int depart_far = 0;
    if (arrival_label == 0) {
      if (!incident.empty()) {
        depart_far = incident.back().first;
        depart_label = incident.back().second;
      }
    } else {
      std::size_t index = 0;
      while (incident[index].second != arrival_label) ++index;
      if (index > 0) {
        depart_far = incident[index - 1].first;
        depart_label = incident[index - 1].second;
      }
    }
    if (depart_label == 0) {
      // Departure along the clockwise arc at cur.
      if (cur == stop_point) break;
      cur = cur % n + 1;
      arrival_label = 0;
      continue;
    }
    if (walk.boundary.vertices.empty()) walk.boundary.vertices.push_back(cur);
    walk.boundary.edge_labels.push_back(depart_label);
    walk.boundary.vertices.push_back(depart_far);
    cur = depart_far;
    arrival_label = depart_label;
  }
  if (walk.boundary.vertices.empty()) walk.boundary.vertices.push_back(x);
  return walk;
}

LabeledMultigraph circle_dual(const TranspositionSequence& t) {
  CircleChordDiagram d = CircleChordDiagram::from_tree_sequence(t);
  if (auto crossing = find_crossing(d))
    fail(ErrorKind::NotDownFactorization,
         "chords " + std::to_string(crossing->first) + " and " +
             std::to_string(crossing->second) + " cross");
  if (auto point = find_clockwise_violation(d))
    fail(ErrorKind::NotDownFactorization,
         "chord labels do not decrease clockwise at point " + std::to_string(*point));

  int m = d.chord_count();
  std::vector<std::pair<int, int>> regions_of(m + 1, {0, 0});
  for (int x = 1; x <= d.point_count(); ++x) {
    RegionWalk walk = region_walk(d, x);
    for (int label : walk.boundary.edge_labels) {
      auto& [first, second] = regions_of[label];
      (first == 0 ? first : second) = x;
    }
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int k = 1; k <= m; ++k) {
    assert(regions_of[k].first != 0 && regions_of[k].second != 0);
    edges.emplace_back(regions_of[k].first, regions_of[k].second);
  }
  return LabeledMultigraph(d.point_count(), std::move(edges));
}

}  // namespace permdual
