#include "permdual/trails.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace permdual {

Trail greedy_trail(const LabeledMultigraph& g, int u) {
  if (u < 1 || u > g.vertex_count())
    fail(ErrorKind::LabelOutOfRange, "start vertex out of range");
  Trail trail;
  trail.vertices.push_back(u);
  int cur = u;
  int last_label = 0;
  for (;;) {
    const auto& inc = g.incident(cur);
    auto it = std::upper_bound(
        inc.begin(), inc.end(), last_label,
        [](int value, const std::pair<int, int>& entry) { return value < entry.first; });
    if (it == inc.end()) break;
    last_label = it->first;
    cur = it->second;
    trail.edge_labels.push_back(last_label);
    trail.vertices.push_back(cur);
  }
  return trail;
}

CoverReport validate_cover(const LabeledMultigraph& g, const std::vector<Trail>& trails) {
  auto fail_with = [](CoverViolation kind, const std::string& detail) {
    return CoverReport{kind, detail};
  };
  int n = g.vertex_count();
  int m = g.edge_count();

  for (const Trail& t : trails) {
    if (t.vertices.empty())
      return fail_with(CoverViolation::TrailLegality, "empty vertex list");
    if (t.edge_labels.size() + 1 != t.vertices.size())
      return fail_with(CoverViolation::TrailLegality, "edge/vertex count mismatch");
    for (int v : t.vertices)
      if (v < 1 || v > n)
        return fail_with(CoverViolation::TrailLegality,
                         "vertex " + std::to_string(v) + " out of range");
    std::set<int> used;
    for (std::size_t i = 0; i < t.edge_labels.size(); ++i) {
      int label = t.edge_labels[i];
      if (label < 1 || label > m)
        return fail_with(CoverViolation::TrailLegality,
                         "unknown edge label " + std::to_string(label));
      const Edge& e = g.edge(label);
      int a = t.vertices[i], b = t.vertices[i + 1];
      if (a == b || Edge(a, b) != e)
        return fail_with(CoverViolation::TrailLegality,
                         "edge " + std::to_string(label) + " does not join " +
                             std::to_string(a) + " and " + std::to_string(b));
      if (!used.insert(label).second)
        return fail_with(CoverViolation::TrailLegality,
                         "edge " + std::to_string(label) + " repeated within a trail");
    }
  }

  std::vector<int> starts(n + 1, 0);
  for (const Trail& t : trails) ++starts[t.start()];
  for (int v = 1; v <= n; ++v)
    if (starts[v] != 1)
      return fail_with(CoverViolation::StartUniqueness,
                       "vertex " + std::to_string(v) + " starts " +
                           std::to_string(starts[v]) + " trails");

  std::vector<int> uses(m + 1, 0);
  for (const Trail& t : trails)
    for (int label : t.edge_labels) ++uses[label];
  for (int e = 1; e <= m; ++e)
    if (uses[e] != 2)
      return fail_with(CoverViolation::EdgeUse, "edge " + std::to_string(e) + " used " +
                                                    std::to_string(uses[e]) + " times");

  std::vector<int> ends(n + 1, 0);
  for (const Trail& t : trails) ++ends[t.end()];
  for (int v = 1; v <= n; ++v)
    if (ends[v] != 1)
      return fail_with(CoverViolation::EndUniqueness,
                       "vertex " + std::to_string(v) + " ends " +
                           std::to_string(ends[v]) + " trails");

  return CoverReport{};
}

TrailDoubleCover TrailDoubleCover::from_trails(LabeledMultigraph g,
                                               std::vector<Trail> trails) {
  CoverReport report = validate_cover(g, trails);
  if (!report.ok()) fail(ErrorKind::InvalidCover, report.detail);
  std::vector<Trail> by_start(g.vertex_count());
  for (Trail& t : trails) {
    int v = t.start();
    by_start[v - 1] = std::move(t);
  }
  return TrailDoubleCover(std::move(g), std::move(by_start));
}

const Trail& TrailDoubleCover::trail_starting_at(int v) const {
  if (v < 1 || v > graph_.vertex_count())
    fail(ErrorKind::LabelOutOfRange, "vertex out of range");
  return trails_[v - 1];
}

TrailDoubleCover greedy_trail_cover(const LabeledMultigraph& g) {
  std::vector<Trail> trails;
  trails.reserve(g.vertex_count());
  for (int v = 1; v <= g.vertex_count(); ++v) trails.push_back(greedy_trail(g, v));
  return TrailDoubleCover(g, std::move(trails));
}

Permutation cover_permutation(const TrailDoubleCover& c) {
  int n = c.graph().vertex_count();
  std::vector<int> images(n);
  for (int v = 1; v <= n; ++v) images[v - 1] = c.trail_starting_at(v).end();
  return Permutation::from_images(std::move(images));
}

EdgeDigraph edge_digraph(const TrailDoubleCover& c) {
  std::set<std::pair<int, int>> arcs;
  for (const Trail& t : c.trails())
    for (std::size_t i = 0; i + 1 < t.edge_labels.size(); ++i)
      arcs.emplace(t.edge_labels[i], t.edge_labels[i + 1]);
  EdgeDigraph d;
  d.node_count = c.graph().edge_count();
  d.arcs.assign(arcs.begin(), arcs.end());
  return d;
}

namespace {

// Kahn's method with a min-ordered frontier keyed by node id, so the
// resulting labeling is deterministic and, for covers that came from a
// labeled graph, close to the original labels.
std::vector<int> topological_order(const EdgeDigraph& d) {
  int m = d.node_count;
  std::vector<std::vector<int>> succ(m + 1);
  std::vector<int> indeg(m + 1, 0);
  for (const auto& [a, b] : d.arcs) {
    succ[a].push_back(b);
    ++indeg[b];
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> frontier;
  for (int v = 1; v <= m; ++v)
    if (indeg[v] == 0) frontier.push(v);
  std::vector<int> order;
  order.reserve(m);
  while (!frontier.empty()) {
    int v = frontier.top();
    frontier.pop();
    order.push_back(v);
    for (int w : succ[v])
      if (--indeg[w] == 0) frontier.push(w);
  }
  return order;  // shorter than m exactly when a directed cycle remains
}

std::vector<int> find_directed_cycle(const EdgeDigraph& d,
                                     const std::vector<int>& topo_prefix) {
  int m = d.node_count;
  std::vector<bool> removed(m + 1, false);
  for (int v : topo_prefix) removed[v] = true;
  std::vector<std::vector<int>> pred(m + 1);
  for (const auto& [a, b] : d.arcs)
    if (!removed[a] && !removed[b]) pred[b].push_back(a);

  int start = 0;
  for (int v = 1; v <= m && !start; ++v)
    if (!removed[v]) start = v;
  assert(start != 0);

  // Every surviving node keeps an incoming arc from a surviving node
  // (otherwise the sort would have freed it), so walking the smallest
  // predecessor must revisit a node; that loop, reversed, is the cycle.
  std::vector<int> position(m + 1, -1);
  std::vector<int> path;
  int cur = start;
  while (position[cur] == -1) {
    position[cur] = static_cast<int>(path.size());
    path.push_back(cur);
    cur = *std::min_element(pred[cur].begin(), pred[cur].end());
  }
  std::vector<int> cycle(path.begin() + position[cur], path.end());
  std::reverse(cycle.begin(), cycle.end());
  auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());
  return cycle;
}

}  // namespace

bool cover_survives_relabel(const TrailDoubleCover& original,
                            const std::vector<int>& new_label_of) {
  TrailDoubleCover relabeled = greedy_trail_cover(original.graph().relabeled(new_label_of));
  for (int v = 1; v <= original.graph().vertex_count(); ++v) {
    const Trail& a = original.trail_starting_at(v);
    const Trail& b = relabeled.trail_starting_at(v);
    if (a.vertices != b.vertices) return false;
    if (a.edge_labels.size() != b.edge_labels.size()) return false;
    for (std::size_t i = 0; i < a.edge_labels.size(); ++i)
      if (new_label_of[a.edge_labels[i] - 1] != b.edge_labels[i]) return false;
  }
  return true;
}

RealizeResult realize(const TrailDoubleCover& c) {
  EdgeDigraph d = edge_digraph(c);
  std::vector<int> order = topological_order(d);
  RealizeResult result;
  if (static_cast<int>(order.size()) < d.node_count) {
    result.realizable = false;
    result.cycle = find_directed_cycle(d, order);
    return result;
  }
  result.realizable = true;
  result.labeling.resize(d.node_count);
  for (int pos = 0; pos < d.node_count; ++pos) result.labeling[order[pos] - 1] = pos + 1;
  if (!cover_survives_relabel(c, result.labeling))
    throw std::logic_error("realization failed to reproduce the cover");
  return result;
}

}  // namespace permdual
