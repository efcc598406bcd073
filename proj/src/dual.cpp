#include "permdual/dual.hpp"

#include <numeric>

#include "permdual/trails.hpp"

namespace permdual {

LabeledMultigraph trail_dual(const LabeledMultigraph& g) {
  TrailDoubleCover cover = greedy_trail_cover(g);
  int m = g.edge_count();
  std::vector<std::pair<int, int>> users(m + 1, {0, 0});
  for (const Trail& t : cover.trails()) {
    for (int label : t.edge_labels) {
      auto& [first, second] = users[label];
      (first == 0 ? first : second) = t.start();
    }
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int k = 1; k <= m; ++k) edges.emplace_back(users[k].first, users[k].second);
  return LabeledMultigraph(g.vertex_count(), std::move(edges));
}

TranspositionSequence algebraic_dual(const TranspositionSequence& s) {
  std::vector<Transposition> entries;
  entries.reserve(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    Transposition t = s[k];
    // Conjugate by s_{k-1} ... s_1, one factor at a time.
    for (std::size_t j = k; j-- > 0;) t = conjugate(t, s[j]);
    entries.push_back(t);
  }
  return TranspositionSequence(s.n(), std::move(entries));
}

LabeledMultigraph label_swap_dual(const LabeledMultigraph& g) {
  int n = g.vertex_count();
  int m = g.edge_count();
  std::vector<int> position_of(n + 1);
  std::iota(position_of.begin(), position_of.end(), 0);
  std::vector<std::pair<int, int>> endpoint_positions(m);
  for (int k = m; k >= 1; --k) {
    const Edge& e = g.edge(k);
    endpoint_positions[k - 1] = {position_of[e.u], position_of[e.v]};
    std::swap(position_of[e.u], position_of[e.v]);
  }
  std::vector<int> label_at(n + 1);
  for (int label = 1; label <= n; ++label) label_at[position_of[label]] = label;
  std::vector<Edge> edges;
  edges.reserve(m);
  for (const auto& [pa, pb] : endpoint_positions)
    edges.emplace_back(label_at[pa], label_at[pb]);
  return LabeledMultigraph(n, std::move(edges));
}

DualEquivalenceReport dual_equivalence_report(const TranspositionSequence& s) {
  LabeledMultigraph g = LabeledMultigraph::from_sequence(s);
  DualEquivalenceReport report{
      mind_body_dual(s),
      trail_dual(g).to_sequence(),
      algebraic_dual(s),
      label_swap_dual(g).to_sequence(),
      false,
      0,
  };
  report.agree = true;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const Transposition& a = report.mind_body[k];
    if (report.trail[k] != a || report.algebraic[k] != a || report.label_swap[k] != a) {
      report.agree = false;
      report.first_divergence = static_cast<int>(k) + 1;
      break;
    }
  }
  return report;
}

}  // namespace permdual
