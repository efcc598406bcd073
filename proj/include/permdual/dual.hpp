#pragma once

#include "permdual/graph.hpp"
#include "permdual/mindbody.hpp"
#include "permdual/perm.hpp"

namespace permdual {

// Edge k of the dual joins x and y when the greedy trails from x and from y
// both use edge k.
LabeledMultigraph trail_dual(const LabeledMultigraph& g);

// <s1, s2^{s1}, s3^{s2 s1}, ..., sm^{s(m-1) ... s1}>.
TranspositionSequence algebraic_dual(const TranspositionSequence& s);

// Processes edges from label m down to 1; emits each edge between the
// vertices currently labeled by its endpoints, then swaps those two labels.
// The relabeling is carried as a map and materialized at the end.
LabeledMultigraph label_swap_dual(const LabeledMultigraph& g);

// All four dual constructions side by side. Any divergence is a bug; this
// is the regression surface for future changes to any one of them.
struct DualEquivalenceReport {
  TranspositionSequence mind_body;
  TranspositionSequence trail;
  TranspositionSequence algebraic;
  TranspositionSequence label_swap;
  bool agree = false;
  int first_divergence = 0;  // 1-based entry; 0 when they agree
};

DualEquivalenceReport dual_equivalence_report(const TranspositionSequence& s);

}  // namespace permdual
