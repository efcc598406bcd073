#pragma once

#include <cstdint>
#include <random>

#include "permdual/graph.hpp"
#include "permdual/perm.hpp"
#include "permdual/tree.hpp"

namespace permdual {

// Engine-only draw so results do not depend on the standard library's
// distribution implementations.
std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound);

Transposition random_transposition(std::mt19937_64& rng, int n);
TranspositionSequence random_sequence(std::mt19937_64& rng, int n, int length);
LabeledMultigraph random_graph(std::mt19937_64& rng, int n, int edge_count);
VertexLabeledTree random_tree(std::mt19937_64& rng, int n);

// Uniform over factorizations of (n, ..., 1): uniform Prufer code, then the
// tree pulled back through the bijection.
TranspositionSequence random_down_factorization(std::mt19937_64& rng, int n);

}  // namespace permdual
