#include "permdual/sampling.hpp"

#include <limits>

#include "permdual/bijection.hpp"

namespace permdual {

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) fail(ErrorKind::InvalidArgument, "bound must be positive");
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                        std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

Transposition random_transposition(std::mt19937_64& rng, int n) {
  if (n < 2) fail(ErrorKind::InvalidArgument, "need at least two labels");
  int x = static_cast<int>(rand_below(rng, n)) + 1;
  int y = static_cast<int>(rand_below(rng, n - 1)) + 1;
  if (y >= x) ++y;
  return Transposition(x, y);
}

TranspositionSequence random_sequence(std::mt19937_64& rng, int n, int length) {
  std::vector<Transposition> entries;
  entries.reserve(length);
  for (int i = 0; i < length; ++i) entries.push_back(random_transposition(rng, n));
  return TranspositionSequence(n, std::move(entries));
}

LabeledMultigraph random_graph(std::mt19937_64& rng, int n, int edge_count) {
  std::vector<Edge> edges;
  edges.reserve(edge_count);
  for (int i = 0; i < edge_count; ++i) {
    Transposition t = random_transposition(rng, n);
    edges.emplace_back(t.x(), t.y());
  }
  return LabeledMultigraph(n, std::move(edges));
}

VertexLabeledTree random_tree(std::mt19937_64& rng, int n) {
  if (n <= 2) return tree_from_prufer(n, {});
  std::vector<int> code(n - 2);
  for (int& c : code) c = static_cast<int>(rand_below(rng, n)) + 1;
  return tree_from_prufer(n, code);
}

TranspositionSequence random_down_factorization(std::mt19937_64& rng, int n) {
  return tree_to_down_factorization(random_tree(rng, n));
}

}  // namespace permdual
