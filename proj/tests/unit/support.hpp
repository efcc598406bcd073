#pragma once

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "permdual/perm.hpp"
#include "permdual/sampling.hpp"
#include "permdual/text.hpp"

namespace testsupport {

inline std::string read_fixture(const std::string& name) {
  std::string path = std::string(PERMDUAL_FIXTURE_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing fixture " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline permdual::TranspositionSequence fixture_sequence(const std::string& name) {
  return permdual::parse_sequence(read_fixture(name));
}

inline permdual::Permutation random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(permdual::rand_below(rng, i + 1));
    std::swap(images[i], images[j]);
  }
  return permdual::Permutation::from_images(std::move(images));
}

// Independent oracle: every length-(n-1) tuple of transpositions, filtered
// by product. No pruning, no sharing with the library's generators.
inline std::vector<permdual::TranspositionSequence> brute_force_down(int n) {
  using permdual::Transposition;
  using permdual::TranspositionSequence;
  std::vector<Transposition> all;
  for (int x = 1; x < n; ++x)
    for (int y = x + 1; y <= n; ++y) all.emplace_back(x, y);
  permdual::Permutation target = permdual::Permutation::down_cycle(n);
  std::vector<TranspositionSequence> result;
  if (n == 1) {
    result.emplace_back(1);
    return result;
  }
  std::vector<std::size_t> pick(n - 1, 0);
  for (;;) {
    std::vector<Transposition> entries;
    for (std::size_t index : pick) entries.push_back(all[index]);
    TranspositionSequence s(n, std::move(entries));
    if (s.product() == target) result.push_back(s);
    int pos = n - 2;
    while (pos >= 0 && pick[pos] + 1 == all.size()) pick[pos--] = 0;
    if (pos < 0) break;
    ++pick[pos];
  }
  return result;
}

// Independent oracle: all (n-1)-subsets of possible edges that connect [n].
inline std::vector<std::vector<std::pair<int, int>>> brute_force_trees(int n) {
  std::vector<std::pair<int, int>> all;
  for (int x = 1; x < n; ++x)
    for (int y = x + 1; y <= n; ++y) all.emplace_back(x, y);
  std::vector<std::vector<std::pair<int, int>>> result;
  if (n == 1) {
    result.push_back({});
    return result;
  }
  std::vector<int> reach(n + 1);
  std::vector<std::size_t> pick;
  auto connected = [&](const std::vector<std::pair<int, int>>& edges) {
    std::fill(reach.begin(), reach.end(), 0);
    std::vector<int> stack{1};
    reach[1] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [a, b] : edges) {
        int w = a == v ? b : b == v ? a : 0;
        if (w && !reach[w]) {
          reach[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n;
  };
  std::vector<std::pair<int, int>> chosen;
  auto recurse = [&](auto&& self, std::size_t from) -> void {
    if (chosen.size() == static_cast<std::size_t>(n - 1)) {
      if (connected(chosen)) result.push_back(chosen);
      return;
    }
    for (std::size_t i = from; i < all.size(); ++i) {
      chosen.push_back(all[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0);
  return result;
}

inline std::vector<std::string> formatted_sorted(
    const std::vector<permdual::TranspositionSequence>& seqs) {
  std::vector<std::string> out;
  out.reserve(seqs.size());
  for (const auto& s : seqs) out.push_back(permdual::format_sequence(s));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace testsupport
