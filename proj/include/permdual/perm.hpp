#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "permdual/errors.hpp"

namespace permdual {

// Permutation of [n] = {1, ..., n}. All labels are 1-based at the interface.
// Products are taken left to right throughout: (p * q)(x) = q(p(x)), i.e. the
// leftmost factor acts first.
class Permutation {
 public:
  explicit Permutation(int n);  // identity
  static Permutation identity(int n) { return Permutation(n); }
  static Permutation from_images(std::vector<int> images);

  // (n, ..., 2, 1): maps k to k-1, and 1 to n.
  static Permutation down_cycle(int n);
  // (1, 2, ..., n): maps k to k+1, and n to 1.
  static Permutation up_cycle(int n);

  int n() const { return static_cast<int>(image_.size()); }
  int operator()(int x) const;
  int preimage(int y) const;
  bool is_identity() const;
  Permutation inverse() const;

  // Nontrivial cycles, each starting at its minimum, sorted by that minimum.
  std::vector<std::vector<int>> cycles() const;
  std::string cycle_string() const;

  bool operator==(const Permutation&) const = default;

  const std::vector<int>& images() const { return image_; }

 private:
  std::vector<int> image_;  // image_[i] = image of i+1
};

Permutation operator*(const Permutation& p, const Permutation& q);

// Unordered pair of distinct labels, stored with x < y.
class Transposition {
 public:
  Transposition(int x, int y);

  int x() const { return x_; }
  int y() const { return y_; }
  int apply(int v) const { return v == x_ ? y_ : v == y_ ? x_ : v; }
  bool moves(int v) const { return v == x_ || v == y_; }
  int max_label() const { return y_; }

  bool operator==(const Transposition&) const = default;
  auto operator<=>(const Transposition&) const = default;

 private:
  int x_, y_;
};

class TranspositionSequence {
 public:
  explicit TranspositionSequence(int n, std::vector<Transposition> entries = {});

  int n() const { return n_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Transposition& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Transposition>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  Permutation product() const;

  bool operator==(const TranspositionSequence&) const = default;

 private:
  int n_;
  std::vector<Transposition> entries_;
};

Permutation product(const TranspositionSequence& s);

// Conjugation p^t = t^{-1} p t (left-to-right multiplication).
Permutation conjugate(const Permutation& p, const Permutation& t);
Transposition conjugate(const Transposition& p, const Permutation& t);
// For transpositions t = (x,y) this is just p with x and y exchanged.
Transposition conjugate(const Transposition& p, const Transposition& t);
TranspositionSequence conjugate_sequence(const TranspositionSequence& s,
                                         const Transposition& t);

// Collapses each maximal run of equal consecutive entries to a single entry.
std::vector<int> contraction(const std::vector<int>& points);

// Images of x under the products of successive prefixes of s, contracted.
std::vector<int> trajectory(const TranspositionSequence& s, int x);

}  // namespace permdual

template <>
struct std::hash<permdual::Transposition> {
  std::size_t operator()(const permdual::Transposition& t) const noexcept {
    return std::hash<long long>()((static_cast<long long>(t.x()) << 32) ^ t.y());
  }
};
