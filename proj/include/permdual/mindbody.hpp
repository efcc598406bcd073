#pragma once

#include <string>
#include <vector>

#include "permdual/perm.hpp"

namespace permdual {

// Which body currently holds which mind. Equality is order-free: two
// assignments are equal iff they define the same mind -> body map.
class MindBodyAssignment {
 public:
  static MindBodyAssignment identity(int n);
  static MindBodyAssignment from_permutation(const Permutation& mind_to_body);

  int n() const { return static_cast<int>(body_of_.size()); }
  int body_of(int mind) const;
  int mind_above(int body) const;

  // Minds x and y exchange bodies; equals left multiplication by (x,y).
  MindBodyAssignment mind_swap(const Transposition& t) const;
  // Bodies x and y exchange minds; equals right multiplication by (x,y).
  MindBodyAssignment body_swap(const Transposition& t) const;
  MindBodyAssignment mind_swap(const TranspositionSequence& s) const;
  MindBodyAssignment body_swap(const TranspositionSequence& s) const;

  Permutation as_permutation() const;  // mind -> body

  // "[1,2,3,4 / 3,2,4,1]": minds sorted ascending over their bodies.
  std::string to_string() const;

  bool operator==(const MindBodyAssignment&) const = default;

 private:
  explicit MindBodyAssignment(std::vector<int> body_of)
      : body_of_(std::move(body_of)) {}

  std::vector<int> body_of_;  // body_of_[m-1] = body holding mind m
};

// The assignments reached from the identity by applying s as body swaps,
// one prefix at a time; element k is the state after the first k swaps.
std::vector<MindBodyAssignment> mind_body_trace(const TranspositionSequence& s);

// Entry k names the minds that swap at step k when s names the bodies.
TranspositionSequence mind_body_dual(const TranspositionSequence& s);

}  // namespace permdual
