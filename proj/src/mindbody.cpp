#include "permdual/mindbody.hpp"

#include <numeric>
#include <sstream>

namespace permdual {

MindBodyAssignment MindBodyAssignment::identity(int n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "assignment size must be positive");
  std::vector<int> body_of(n);
  std::iota(body_of.begin(), body_of.end(), 1);
  return MindBodyAssignment(std::move(body_of));
}

MindBodyAssignment MindBodyAssignment::from_permutation(const Permutation& mind_to_body) {
  return MindBodyAssignment(mind_to_body.images());
}

int MindBodyAssignment::body_of(int mind) const {
  if (mind < 1 || mind > n()) fail(ErrorKind::LabelOutOfRange, "mind out of range");
  return body_of_[mind - 1];
}

int MindBodyAssignment::mind_above(int body) const {
  if (body < 1 || body > n()) fail(ErrorKind::LabelOutOfRange, "body out of range");
  for (int m = 1; m <= n(); ++m)
    if (body_of_[m - 1] == body) return m;
  fail(ErrorKind::InvalidArgument, "corrupt assignment");
}

MindBodyAssignment MindBodyAssignment::mind_swap(const Transposition& t) const {
  if (t.max_label() > n()) fail(ErrorKind::DimensionMismatch, "swap exceeds assignment size");
  std::vector<int> body_of = body_of_;
  std::swap(body_of[t.x() - 1], body_of[t.y() - 1]);
  return MindBodyAssignment(std::move(body_of));
}

MindBodyAssignment MindBodyAssignment::body_swap(const Transposition& t) const {
  if (t.max_label() > n()) fail(ErrorKind::DimensionMismatch, "swap exceeds assignment size");
  std::vector<int> body_of = body_of_;
  for (int& b : body_of) b = t.apply(b);
  return MindBodyAssignment(std::move(body_of));
}

MindBodyAssignment MindBodyAssignment::mind_swap(const TranspositionSequence& s) const {
  MindBodyAssignment a = *this;
  for (const auto& t : s) a = a.mind_swap(t);
  return a;
}

MindBodyAssignment MindBodyAssignment::body_swap(const TranspositionSequence& s) const {
  MindBodyAssignment a = *this;
  for (const auto& t : s) a = a.body_swap(t);
  return a;
}

Permutation MindBodyAssignment::as_permutation() const {
  return Permutation::from_images(body_of_);
}

std::string MindBodyAssignment::to_string() const {
  std::ostringstream out;
  out << '[';
  for (int m = 1; m <= n(); ++m) {
    if (m > 1) out << ',';
    out << m;
  }
  out << " / ";
  for (int m = 1; m <= n(); ++m) {
    if (m > 1) out << ',';
    out << body_of_[m - 1];
  }
  out << ']';
  return out.str();
}

std::vector<MindBodyAssignment> mind_body_trace(const TranspositionSequence& s) {
  std::vector<MindBodyAssignment> trace;
  trace.reserve(s.size() + 1);
  trace.push_back(MindBodyAssignment::identity(s.n()));
  for (const auto& t : s) trace.push_back(trace.back().body_swap(t));
  return trace;
}

TranspositionSequence mind_body_dual(const TranspositionSequence& s) {
  std::vector<Transposition> entries;
  entries.reserve(s.size());
  MindBodyAssignment a = MindBodyAssignment::identity(s.n());
  for (const auto& t : s) {
    entries.emplace_back(a.mind_above(t.x()), a.mind_above(t.y()));
    a = a.body_swap(t);
  }
  return TranspositionSequence(s.n(), std::move(entries));
}

}  // namespace permdual
