#include "permdual/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace permdual {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorKind::InvalidCover: return "InvalidCover";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::WrongProduct: return "WrongProduct";
    case ErrorKind::NotDownFactorization: return "NotDownFactorization";
    case ErrorKind::CrossingChords: return "CrossingChords";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ResourceCap: return "ResourceCap";
  }
  return "UnknownError";
}

Permutation::Permutation(int n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "permutation size must be positive");
  image_.resize(n);
  std::iota(image_.begin(), image_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  int n = static_cast<int>(images.size());
  if (n < 1) fail(ErrorKind::InvalidArgument, "permutation size must be positive");
  std::vector<bool> seen(n + 1, false);
  for (int v : images) {
    if (v < 1 || v > n) fail(ErrorKind::LabelOutOfRange, "image out of range");
    if (seen[v]) fail(ErrorKind::InvalidArgument, "images are not a bijection");
    seen[v] = true;
  }
  Permutation p(n);
  p.image_ = std::move(images);
  return p;
}

Permutation Permutation::down_cycle(int n) {
  Permutation p(n);
  for (int k = 2; k <= n; ++k) p.image_[k - 1] = k - 1;
  if (n > 1) p.image_[0] = n;
  return p;
}

Permutation Permutation::up_cycle(int n) { return down_cycle(n).inverse(); }

int Permutation::operator()(int x) const {
  if (x < 1 || x > n()) fail(ErrorKind::LabelOutOfRange, "point out of range");
  return image_[x - 1];
}

int Permutation::preimage(int y) const {
  if (y < 1 || y > n()) fail(ErrorKind::LabelOutOfRange, "point out of range");
  for (int i = 0; i < n(); ++i)
    if (image_[i] == y) return i + 1;
  fail(ErrorKind::InvalidArgument, "corrupt permutation");
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (image_[i] != i + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv(n());
  for (int i = 0; i < n(); ++i) inv.image_[image_[i] - 1] = i + 1;
  return inv;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> result;
  std::vector<bool> seen(n() + 1, false);
  for (int start = 1; start <= n(); ++start) {
    if (seen[start] || image_[start - 1] == start) continue;
    std::vector<int> cycle;
    for (int v = start; !seen[v]; v = image_[v - 1]) {
      seen[v] = true;
      cycle.push_back(v);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& cycle : cs) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out << ',';
      out << cycle[i];
    }
    out << ')';
  }
  return out.str();
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.n() != q.n()) fail(ErrorKind::DimensionMismatch, "permutation sizes differ");
  std::vector<int> images(p.n());
  for (int x = 1; x <= p.n(); ++x) images[x - 1] = q(p(x));
  return Permutation::from_images(std::move(images));
}

Transposition::Transposition(int x, int y) : x_(std::min(x, y)), y_(std::max(x, y)) {
  if (x_ < 1) fail(ErrorKind::LabelOutOfRange, "transposition labels must be positive");
  if (x_ == y_) fail(ErrorKind::InvalidArgument, "transposition endpoints must differ");
}

TranspositionSequence::TranspositionSequence(int n, std::vector<Transposition> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ < 1) fail(ErrorKind::InvalidArgument, "ground-set size must be positive");
  for (const auto& t : entries_)
    if (t.max_label() > n_)
      fail(ErrorKind::LabelOutOfRange, "transposition label exceeds ground set");
}

Permutation TranspositionSequence::product() const {
  std::vector<int> image(n_);
  std::iota(image.begin(), image.end(), 1);
  std::vector<int> inv = image;
  // Appending (x,y) on the right swaps the positions currently mapping to x, y.
  for (const auto& t : entries_) {
    int i = inv[t.x() - 1], j = inv[t.y() - 1];
    std::swap(image[i - 1], image[j - 1]);
    std::swap(inv[t.x() - 1], inv[t.y() - 1]);
  }
  return Permutation::from_images(std::move(image));
}

Permutation product(const TranspositionSequence& s) { return s.product(); }

Permutation conjugate(const Permutation& p, const Permutation& t) {
  if (p.n() != t.n()) fail(ErrorKind::DimensionMismatch, "permutation sizes differ");
  std::vector<int> images(p.n());
  for (int x = 1; x <= p.n(); ++x) images[t(x) - 1] = t(p(x));
  return Permutation::from_images(std::move(images));
}

Transposition conjugate(const Transposition& p, const Permutation& t) {
  if (p.max_label() > t.n())
    fail(ErrorKind::DimensionMismatch, "transposition exceeds permutation size");
  return Transposition(t(p.x()), t(p.y()));
}

Transposition conjugate(const Transposition& p, const Transposition& t) {
  return Transposition(t.apply(p.x()), t.apply(p.y()));
}

TranspositionSequence conjugate_sequence(const TranspositionSequence& s,
                                         const Transposition& t) {
  if (t.max_label() > s.n())
    fail(ErrorKind::DimensionMismatch, "transposition exceeds ground set");
  std::vector<Transposition> entries;
  entries.reserve(s.size());
  for (const auto& e : s) entries.push_back(conjugate(e, t));
  return TranspositionSequence(s.n(), std::move(entries));
}

std::vector<int> contraction(const std::vector<int>& points) {
  if (points.empty()) fail(ErrorKind::EmptyInput, "contraction of an empty sequence");
  std::vector<int> result;
  result.push_back(points.front());
  for (int p : points)
    if (p != result.back()) result.push_back(p);
  return result;
}

std::vector<int> trajectory(const TranspositionSequence& s, int x) {
  if (x < 1 || x > s.n()) fail(ErrorKind::LabelOutOfRange, "point out of range");
  std::vector<int> points;
  points.reserve(s.size() + 1);
  int cur = x;
  points.push_back(cur);
  for (const auto& t : s) {
    cur = t.apply(cur);
    points.push_back(cur);
  }
  return contraction(points);
}

}  // namespace permdual
