#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "smt/error.hpp"

namespace smt {

/// Strictly increasing tuple of positive indices, an element of I(r, bound).
/// The empty tuple stands for the empty row/column set.
class IndexTuple {
 public:
  IndexTuple() = default;
  IndexTuple(std::initializer_list<int> entries) : IndexTuple(std::vector<int>(entries)) {}
  explicit IndexTuple(std::vector<int> entries) : entries_(std::move(entries)) {
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if (entries_[k] < 1) throw ParameterError("index tuple entries must be positive: " + to_string());
      if (k > 0 && entries_[k] <= entries_[k - 1])
        throw ParameterError("index tuple must be strictly increasing: " + to_string());
    }
  }

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  int operator[](std::size_t k) const { return entries_[k]; }
  int back() const { return entries_.back(); }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  const std::vector<int>& entries() const noexcept { return entries_; }
  std::span<const int> span() const noexcept { return entries_; }

  /// Throws unless every entry is <= bound.
  void check_bound(int bound) const {
    if (!entries_.empty() && entries_.back() > bound)
      throw ParameterError("index tuple (" + to_string() + ") exceeds bound " + std::to_string(bound));
  }

  /// "1,2,3" (empty string for the empty tuple).
  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(entries_[k]);
    }
    return out;
  }

  friend bool operator==(const IndexTuple&, const IndexTuple&) = default;
  friend auto operator<=>(const IndexTuple& a, const IndexTuple& b) { return a.entries_ <=> b.entries_; }

 private:
  std::vector<int> entries_;
};

/// All C(n, r) strictly increasing r-tuples over [1, n], lexicographic.
inline std::vector<IndexTuple> enumerate_tuples(int r, int n) {
  if (r < 0 || n < 0 || r > n)
    throw ParameterError("enumerate_tuples needs 0 <= r <= n, got r=" + std::to_string(r) +
                         " n=" + std::to_string(n));
  std::vector<IndexTuple> out;
  std::vector<int> cur(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) cur[static_cast<std::size_t>(k)] = k + 1;
  while (true) {
    out.emplace_back(cur);
    int k = r - 1;
    while (k >= 0 && cur[static_cast<std::size_t>(k)] == n - r + k + 1) --k;
    if (k < 0) break;
    ++cur[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < r; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j) - 1] + 1;
  }
  return out;
}

/// Componentwise (Bruhat) order on I(d, n): same length, a_t <= b_t for all t.
inline bool grassmann_leq(const IndexTuple& a, const IndexTuple& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t t = 0; t < a.size(); ++t)
    if (a[t] > b[t]) return false;
  return true;
}

/// Order on tuples of mixed length used by the determinantal poset:
/// a <= b iff #b <= #a and b_j >= a_j on the first #b entries.
/// Shorter tuples sit higher; the empty tuple is the largest.
inline bool leq_tuple(const IndexTuple& a, const IndexTuple& b) {
  if (b.size() > a.size()) return false;
  for (std::size_t j = 0; j < b.size(); ++j)
    if (b[j] < a[j]) return false;
  return true;
}

/// Minor index (A, B) with #A == #B; (∅, ∅) is the constant minor.
struct MinorIndex {
  IndexTuple rows;
  IndexTuple cols;

  friend bool operator==(const MinorIndex&, const MinorIndex&) = default;
  friend auto operator<=>(const MinorIndex&, const MinorIndex&) = default;
};

/// (A, B) ⪰ (A', B'): s <= s', a_j >= a'_j and b_j >= b'_j for j <= s.
inline bool minor_geq(const MinorIndex& x, const MinorIndex& y) {
  return leq_tuple(y.rows, x.rows) && leq_tuple(y.cols, x.cols);
}

namespace detail {
inline std::vector<int> complement_in(std::span<const int> used, int d) {
  std::vector<int> out;
  for (int v = 1; v <= d; ++v)
    if (std::find(used.begin(), used.end(), v) == used.end()) out.push_back(v);
  return out;
}

inline void check_grassmann_index(const IndexTuple& i, int d, int n) {
  if (d < 0 || d > n) throw ParameterError("need 0 <= d <= n");
  if (static_cast<int>(i.size()) != d)
    throw ParameterError("tuple (" + i.to_string() + ") is not in I(" + std::to_string(d) + "," + std::to_string(n) + ")");
  i.check_bound(n);
}
}  // namespace detail

/// Order-reversing bijection from I(d, n) onto the minors of an (n-d) x d matrix.
/// Rows are read off by reflection n+1-i, columns as a complement in [1, d].
inline MinorIndex theta(const IndexTuple& i, int d, int n) {
  detail::check_grassmann_index(i, d, n);
  std::size_t small = 0;
  while (small < i.size() && i[small] <= d) ++small;
  std::vector<int> rows;
  for (std::size_t k = i.size(); k > small; --k) rows.push_back(n + 1 - i[k - 1]);
  auto cols = detail::complement_in(i.span().first(small), d);
  return {IndexTuple(std::move(rows)), IndexTuple(std::move(cols))};
}

/// The minor of A that the Plücker coordinate p_j restricts to on the opposite
/// big cell {(I_d; A)}: rows shifted down by d, columns the complement in [1, d].
inline MinorIndex f_minor(const IndexTuple& j, int d, int n) {
  detail::check_grassmann_index(j, d, n);
  std::size_t small = 0;
  while (small < j.size() && j[small] <= d) ++small;
  std::vector<int> rows;
  for (std::size_t k = small; k < j.size(); ++k) rows.push_back(j[k] - d);
  auto cols = detail::complement_in(j.span().first(small), d);
  return {IndexTuple(std::move(rows)), IndexTuple(std::move(cols))};
}

}  // namespace smt
