#pragma once

// Finite posets on {0, ..., N-1}: covers, maximal chains, ranks.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "smt/error.hpp"
#include "smt/poset.hpp"

namespace smt {

class FinitePoset {
 public:
  FinitePoset() = default;

  /// `leq(i, j)` must be a partial order; reflexivity is forced, antisymmetry checked.
  FinitePoset(std::size_t size, const std::function<bool(std::size_t, std::size_t)>& leq)
      : size_(size), leq_(size * size, 0) {
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) leq_[i * size + j] = (i == j || leq(i, j)) ? 1 : 0;
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = i + 1; j < size; ++j)
        if (le(i, j) && le(j, i)) throw ParameterError("relation is not antisymmetric");
    build_covers();
  }

  /// Poset generated by the given cover pairs (i covered by j), closed transitively.
  static FinitePoset from_covers(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
    std::vector<char> rel(size * size, 0);
    for (std::size_t i = 0; i < size; ++i) rel[i * size + i] = 1;
    for (auto [lo, hi] : covers) {
      if (lo >= size || hi >= size) throw ParameterError("cover index out of range");
      rel[lo * size + hi] = 1;
    }
    for (std::size_t k = 0; k < size; ++k)
      for (std::size_t i = 0; i < size; ++i)
        if (rel[i * size + k])
          for (std::size_t j = 0; j < size; ++j)
            if (rel[k * size + j]) rel[i * size + j] = 1;
    return FinitePoset(size, [&](std::size_t i, std::size_t j) { return rel[i * size + j] != 0; });
  }

  std::size_t size() const noexcept { return size_; }
  bool le(std::size_t i, std::size_t j) const { return leq_[i * size_ + j] != 0; }
  bool lt(std::size_t i, std::size_t j) const { return i != j && le(i, j); }
  bool comparable(std::size_t i, std::size_t j) const { return le(i, j) || le(j, i); }

  /// Elements covering i.
  const std::vector<std::size_t>& up_covers(std::size_t i) const { return up_[i]; }
  std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size_; ++i)
      for (auto j : up_[i]) out.emplace_back(i, j);
    return out;
  }

  std::vector<std::size_t> minimal_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size_; ++i)
      if (down_count_[i] == 0) out.push_back(i);
    return out;
  }

  bool is_maximal(std::size_t i) const { return up_[i].empty(); }

  /// A linear extension: elements ordered so that i < j in the poset implies i comes first.
  std::vector<std::size_t> linear_extension() const {
    std::vector<std::size_t> below(size_, 0), order(size_);
    for (std::size_t i = 0; i < size_; ++i)
      for (std::size_t j = 0; j < size_; ++j)
        if (lt(j, i)) ++below[i];
    for (std::size_t i = 0; i < size_; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return below[a] < below[b]; });
    return order;
  }

 private:
  void build_covers() {
    up_.assign(size_, {});
    down_count_.assign(size_, 0);
    for (std::size_t i = 0; i < size_; ++i)
      for (std::size_t j = 0; j < size_; ++j) {
        if (!lt(i, j)) continue;
        bool cover = true;
        for (std::size_t k = 0; k < size_ && cover; ++k)
          if (lt(i, k) && lt(k, j)) cover = false;
        if (cover) {
          up_[i].push_back(j);
          ++down_count_[j];
        }
      }
  }

  std::size_t size_ = 0;
  std::vector<char> leq_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::size_t> down_count_;
};

/// Summary of all maximal chains, by dynamic programming over covers.
struct ChainProfile {
  std::size_t min_cardinality = 0;
  std::size_t max_cardinality = 0;
  mpz_class count;

  bool ranked() const noexcept { return min_cardinality == max_cardinality; }
  /// Rank = common cardinality - 1 (only meaningful when ranked()).
  std::size_t rank() const noexcept { return max_cardinality - 1; }
};

inline ChainProfile chain_profile(const FinitePoset& P) {
  const std::size_t N = P.size();
  if (N == 0) return {0, 0, 1};
  // Longest/shortest/number of saturated chains from i up to a maximal element.
  std::vector<std::size_t> lo(N), hi(N);
  std::vector<mpz_class> cnt(N);
  auto order = P.linear_extension();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto i = *it;
    if (P.is_maximal(i)) {
      lo[i] = hi[i] = 1;
      cnt[i] = 1;
      continue;
    }
    lo[i] = N + 1;
    hi[i] = 0;
    cnt[i] = 0;
    for (auto j : P.up_covers(i)) {
      lo[i] = std::min(lo[i], lo[j] + 1);
      hi[i] = std::max(hi[i], hi[j] + 1);
      cnt[i] += cnt[j];
    }
  }
  ChainProfile out{N + 1, 0, 0};
  for (auto i : P.minimal_elements()) {
    out.min_cardinality = std::min(out.min_cardinality, lo[i]);
    out.max_cardinality = std::max(out.max_cardinality, hi[i]);
    out.count += cnt[i];
  }
  return out;
}

/// Calls `visit` on every maximal chain, listed bottom to top.
/// Returning false from `visit` stops the walk. Throws ResourceError above `cap` elements.
inline void for_each_maximal_chain(const FinitePoset& P, const std::function<bool(const std::vector<std::size_t>&)>& visit,
                                   std::size_t cap = 200) {
  if (P.size() > cap)
    throw ResourceError("poset has " + std::to_string(P.size()) + " elements, chain enumeration cap is " +
                        std::to_string(cap));
  std::vector<std::size_t> chain;
  bool stop = false;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    chain.push_back(i);
    if (P.is_maximal(i)) {
      if (!visit(chain)) stop = true;
    } else {
      for (auto j : P.up_covers(i)) {
        walk(j);
        if (stop) break;
      }
    }
    chain.pop_back();
  };
  for (auto i : P.minimal_elements()) {
    walk(i);
    if (stop) break;
  }
}

/// Materialized list of maximal chains; prefer for_each_maximal_chain for big posets.
inline std::vector<std::vector<std::size_t>> maximal_chains(const FinitePoset& P, std::size_t cap = 200) {
  std::vector<std::vector<std::size_t>> out;
  for_each_maximal_chain(P, [&](const std::vector<std::size_t>& c) { out.push_back(c); return true; }, cap);
  return out;
}

/// Rank = common cardinality of maximal chains minus one. Throws if the poset is not ranked.
inline std::size_t poset_rank(const FinitePoset& P) {
  auto prof = chain_profile(P);
  if (!prof.ranked())
    throw InvariantError("maximal chains have cardinalities " + std::to_string(prof.min_cardinality) + ".." +
                         std::to_string(prof.max_cardinality));
  return prof.rank();
}

enum class PosetKind { H, D };

inline std::vector<DElement> poset_elements(PosetKind kind, const Shape& s) {
  return kind == PosetKind::H ? h_elements(s) : d_elements(s);
}

inline FinitePoset make_poset(const std::vector<DElement>& elems) {
  return FinitePoset(elems.size(), [&](std::size_t i, std::size_t j) { return leq_H(elems[i], elems[j]); });
}

inline FinitePoset make_poset(PosetKind kind, const Shape& s) { return make_poset(poset_elements(kind, s)); }

}  // namespace smt
