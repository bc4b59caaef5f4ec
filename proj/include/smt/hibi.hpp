#pragma once

// Distributive lattices, the binomial algebra A(L), and the degeneration checks for D.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "smt/chains.hpp"
#include "smt/error.hpp"
#include "smt/parallel.hpp"
#include "smt/straighten.hpp"

namespace smt {

/// Finite lattice on {0, ..., N-1} with precomputed join and meet tables.
class FiniteLattice {
 public:
  FiniteLattice() = default;

  /// Throws ParameterError unless every pair has a least upper and a greatest lower bound.
  FiniteLattice(FinitePoset poset, std::vector<std::string> labels) : poset_(std::move(poset)), labels_(std::move(labels)) {
    const std::size_t N = poset_.size();
    if (labels_.size() != N) throw ParameterError("lattice needs one label per element");
    join_.assign(N * N, 0);
    meet_.assign(N * N, 0);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i; j < N; ++j) {
        join_[i * N + j] = join_[j * N + i] = bound(i, j, true);
        meet_[i * N + j] = meet_[j * N + i] = bound(i, j, false);
      }
  }

  /// Chain 0 < 1 < ... < k-1.
  static FiniteLattice chain(std::size_t k) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < k; ++i) labels.push_back(std::to_string(i));
    return FiniteLattice(FinitePoset(k, [](std::size_t i, std::size_t j) { return i <= j; }), labels);
  }

  /// Product order; element (a, b) has index a * |B| + b.
  static FiniteLattice product(const FiniteLattice& A, const FiniteLattice& B) {
    const std::size_t nb = B.size();
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < A.size(); ++a)
      for (std::size_t b = 0; b < nb; ++b) labels.push_back("(" + A.label(a) + "," + B.label(b) + ")");
    FinitePoset P(A.size() * nb, [&](std::size_t x, std::size_t y) { return A.le(x / nb, y / nb) && B.le(x % nb, y % nb); });
    return FiniteLattice(std::move(P), labels);
  }

  /// D for the given shape, labelled by the element text forms; indices follow d_elements().
  static FiniteLattice of_D(const Shape& s) {
    auto elems = d_elements(s);
    std::vector<std::string> labels;
    for (auto& x : elems) labels.push_back(x.to_string());
    return FiniteLattice(make_poset(elems), labels);
  }

  std::size_t size() const noexcept { return poset_.size(); }
  const FinitePoset& poset() const noexcept { return poset_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool le(std::size_t i, std::size_t j) const { return poset_.le(i, j); }
  bool comparable(std::size_t i, std::size_t j) const { return poset_.comparable(i, j); }
  std::size_t join(std::size_t i, std::size_t j) const { return join_[i * size() + j]; }
  std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i * size() + j]; }

  /// Both distributive laws. All triples up to `cap` elements, otherwise `samples`
  /// seeded random triples.
  bool is_distributive(std::size_t cap = 64, std::size_t samples = 20000, std::uint64_t seed = 1) const {
    const std::size_t N = size();
    auto ok = [&](std::size_t x, std::size_t y, std::size_t z) {
      return meet(x, join(y, z)) == join(meet(x, y), meet(x, z)) && join(x, meet(y, z)) == meet(join(x, y), join(x, z));
    };
    if (N <= cap) {
      for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y)
          for (std::size_t z = 0; z < N; ++z)
            if (!ok(x, y, z)) return false;
      return true;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, N - 1);
    for (std::size_t k = 0; k < samples; ++k)
      if (!ok(pick(rng), pick(rng), pick(rng))) return false;
    return true;
  }

 private:
  std::size_t bound(std::size_t i, std::size_t j, bool upper) const {
    const std::size_t N = size();
    std::vector<std::size_t> cand;
    for (std::size_t k = 0; k < N; ++k)
      if (upper ? (le(i, k) && le(j, k)) : (le(k, i) && le(k, j))) cand.push_back(k);
    for (auto c : cand)
      if (std::all_of(cand.begin(), cand.end(), [&](std::size_t o) { return upper ? le(c, o) : le(o, c); })) return c;
    throw ParameterError("not a lattice: " + label(i) + " and " + label(j) + " have no " + (upper ? "join" : "meet"));
  }

  FinitePoset poset_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> join_, meet_;
};

/// xy - (x∧y)(x∨y) for an incomparable pair.
struct LatticeBinomial {
  std::size_t x = 0, y = 0;
  std::size_t meet = 0, join = 0;
};

inline std::vector<LatticeBinomial> binomial_generators(const FiniteLattice& L) {
  if (!L.is_distributive()) throw ParameterError("lattice is not distributive");
  std::vector<LatticeBinomial> out;
  for (std::size_t i = 0; i < L.size(); ++i)
    for (std::size_t j = i + 1; j < L.size(); ++j)
      if (!L.comparable(i, j)) out.push_back({i, j, L.meet(i, j), L.join(i, j)});
  return out;
}

/// Rewrites incomparable pairs to (meet, join) until the factors form a multichain.
/// Result is listed from the top down.
inline std::vector<std::size_t> normal_form(const FiniteLattice& L, std::vector<std::size_t> factors,
                                            PairStrategy strategy = PairStrategy::First, std::uint64_t seed = 0,
                                            std::size_t max_steps = 1'000'000) {
  for (auto x : factors)
    if (x >= L.size()) throw ParameterError("factor index out of range");
  std::mt19937_64 rng(seed);
  for (std::size_t step = 0;; ++step) {
    std::vector<std::pair<std::size_t, std::size_t>> bad;
    for (std::size_t i = 0; i < factors.size(); ++i)
      for (std::size_t j = i + 1; j < factors.size(); ++j)
        if (!L.comparable(factors[i], factors[j])) bad.emplace_back(i, j);
    if (bad.empty()) break;
    if (step >= max_steps) throw TerminationFailure("lattice rewriting exceeded its step guard");
    std::pair<std::size_t, std::size_t> p;
    switch (strategy) {
      case PairStrategy::First: p = bad.front(); break;
      case PairStrategy::Last: p = bad.back(); break;
      case PairStrategy::Random: p = bad[std::uniform_int_distribution<std::size_t>(0, bad.size() - 1)(rng)]; break;
    }
    const auto x = factors[p.first], y = factors[p.second];
    factors[p.first] = L.meet(x, y);
    factors[p.second] = L.join(x, y);
  }
  // A multichain has a unique top-down order; ties are equal elements.
  std::sort(factors.begin(), factors.end(), [&](std::size_t a, std::size_t b) { return a != b && L.le(b, a); });
  return factors;
}

/// Dimension of the degree-k part of A(L): the number of k-element multichains.
inline Integer hilbert_A(const FiniteLattice& L, int k) {
  if (k < 0) throw ParameterError("degree must be non-negative");
  const std::size_t N = L.size();
  if (k == 0) return 1;
  // ending[x] = multichains of the current length whose top element is x.
  std::vector<Integer> ending(N, 1);
  for (int len = 2; len <= k; ++len) {
    std::vector<Integer> next(N, 0);
    for (std::size_t x = 0; x < N; ++x)
      for (std::size_t y = 0; y < N; ++y)
        if (L.le(y, x)) next[x] += ending[y];
    ending = std::move(next);
  }
  Integer total = 0;
  for (auto& v : ending) total += v;
  return total;
}

/// Outcome of checking the three conditions on every straightening relation of D.
struct DegenerationReport {
  Shape shape;
  std::size_t pairs = 0;
  std::size_t coefficient_failures = 0;  // join*meet coefficient is not exactly 1
  std::size_t interval_failures = 0;     // some rhs α*β does not bracket the pair
  std::size_t content_failures = 0;      // some rhs term changes the content
  std::size_t other_failures = 0;        // inexact relation or malformed term
  std::vector<std::string> problems;

  bool pass() const noexcept {
    return coefficient_failures == 0 && interval_failures == 0 && content_failures == 0 && other_failures == 0;
  }
};

inline void record(DegenerationReport& rep, const RelationCheck& c) {
  ++rep.pairs;
  rep.coefficient_failures += !c.join_meet_unit;
  rep.interval_failures += !c.interval;
  rep.content_failures += !c.content;
  rep.other_failures += (!c.exact || !c.two_factors);
  rep.problems.insert(rep.problems.end(), c.problems.begin(), c.problems.end());
}

/// Checks a given list of relations (e.g. a corrupted one in a negative test).
inline DegenerationReport check_degeneration_hypotheses(const std::vector<Relation>& relations, const Evaluator& ev) {
  DegenerationReport rep;
  rep.shape = ev.shape();
  for (auto& r : relations) record(rep, verify_relation_structure(r, ev));
  return rep;
}

/// Every incomparable pair of D, in element order.
inline std::vector<std::pair<DElement, DElement>> incomparable_pairs(const Shape& s) {
  auto E = d_elements(s);
  std::vector<std::pair<DElement, DElement>> out;
  for (std::size_t i = 0; i < E.size(); ++i)
    for (std::size_t j = i + 1; j < E.size(); ++j)
      if (!comparable(E[i], E[j])) out.emplace_back(E[i], E[j]);
  return out;
}

/// Computes every relation of D afresh and checks it; never throws on a failed check.
inline DegenerationReport check_degeneration_hypotheses(const Shape& s) {
  Evaluator ev(s);
  auto pairs = incomparable_pairs(s);
  std::vector<RelationCheck> checks(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t k) {
    try {
      checks[k] = verify_relation_structure(compute_relation(pairs[k].first, pairs[k].second, ev), ev);
    } catch (const InvariantError& e) {
      checks[k].exact = false;
      checks[k].problems.push_back(pairs[k].first.to_string() + "*" + pairs[k].second.to_string() + ": " + e.what());
    }
  });
  DegenerationReport rep;
  rep.shape = s;
  for (auto& c : checks) record(rep, c);
  return rep;
}

/// Maximal chain cardinalities of H and D against (m+q)n - n^2 + 1 and + 3.
struct RankDimensionReport {
  Shape shape;
  ChainProfile h;
  ChainProfile d;
  std::size_t expected_h = 0;
  std::size_t expected_d = 0;
  std::size_t enumerated_h = 0;  // chains actually walked
  std::size_t enumerated_d = 0;
  bool walked_h_ranked = true;
  bool walked_d_ranked = true;

  bool pass() const noexcept {
    return h.ranked() && d.ranked() && walked_h_ranked && walked_d_ranked && h.max_cardinality == expected_h &&
           d.max_cardinality == expected_d && h.count == enumerated_h && d.count == enumerated_d;
  }
};

inline RankDimensionReport rank_dimension_report(const Shape& s, std::size_t cap = 200) {
  RankDimensionReport rep;
  rep.shape = s;
  rep.expected_h = static_cast<std::size_t>(s.h_rank()) + 1;
  rep.expected_d = static_cast<std::size_t>(s.h_rank()) + 3;
  auto walk = [&](PosetKind kind, ChainProfile& prof, std::size_t& count, bool& ranked, std::size_t expect) {
    auto P = make_poset(kind, s);
    prof = chain_profile(P);
    for_each_maximal_chain(
        P,
        [&](const std::vector<std::size_t>& c) {
          ++count;
          if (c.size() != expect) ranked = false;
          return true;
        },
        cap);
  };
  walk(PosetKind::H, rep.h, rep.enumerated_h, rep.walked_h_ranked, rep.expected_h);
  walk(PosetKind::D, rep.d, rep.enumerated_d, rep.walked_d_ranked, rep.expected_d);
  return rep;
}

}  // namespace smt
