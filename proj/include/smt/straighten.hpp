#pragma once

// Straightening relations for non-standard pairs and the rewrite to standard form.

#include <cstdint>
#include <map>
#include <mutex>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "smt/error.hpp"
#include "smt/generators.hpp"
#include "smt/linalg.hpp"

namespace smt {

struct Term {
  Rational coeff;
  GenMonomial monomial;

  friend bool operator==(const Term&, const Term&) = default;
};

using Expansion = std::vector<Term>;

/// Adds like terms, drops zeros, sorts by the monomial order (descending).
inline Expansion canonical_expansion(const Expansion& terms) {
  std::map<GenMonomial, Rational, std::greater<>> acc;
  for (auto& t : terms) acc[t.monomial] += t.coeff;
  Expansion out;
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) out.push_back({c, m});
  return out;
}

/// "1 p[2|2]*p[1|1]\n-1 TOP*p[1,2|1,2]\n"
inline std::string to_string(const Expansion& e) {
  std::string out;
  for (auto& t : e) out += to_short_string(t.coeff) + " " + t.monomial.to_string() + "\n";
  return out;
}

inline SparsePoly evaluate(const Expansion& e, const Evaluator& ev) {
  SparsePoly out(ev.shape());
  for (auto& t : e) out += t.coeff * ev(t.monomial);
  return out;
}

/// The six shapes of degree-2 relations, by the kinds of the two factors:
/// 1 u.ξ, 2 u.u, 3 ξ.ξ, 4 p.p, 5 p.u, 6 p.ξ.
inline int relation_family(const DElement& x, const DElement& y) {
  auto has = [&](Kind k) { return x.kind == k || y.kind == k; };
  auto both = [&](Kind k) { return x.kind == k && y.kind == k; };
  if (has(Kind::U) && has(Kind::Xi)) return 1;
  if (both(Kind::U)) return 2;
  if (both(Kind::Xi)) return 3;
  if (both(Kind::P)) return 4;
  if (has(Kind::P) && has(Kind::U)) return 5;
  if (has(Kind::P) && has(Kind::Xi)) return 6;
  throw ParameterError("no relation family for " + x.to_string() + "*" + y.to_string());
}

/// x*y = Σ coeff * (α*β) for an incomparable pair x, y of H. The rhs is kept in
/// R(D) form, every term a product of two factors.
struct Relation {
  DElement x;
  DElement y;
  int family = 0;
  Expansion rhs;

  GenMonomial lhs(const Shape& s) const { return GenMonomial(s, Mode::RD, {x, y}); }

  /// The same relation read in S, where TOP and BOT are 1.
  Expansion rhs_in(Mode mode) const {
    if (mode == Mode::RD) return rhs;
    Expansion out;
    for (auto& t : rhs) out.push_back({t.coeff, t.monomial.strip()});
    return canonical_expansion(out);
  }

  std::string to_string(Mode mode = Mode::RD) const {
    std::string out = x.to_string() + "*" + y.to_string() + " =";
    for (auto& t : rhs_in(mode)) {
      out += sgn(t.coeff) < 0 ? " - " : " + ";
      out += to_short_string(abs(t.coeff)) + " " + t.monomial.to_string();
    }
    return out;
  }
};

/// Outcome of the structural checks on one relation.
struct RelationCheck {
  bool exact = true;           // both sides agree as polynomials
  bool join_meet_unit = true;  // join*meet appears with coefficient exactly 1
  bool interval = true;        // every rhs α*β has β < x, y < α
  bool content = true;         // every rhs term has the content of x*y
  bool two_factors = true;     // rhs terms are products of two elements of D
  std::vector<std::string> problems;

  bool ok() const noexcept { return exact && join_meet_unit && interval && content && two_factors; }
};

inline RelationCheck verify_relation_structure(const Relation& rel, const Evaluator& ev) {
  const Shape& s = ev.shape();
  RelationCheck out;
  auto note = [&](bool& flag, std::string why) {
    flag = false;
    out.problems.push_back(rel.x.to_string() + "*" + rel.y.to_string() + ": " + std::move(why));
  };

  if (!(ev(rel.x) * ev(rel.y) == evaluate(rel.rhs, ev))) note(out.exact, "sides differ as polynomials");

  const GenMonomial jm(s, Mode::RD, {join_D(rel.x, rel.y, s), meet_D(rel.x, rel.y, s)});
  const Term* jm_term = nullptr;
  for (auto& t : rel.rhs)
    if (t.monomial == jm) jm_term = &t;
  if (!jm_term)
    note(out.join_meet_unit, "join*meet term " + jm.to_string() + " missing");
  else if (jm_term->coeff != 1)
    note(out.join_meet_unit, "join*meet coefficient is " + to_short_string(jm_term->coeff));

  const Content lhs_content = content(rel.x, s) + content(rel.y, s);
  for (auto& t : rel.rhs) {
    if (t.monomial.degree() != 2 || t.monomial.mode() != Mode::RD) {
      note(out.two_factors, "term " + t.monomial.to_string() + " is not a product of two elements of D");
      continue;
    }
    const DElement& alpha = t.monomial[0];
    const DElement& beta = t.monomial[1];
    if (!(less_H(beta, rel.x) && less_H(beta, rel.y) && less_H(rel.x, alpha) && less_H(rel.y, alpha)))
      note(out.interval, "term " + t.monomial.to_string() + " does not bracket the pair");
    if (t.monomial.content() != lhs_content)
      note(out.content, "term " + t.monomial.to_string() + " has content " + t.monomial.content().to_string() +
                            ", expected " + lhs_content.to_string());
  }
  return out;
}

/// Solves x*y in the standard basis of its content class and homogenizes into R(D).
/// No structural checks; see Straightener for the checked, memoized entry point.
inline Relation compute_relation(const DElement& x_in, const DElement& y_in, const Evaluator& ev) {
  const Shape& s = ev.shape();
  x_in.validate(s);
  y_in.validate(s);
  if (!x_in.in_h() || !y_in.in_h() || comparable(x_in, y_in))
    throw ParameterError("straighten_pair needs an incomparable pair of H: " + x_in.to_string() + ", " + y_in.to_string());
  Relation rel;
  {
    GenMonomial lhs(s, Mode::S, {x_in, y_in});
    rel.x = lhs[0];
    rel.y = lhs[1];
  }
  rel.family = relation_family(rel.x, rel.y);

  const auto candidates = standard_with_content(s, content(rel.x, s) + content(rel.y, s));
  std::map<Exponents, std::size_t> row_of;
  auto sparse = [&](const SparsePoly& f) {
    std::vector<std::pair<std::size_t, Rational>> col;
    for (auto& [e, c] : f.terms()) {
      auto [it, fresh] = row_of.try_emplace(e, row_of.size());
      col.emplace_back(it->second, c);
    }
    return col;
  };
  std::vector<std::vector<std::pair<std::size_t, Rational>>> cols;
  cols.reserve(candidates.size());
  for (auto& M : candidates) cols.push_back(sparse(ev(M)));
  auto rhs = sparse(ev(rel.x) * ev(rel.y));
  auto sol = solve_columns(cols, rhs, row_of.size());
  const std::string tag = rel.x.to_string() + "*" + rel.y.to_string();
  if (!sol) throw BasisFailure("no expansion of " + tag + " in the standard monomials of its content");
  if (!sol->unique) throw BasisFailure("standard monomials of the content of " + tag + " are dependent");

  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (sgn(sol->x[k]) == 0) continue;
    const auto& f = candidates[k].factors();
    std::vector<DElement> rd;
    if (f.size() == 2) {
      rd = f;
    } else if (f.size() == 1 && rel.family == 1) {
      rd = {f[0], DElement::bottom()};
    } else if (f.size() == 1 && rel.family == 4) {
      rd = {DElement::top(), f[0]};
    } else {
      throw InvariantError("relation for " + tag + " has term " + candidates[k].to_string() + " that cannot be written in R(D)");
    }
    rel.rhs.push_back({sol->x[k], GenMonomial(s, Mode::RD, std::move(rd))});
  }
  rel.rhs = canonical_expansion(rel.rhs);
  return rel;
}

/// Checked and memoized straightening relations for one shape.
/// Safe to share between threads; lookups after the cache is warm take a short lock.
class Straightener {
 public:
  explicit Straightener(const Shape& s) : ev_(s) {}

  const Shape& shape() const noexcept { return ev_.shape(); }
  const Evaluator& evaluator() const noexcept { return ev_; }

  /// Relation for an incomparable pair, re-checked before it is cached.
  /// Throws InvariantError if a structural guarantee fails.
  const Relation& relation(const DElement& x, const DElement& y) const {
    auto key = ordered_key(x, y);
    {
      std::lock_guard lock(mu_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    Relation rel = compute_relation(x, y, ev_);
    auto check = verify_relation_structure(rel, ev_);
    if (!check.ok()) throw InvariantError("straightening relation fails its checks: " + check.problems.front());
    std::lock_guard lock(mu_);
    return cache_.try_emplace(key, std::move(rel)).first->second;
  }

  /// x*y expanded in the standard monomials of the requested mode.
  Expansion straighten_pair(const DElement& x, const DElement& y, Mode mode = Mode::RD) const {
    return relation(x, y).rhs_in(mode);
  }

  std::size_t cached() const {
    std::lock_guard lock(mu_);
    return cache_.size();
  }

 private:
  static std::pair<DElement, DElement> ordered_key(const DElement& x, const DElement& y) {
    return x < y ? std::pair{x, y} : std::pair{y, x};
  }

  Evaluator ev_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<DElement, DElement>, Relation> cache_;
};

/// Base-N integer read off the factors' lattice coordinates, from the top factor down.
/// Digits are the coordinates shifted so that the smallest possible value is 0.
struct Weight {
  Integer value;
  int base = 0;
  std::vector<int> digits;
};

inline int default_weight_base(const Shape& s) { return s.max_mq() + 1; }

inline Weight weight(const GenMonomial& M, int base) {
  const Shape& s = M.shape();
  if (base <= s.max_mq())
    throw ParameterError("weight base must exceed max(m,q) = " + std::to_string(s.max_mq()));
  Weight w;
  w.base = base;
  w.value = 0;
  const int f = lattice_floor(s);
  w.digits.reserve(M.key().size());
  for (int c : M.key()) {
    w.digits.push_back(c - f);
    w.value = w.value * base + (c - f);
  }
  return w;
}

inline Weight weight(const GenMonomial& M) { return weight(M, default_weight_base(M.shape())); }

enum class PairStrategy { First, Last, Random };

inline std::string to_string(PairStrategy p) {
  switch (p) {
    case PairStrategy::First: return "first";
    case PairStrategy::Last: return "last";
    case PairStrategy::Random: return "random";
  }
  return "?";
}

struct StraightenOptions {
  PairStrategy strategy = PairStrategy::First;
  std::uint64_t seed = 0;
  std::size_t max_steps = 1'000'000;
};

/// Counters from one straighten() run.
struct StraightenStats {
  std::size_t steps = 0;
};

/// Rewrites M into standard monomials of its own mode. Each step replaces one
/// incomparable pair by its relation; the weight of every new monomial must be
/// strictly larger than that of the monomial it came from.
inline Expansion straighten(const GenMonomial& M, const Straightener& st, const StraightenOptions& opt = {},
                            StraightenStats* stats = nullptr) {
  const Shape& s = st.shape();
  if (!(M.shape() == s)) throw ParameterError("monomial shape differs from straightener shape");
  std::mt19937_64 rng(opt.seed);
  const int base = default_weight_base(s);

  // Work list ordered by weight; in R(D) the weight determines the monomial.
  std::map<Integer, Term> work;
  auto push = [&](const GenMonomial& mono, const Rational& c) {
    auto w = weight(mono, base).value;
    auto [it, fresh] = work.try_emplace(w, Term{c, mono});
    if (!fresh) {
      if (!(it->second.monomial == mono)) throw InvariantError("two monomials share weight " + w.get_str());
      it->second.coeff += c;
      if (sgn(it->second.coeff) == 0) work.erase(it);
    }
  };
  push(GenMonomial(s, Mode::RD, M.factors()), 1);

  Expansion done;
  std::size_t steps = 0;
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Integer w = node.key();
    const Term t = std::move(node.mapped());
    auto bad = violating_pairs(t.monomial);
    if (bad.empty()) {
      done.push_back(t);
      continue;
    }
    if (++steps > opt.max_steps)
      throw TerminationFailure("straightening exceeded " + std::to_string(opt.max_steps) + " steps");
    std::pair<std::size_t, std::size_t> pick;
    switch (opt.strategy) {
      case PairStrategy::First: pick = bad.front(); break;
      case PairStrategy::Last: pick = bad.back(); break;
      case PairStrategy::Random: pick = bad[std::uniform_int_distribution<std::size_t>(0, bad.size() - 1)(rng)]; break;
    }
    const auto& rel = st.relation(t.monomial[pick.first], t.monomial[pick.second]);
    for (auto& r : rel.rhs) {
      GenMonomial next = t.monomial.replace_pair(pick.first, pick.second, r.monomial.factors());
      if (weight(next, base).value <= w)
        throw TerminationFailure("rewrite " + t.monomial.to_string() + " -> " + next.to_string() + " does not raise the weight");
      push(next, t.coeff * r.coeff);
    }
  }
  if (stats) stats->steps = steps;

  if (M.mode() == Mode::S)
    for (auto& t : done) t.monomial = t.monomial.strip();
  return canonical_expansion(done);
}

}  // namespace smt
