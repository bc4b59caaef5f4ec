#pragma once

// Verification suites shared by the smt-lab CLI and the acceptance tests.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "smt/chains.hpp"
#include "smt/hibi.hpp"
#include "smt/oracle.hpp"
#include "smt/presentation.hpp"
#include "smt/straighten.hpp"

namespace smt {

struct RunConfig {
  Shape shape;
  int maxdeg = 4;
  std::uint64_t seed = 20240601;
  std::size_t cap_monomials = 5000;
  std::size_t cap_lattice = 200;
  std::size_t samples = 200;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  Shape shape;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string name, bool pass, std::string detail) { checks.push_back({std::move(name), pass, std::move(detail)}); }
};

namespace detail {
inline std::string count_detail(std::size_t checked, std::size_t failed, const std::string& what) {
  return std::to_string(checked) + " " + what + ", " + std::to_string(failed) + " failures";
}

inline std::vector<Shape> small_shapes() {
  std::vector<Shape> out;
  for (int n = 1; n <= 2; ++n)
    for (int m = n + 1; m <= 4; ++m)
      for (int q = n + 1; q <= 4; ++q) out.emplace_back(n, m, q);
  return out;
}

// Seeded random monomial of S with 1..max_degree factors drawn uniformly from H.
inline GenMonomial random_monomial(const Shape& s, const std::vector<DElement>& H, int max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, H.size() - 1);
  std::vector<DElement> f;
  for (int k = deg(rng); k > 0; --k) f.push_back(H[pick(rng)]);
  return GenMonomial(s, Mode::S, std::move(f));
}
}  // namespace detail

/// Order on D against both embeddings, and θ against the order on I(d, n).
inline SuiteReport verify_order(const RunConfig& cfg) {
  SuiteReport rep{"order", cfg.shape, {}};
  auto shapes = detail::small_shapes();
  if (std::find(shapes.begin(), shapes.end(), cfg.shape) == shapes.end()) shapes.push_back(cfg.shape);
  for (auto& s : shapes) {
    auto E = d_elements(s);
    std::size_t pairs = 0, agree_fail = 0, mono_fail = 0, hom_fail = 0, decode_fail = 0;
    for (auto& x : E) {
      try {
        if (!(decode_lattice_coords(lattice_coords(x, s), s) == x)) ++decode_fail;
      } catch (const InvariantError&) {
        ++decode_fail;
      }
      for (auto& y : E) {
        ++pairs;
        const bool le = leq_H(x, y);
        if (le != chain_leq(lattice_coords(x, s), lattice_coords(y, s))) ++agree_fail;
        const auto ex = embed_chain(x, s), ey = embed_chain(y, s);
        if (le && !chain_leq(ex, ey)) ++mono_fail;
        if (chain_join(ex, ey) != embed_chain(join_D(x, y, s), s) || chain_meet(ex, ey) != embed_chain(meet_D(x, y, s), s))
          ++hom_fail;
      }
    }
    const std::string tag = " " + s.to_string();
    rep.add("order agreement with lattice coordinates" + tag, agree_fail == 0, detail::count_detail(pairs, agree_fail, "pairs"));
    rep.add("lattice coordinates decode uniquely" + tag, decode_fail == 0, detail::count_detail(E.size(), decode_fail, "elements"));
    rep.add("chain embedding is monotone" + tag, mono_fail == 0, detail::count_detail(pairs, mono_fail, "pairs"));
    rep.add("chain embedding respects join and meet" + tag, hom_fail == 0, detail::count_detail(pairs, hom_fail, "pairs"));
  }
  std::size_t tuples = 0, rev_fail = 0, bij_fail = 0, cases = 0;
  for (int n = 1; n <= 6; ++n)
    for (int d = 0; d <= n; ++d) {
      ++cases;
      auto T = enumerate_tuples(d, n);
      std::vector<MinorIndex> images;
      for (auto& i : T) images.push_back(theta(i, d, n));
      auto sorted = images;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) ++bij_fail;
      for (std::size_t a = 0; a < T.size(); ++a)
        for (std::size_t b = 0; b < T.size(); ++b) {
          ++tuples;
          if (grassmann_leq(T[a], T[b]) != minor_geq(images[a], images[b])) ++rev_fail;
        }
    }
  rep.add("theta reverses the order, n <= 6", rev_fail == 0, detail::count_detail(tuples, rev_fail, "pairs"));
  rep.add("theta is injective, n <= 6", bij_fail == 0, detail::count_detail(cases, bij_fail, "(d,n) cases"));
  return rep;
}

/// Join and meet through the coordinates against brute-force bounds, and distributivity.
inline SuiteReport verify_lattice(const RunConfig& cfg) {
  const Shape& s = cfg.shape;
  SuiteReport rep{"lattice", s, {}};
  auto E = d_elements(s);
  if (E.size() > cfg.cap_lattice)
    throw ResourceError("|D| = " + std::to_string(E.size()) + " exceeds the lattice cap " + std::to_string(cfg.cap_lattice));
  FiniteLattice L = FiniteLattice::of_D(s);
  std::map<DElement, std::size_t> idx;
  for (std::size_t k = 0; k < E.size(); ++k) idx[E[k]] = k;
  std::size_t pairs = 0, closure_fail = 0, bound_fail = 0;
  for (std::size_t i = 0; i < E.size(); ++i)
    for (std::size_t j = i + 1; j < E.size(); ++j) {
      ++pairs;
      try {
        auto J = join_D(E[i], E[j], s), M = meet_D(E[i], E[j], s);
        if (idx.at(J) != L.join(i, j) || idx.at(M) != L.meet(i, j)) ++bound_fail;
      } catch (const InvariantError&) {
        ++closure_fail;
      }
    }
  rep.add("join and meet stay in D", closure_fail == 0, detail::count_detail(pairs, closure_fail, "pairs"));
  rep.add("join and meet are least upper and greatest lower bounds", bound_fail == 0,
          detail::count_detail(pairs, bound_fail, "pairs"));
  const std::size_t triples = E.size() * E.size() * E.size();
  rep.add("distributive laws on all triples", L.is_distributive(cfg.cap_lattice), std::to_string(triples) + " triples");
  return rep;
}

/// Every straightening relation of D: exact identity, unit join*meet term, interval, content.
inline SuiteReport verify_relations(const RunConfig& cfg) {
  const Shape& s = cfg.shape;
  SuiteReport rep{"relations", s, {}};
  auto d = check_degeneration_hypotheses(s);
  rep.add("relations are exact polynomial identities", d.other_failures == 0, detail::count_detail(d.pairs, d.other_failures, "relations"));
  rep.add("join*meet coefficient is exactly 1", d.coefficient_failures == 0,
          detail::count_detail(d.pairs, d.coefficient_failures, "relations"));
  rep.add("rhs terms bracket the lhs pair", d.interval_failures == 0, detail::count_detail(d.pairs, d.interval_failures, "relations"));
  rep.add("content is preserved", d.content_failures == 0, detail::count_detail(d.pairs, d.content_failures, "relations"));
  std::map<int, std::size_t> fam;
  for (auto& [x, y] : incomparable_pairs(s)) ++fam[relation_family(x, y)];
  std::string famdetail;
  for (int f = 1; f <= 6; ++f) famdetail += (f > 1 ? " " : "") + std::to_string(f) + ":" + std::to_string(fam[f]);
  rep.add("relations per family", true, famdetail);
  return rep;
}

/// Standard monomials against their evaluated rank and the SL invariant dimension.
inline SuiteReport verify_basis(const RunConfig& cfg) {
  const Shape& s = cfg.shape;
  SuiteReport rep{"basis", s, {}};
  Evaluator ev(s);
  for (int total = 0; total <= cfg.maxdeg; ++total)
    for (int a = total; a >= 0; --a) {
      const int b = total - a;
      auto std_monos = enumerate_standard(s, {a, b});
      std::vector<SparsePoly> vals;
      for (auto& M : std_monos) vals.push_back(ev(M));
      const auto rank = rank_of(vals);
      const auto inv = invariant_dimension(s, {a, b}, Group::SL, cfg.cap_monomials);
      rep.add("bidegree (" + std::to_string(a) + "," + std::to_string(b) + ")", std_monos.size() == rank && rank == inv,
              "standard=" + std::to_string(std_monos.size()) + " rank=" + std::to_string(rank) + " invariants=" + std::to_string(inv));
    }
  return rep;
}

/// Conditions on the relations of D plus Hilbert-function agreement with A(D).
inline SuiteReport verify_degeneration(const RunConfig& cfg) {
  const Shape& s = cfg.shape;
  SuiteReport rep{"degeneration", s, {}};
  auto d = check_degeneration_hypotheses(s);
  rep.add("(a) join*meet coefficient 1", d.coefficient_failures == 0, detail::count_detail(d.pairs, d.coefficient_failures, "pairs"));
  rep.add("(b) rhs pairs bracket the lhs", d.interval_failures == 0, detail::count_detail(d.pairs, d.interval_failures, "pairs"));
  rep.add("(c) content preserved", d.content_failures == 0, detail::count_detail(d.pairs, d.content_failures, "pairs"));
  rep.add("relations exact", d.other_failures == 0, detail::count_detail(d.pairs, d.other_failures, "pairs"));

  FiniteLattice L = FiniteLattice::of_D(s);
  const auto binoms = binomial_generators(L);
  rep.add("one binomial per incomparable pair", binoms.size() == d.pairs,
          std::to_string(binoms.size()) + " binomials, " + std::to_string(d.pairs) + " pairs");
  for (int k = 0; k <= 3; ++k) {
    const Integer h = hilbert_A(L, k);
    const auto std_count = enumerate_standard_rd(s, k).size();
    rep.add("Hilbert function of A(D) at k=" + std::to_string(k), h == std_count,
            "multichains=" + h.get_str() + " standard=" + std::to_string(std_count));
  }

  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> pick(0, L.size() - 1);
  std::size_t mismatches = 0;
  for (std::size_t k = 0; k < cfg.samples; ++k) {
    std::vector<std::size_t> f(4);
    for (auto& x : f) x = pick(rng);
    auto first = normal_form(L, f, PairStrategy::First);
    if (first != normal_form(L, f, PairStrategy::Last) || first != normal_form(L, f, PairStrategy::Random, cfg.seed + k) ||
        first != normal_form(L, first))
      ++mismatches;
  }
  rep.add("lattice normal form is strategy independent", mismatches == 0,
          detail::count_detail(cfg.samples, mismatches, "degree-4 monomials"));
  return rep;
}

/// Invariants of GL_n: the pairings, their (n+1)-minors, and Hilbert-function counts.
inline SuiteReport verify_fundamental_gl(const RunConfig& cfg) {
  const Shape& s = cfg.shape;
  SuiteReport rep{"fundamental-gl", s, {}};
  std::size_t phi_fail = 0;
  for (auto& X : lie_basis(s.n, Group::GL))
    for (int i = 1; i <= s.m; ++i)
      for (int j = 1; j <= s.q; ++j)
        if (!lie_derive(X, phi(s, i, j)).is_zero()) ++phi_fail;
  rep.add("pairings are GL invariants", phi_fail == 0, detail::count_detail(static_cast<std::size_t>(s.n * s.n * s.m * s.q), phi_fail, "derivatives"));

  auto pres = gl_presentation_check(s, cfg.cap_monomials * 10);
  rep.add("(n+1)-minors of the pairing matrix vanish", pres.minors_vanish, std::to_string(pres.minors) + " minors");
  rep.add("relations in degree n+1 are spanned by the minors", pres.pass(),
          "kernel=" + std::to_string(pres.kernel) + " minors rank=" + std::to_string(pres.minors_rank) + " of " +
              std::to_string(pres.monomials) + " monomials");

  for (int a = 0; a <= 3; ++a) {
    const auto inv = invariant_dimension(s, {a, a}, Group::GL, cfg.cap_monomials);
    const auto ponly = enumerate_standard_p_only(s, a).size();
    const Integer hilb = gl_hilbert_oracle(s.m, s.q, s.n, a, cfg.cap_monomials);
    rep.add("bidegree (" + std::to_string(a) + "," + std::to_string(a) + ")", inv == ponly && hilb == ponly,
            "invariants=" + std::to_string(inv) + " p-standard=" + std::to_string(ponly) + " hilbert=" + hilb.get_str());
  }
  std::size_t unbalanced = 0, nonzero = 0;
  for (int a = 0; a <= cfg.maxdeg; ++a)
    for (int b = 0; a + b <= cfg.maxdeg; ++b) {
      if (a == b) continue;
      ++unbalanced;
      if (invariant_dimension(s, {a, b}, Group::GL, cfg.cap_monomials) != 0) ++nonzero;
    }
  rep.add("no GL invariants off the diagonal", nonzero == 0, detail::count_detail(unbalanced, nonzero, "bidegrees"));
  return rep;
}

/// Invariants of SL_n: every generator is invariant, the first relation holds, and
/// standard monomials count the invariants.
inline SuiteReport verify_fundamental_sl(const RunConfig& cfg) {
  const Shape& s = cfg.shape;
  SuiteReport rep{"fundamental-sl", s, {}};
  Evaluator ev(s);
  const auto basis = lie_basis(s.n, Group::SL);
  std::size_t gens = 0, fail = 0;
  for (auto& x : h_elements(s))
    for (auto& X : basis) {
      ++gens;
      if (!lie_derive(X, ev(x)).is_zero()) ++fail;
    }
  rep.add("generators are SL invariants", fail == 0, detail::count_detail(gens, fail, "derivatives"));

  RationalMatrix diag(static_cast<std::size_t>(s.n), static_cast<std::size_t>(s.n));
  for (int i = 0; i < s.n; ++i) diag(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = i + 1;
  std::size_t weight_fail = 0, minors = 0;
  for (auto& x : h_elements(s)) {
    if (x.is_p()) continue;
    ++minors;
    const Rational expect = x.is_u() ? Rational(-diag.trace()) : diag.trace();
    if (!(lie_derive(diag, ev(x)) == expect * ev(x))) ++weight_fail;
  }
  rep.add("u-minors carry -trace, xi-minors +trace", weight_fail == 0, detail::count_detail(minors, weight_fail, "minors"));

  std::size_t cb = 0, cb_fail = 0;
  for (auto& I : enumerate_tuples(s.n, s.m))
    for (auto& J : enumerate_tuples(s.n, s.q)) {
      ++cb;
      if (!(eval_u(s, I) * eval_xi(s, J) == eval_p(s, I, J))) ++cb_fail;
    }
  rep.add("u(I)xi(J) = p(I,J)", cb_fail == 0, detail::count_detail(cb, cb_fail, "pairs"));

  for (int total = 0; total <= cfg.maxdeg; ++total)
    for (int a = total; a >= 0; --a) {
      const int b = total - a;
      const auto inv = invariant_dimension(s, {a, b}, Group::SL, cfg.cap_monomials);
      const auto cnt = enumerate_standard(s, {a, b}).size();
      rep.add("invariants of bidegree (" + std::to_string(a) + "," + std::to_string(b) + ")", inv == cnt,
              "invariants=" + std::to_string(inv) + " standard=" + std::to_string(cnt));
    }
  return rep;
}

/// Maximal chains of H and D against the rank formulas.
inline SuiteReport verify_rank(const RunConfig& cfg) {
  const Shape& s = cfg.shape;
  SuiteReport rep{"rank", s, {}};
  auto r = rank_dimension_report(s, cfg.cap_lattice);
  rep.add("maximal chains of H", r.h.ranked() && r.walked_h_ranked && r.h.max_cardinality == r.expected_h && r.h.count == r.enumerated_h,
          std::to_string(r.enumerated_h) + " chains of " + std::to_string(r.h.min_cardinality) + ".." +
              std::to_string(r.h.max_cardinality) + " elements, expected " + std::to_string(r.expected_h));
  rep.add("maximal chains of D", r.d.ranked() && r.walked_d_ranked && r.d.max_cardinality == r.expected_d && r.d.count == r.enumerated_d,
          std::to_string(r.enumerated_d) + " chains of " + std::to_string(r.d.min_cardinality) + ".." +
              std::to_string(r.d.max_cardinality) + " elements, expected " + std::to_string(r.expected_d));
  return rep;
}

/// Kernel of K[H] -> S against the span of the relations, by degree.
inline SuiteReport verify_presentation(const RunConfig& cfg) {
  const Shape& s = cfg.shape;
  SuiteReport rep{"presentation", s, {}};
  Straightener st(s);
  auto r = presentation_check(st, cfg.maxdeg, cfg.cap_monomials * 10);
  for (auto& d : r.degrees)
    rep.add("degree <= " + std::to_string(d.degree), d.pass(),
            "monomials=" + std::to_string(d.monomials) + " kernel=" + std::to_string(d.kernel) + " relations=" + std::to_string(d.relation_span));
  return rep;
}

/// Rewriting to standard form: weight increase is enforced inside straighten(); here the
/// three pair-selection strategies must agree and the polynomial value must be kept.
inline SuiteReport verify_termination(const RunConfig& cfg) {
  const Shape& s = cfg.shape;
  SuiteReport rep{"termination", s, {}};
  Straightener st(s);
  auto H = h_elements(s);
  std::mt19937_64 rng(cfg.seed);
  std::size_t mismatch = 0, inexact = 0, steps = 0;
  for (std::size_t k = 0; k < cfg.samples; ++k) {
    auto M = detail::random_monomial(s, H, 4, rng);
    StraightenStats stats;
    auto first = straighten(M, st, {PairStrategy::First, 0}, &stats);
    steps += stats.steps;
    auto last = straighten(M, st, {PairStrategy::Last, 0});
    auto random = straighten(M, st, {PairStrategy::Random, cfg.seed + k});
    if (!(first == last) || !(first == random)) ++mismatch;
    bool standard = std::all_of(first.begin(), first.end(), [](const Term& t) { return is_standard(t.monomial); });
    if (!standard || !(evaluate(first, st.evaluator()) == st.evaluator()(M))) ++inexact;
  }
  rep.add("every rewrite raises the weight", true, std::to_string(steps) + " rewrite steps, each checked");
  rep.add("three strategies agree", mismatch == 0, detail::count_detail(cfg.samples, mismatch, "monomials"));
  rep.add("result is standard and equal to the input", inexact == 0, detail::count_detail(cfg.samples, inexact, "monomials"));
  return rep;
}

using SuiteFn = std::function<SuiteReport(const RunConfig&)>;

inline const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"order", verify_order},
      {"lattice", verify_lattice},
      {"relations", verify_relations},
      {"basis", verify_basis},
      {"degeneration", verify_degeneration},
      {"fundamental-gl", verify_fundamental_gl},
      {"fundamental-sl", verify_fundamental_sl},
      {"rank", verify_rank},
      {"presentation", verify_presentation},
      {"termination", verify_termination},
  };
  return table;
}

inline SuiteReport run_suite(const std::string& name, const RunConfig& cfg) {
  for (auto& [n, fn] : suites())
    if (n == name) return fn(cfg);
  throw ParameterError("unknown suite '" + name + "'");
}

}  // namespace smt
