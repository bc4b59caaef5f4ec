// Acceptance run: one line per criterion, non-zero exit if any criterion fails
// or exceeds its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "smt/hibi.hpp"
#include "smt/io.hpp"
#include "smt/oracle.hpp"
#include "smt/presentation.hpp"
#include "smt/verify.hpp"

using namespace smt;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("FAILED ") + what;
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

void require_suite(Outcome& o, const SuiteReport& r) {
  for (auto& c : r.checks)
    if (!c.pass) o.require(false, r.suite + " " + r.shape.to_string() + ": " + c.name + " (" + c.detail + ")");
}

const Shape k233(2, 3, 3), k243(2, 4, 3), k244(2, 4, 4);

Outcome ac1() {
  Outcome o;
  Straightener st(k233);
  const auto x = parse_element("p[1|2]", k233), y = parse_element("p[2|1]", k233);
  const auto e = st.straighten_pair(x, y, Mode::S);
  const std::string got = to_string(e);
  o.require(got == "1 p[2|2]*p[1|1]\n-1 p[1,2|1,2]\n", "expansion was '" + got + "'");
  o.require(e.size() == 2 && e[0].coeff == 1 && e[1].coeff == -1, "coefficients +1, -1");
  o.require(verify_relation_structure(st.relation(x, y), st.evaluator()).exact, "polynomial identity");
  o.note("p[1|2]*p[2|1] = p[2|2]*p[1|1] - p[1,2|1,2]");
  return o;
}

Outcome ac2() {
  Outcome o;
  for (auto s : {k233, k243, k244}) {
    auto r = rank_dimension_report(s, 1'000'000);
    o.require(r.pass(), "chain cardinalities at " + s.to_string());
    o.note(s.to_string() + ": " + std::to_string(r.enumerated_h) + " H-chains of " + std::to_string(r.h.max_cardinality) + ", " +
           std::to_string(r.enumerated_d) + " D-chains of " + std::to_string(r.d.max_cardinality));
  }
  return o;
}

Outcome ac3() {
  Outcome o;
  for (auto s : {k233, k243}) {
    RunConfig cfg;
    cfg.shape = s;
    auto r = verify_lattice(cfg);
    require_suite(o, r);
    const auto N = d_elements(s).size();
    o.note(s.to_string() + ": " + std::to_string(N * (N - 1) / 2) + " pairs closed, distributive on " + std::to_string(N * N * N) +
           " triples");
  }
  return o;
}

Outcome ac4() {
  Outcome o;
  RunConfig cfg;
  cfg.shape = k233;
  cfg.maxdeg = 4;
  auto r = verify_basis(cfg);
  require_suite(o, r);
  o.require(r.checks.size() == 15, "all 15 bidegrees with a+b <= 4 checked");
  o.require(enumerate_standard(k233, {1, 1}).size() == 9, "9 standard monomials at (1,1)");
  o.require(enumerate_standard(k233, {2, 0}).size() == 3, "3 standard monomials at (2,0)");
  o.require(enumerate_standard(k233, {2, 2}).size() == 45, "45 standard monomials at (2,2)");
  o.note(std::to_string(r.checks.size()) + " bidegrees, standard = rank = invariants; (1,1)=9 (2,0)=3 (2,2)=45");
  return o;
}

Outcome ac5() {
  Outcome o;
  for (auto s : {k233, k243}) {
    auto d = check_degeneration_hypotheses(s);
    o.require(d.other_failures == 0, "exact identities at " + s.to_string());
    o.require(d.coefficient_failures == 0, "unit join*meet coefficient at " + s.to_string());
    o.require(d.interval_failures == 0, "rhs brackets lhs at " + s.to_string());
    o.require(d.content_failures == 0, "content preserved at " + s.to_string());
    o.note(s.to_string() + ": " + std::to_string(d.pairs) + " pairs, 0 violations");
  }
  return o;
}

Outcome ac6() {
  Outcome o;
  RunConfig cfg;
  cfg.shape = k233;
  cfg.samples = 200;
  auto r = verify_termination(cfg);
  require_suite(o, r);
  o.note(r.checks[0].detail + "; 200 monomials, 3 strategies, 0 mismatches");
  return o;
}

Outcome ac7() {
  Outcome o;
  RunConfig cfg;
  cfg.shape = k233;
  auto r = verify_degeneration(cfg);
  require_suite(o, r);
  const auto L = FiniteLattice::of_D(k233);
  o.require(hilbert_A(L, 1) == 26, "hilbert_A(D,1) = 26");
  std::string h;
  for (int k = 0; k <= 3; ++k) h += (k ? ", " : "") + hilbert_A(L, k).get_str();
  o.note("(a)(b)(c) on " + std::to_string(incomparable_pairs(k233).size()) + " pairs; hilbert_A k=0..3: " + h);
  return o;
}

Outcome ac8() {
  Outcome o;
  std::vector<std::vector<SparsePoly>> phis(3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) phis[static_cast<std::size_t>(i - 1)].push_back(phi(k233, i, j));
  o.require(determinant(phis, k233).is_zero(), "3x3 determinant of the pairings vanishes");
  std::string counts;
  for (int a = 0; a <= 3; ++a) {
    const auto inv = invariant_dimension(k233, {a, a}, Group::GL, 5000);
    const auto ponly = enumerate_standard_p_only(k233, a).size();
    o.require(inv == ponly, "GL invariants = p-standard at (" + std::to_string(a) + "," + std::to_string(a) + ")");
    counts += (a ? " " : "") + std::to_string(inv);
  }
  const Integer h3 = gl_hilbert_oracle(3, 3, 2, 3);
  o.require(h3 == 164 && enumerate_standard_p_only(k233, 3).size() == 164, "degree-3 count 164");
  o.note("det = 0; GL invariants at (a,a), a=0..3: " + counts + "; Hilbert series gives " + h3.get_str());
  return o;
}

Outcome ac9() {
  Outcome o;
  Straightener st(k233);
  auto r = presentation_check(st, 3);
  o.require(r.pass(), "relation span equals kernel");
  for (auto& d : r.degrees)
    o.note("deg<=" + std::to_string(d.degree) + ": kernel " + std::to_string(d.kernel) + " = span " + std::to_string(d.relation_span));
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "small straightening relation", 1, ac1},
      {"AC2", "maximal chain cardinalities", 30, ac2},
      {"AC3", "lattice closure and distributivity", 60, ac3},
      {"AC4", "standard monomial basis", 600, ac4},
      {"AC5", "relation structure", 600, ac5},
      {"AC6", "termination and confluence", 300, ac6},
      {"AC7", "degeneration witness", 300, ac7},
      {"AC8", "GL fundamental theorems", 600, ac8},
      {"AC9", "presentation", 900, ac9},
  };
  int failures = 0;
  for (auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("%s %s: %s [%.3f s, limit %.0f s%s] %s\n", c.id, pass ? "PASS" : "FAIL", c.title, secs, c.limit_seconds,
                in_time ? "" : ", TIME EXCEEDED", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
