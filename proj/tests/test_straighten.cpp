#include <random>

#include <gtest/gtest.h>

#include "smt/hibi.hpp"
#include "smt/straighten.hpp"

using namespace smt;

namespace {
const Shape k233(2, 3, 3);

DElement el(const char* t) { return parse_element(t, k233); }

const Straightener& st233() {
  static const Straightener st(k233);
  return st;
}
}  // namespace

TEST(Straighten, SmallPairInS) {
  auto e = st233().straighten_pair(el("p[1|2]"), el("p[2|1]"), Mode::S);
  EXPECT_EQ(to_string(e), "1 p[2|2]*p[1|1]\n-1 p[1,2|1,2]\n");
}

TEST(Straighten, SmallPairInRD) {
  const auto& r = st233().relation(el("p[1|2]"), el("p[2|1]"));
  EXPECT_EQ(r.family, 4);
  EXPECT_EQ(r.to_string(Mode::RD), "p[2|1]*p[1|2] = - 1 TOP*p[1,2|1,2] + 1 p[2|2]*p[1|1]");
  EXPECT_EQ(r.to_string(Mode::S), "p[2|1]*p[1|2] = + 1 p[2|2]*p[1|1] - 1 p[1,2|1,2]");
}

TEST(Straighten, MixedPairs) {
  EXPECT_EQ(to_string(st233().straighten_pair(el("u[1,2]"), el("xi[1,2]"), Mode::S)), "1 p[1,2|1,2]\n");
  EXPECT_EQ(to_string(st233().straighten_pair(el("u[1,2]"), el("xi[1,2]"), Mode::RD)), "1 p[1,2|1,2]*BOT\n");
  EXPECT_EQ(st233().relation(el("u[2,3]"), el("p[1|1]")).to_string(Mode::S),
            "u[2,3]*p[1|1] = - 1 p[3|1]*u[1,2] + 1 p[2|1]*u[1,3]");
}

TEST(Straighten, RejectsComparablePairs) {
  EXPECT_THROW(compute_relation(el("p[1|1]"), el("p[2|2]"), st233().evaluator()), ParameterError);
  EXPECT_THROW(compute_relation(DElement::top(), el("p[2|2]"), st233().evaluator()), ParameterError);
}

TEST(Straighten, EveryRelationHasTheRequiredStructure) {
  std::map<int, int> families;
  for (auto& [x, y] : incomparable_pairs(k233)) {
    const auto& r = st233().relation(x, y);
    EXPECT_TRUE(verify_relation_structure(r, st233().evaluator()).ok()) << r.to_string();
    ++families[r.family];
  }
  EXPECT_EQ(families[1], 9);
  EXPECT_EQ(families[2], 0);
  EXPECT_EQ(families[3], 0);
  EXPECT_EQ(families[4], 35);
  EXPECT_EQ(families[5], 12);
  EXPECT_EQ(families[6], 12);
}

TEST(Straighten, StandardInputIsFixed) {
  auto M = GenMonomial::parse(k233, "p[1|1]");
  auto e = straighten(M, st233());
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].monomial, M);
  EXPECT_EQ(e[0].coeff, 1);
}

TEST(Straighten, StrategiesAgreeAndPreserveValue) {
  std::mt19937_64 rng(3);
  auto H = h_elements(k233);
  std::uniform_int_distribution<std::size_t> pick(0, H.size() - 1);
  for (int k = 0; k < 50; ++k) {
    std::vector<DElement> f;
    for (int d = 0; d < 4; ++d) f.push_back(H[pick(rng)]);
    GenMonomial M(k233, Mode::S, f);
    auto a = straighten(M, st233(), {PairStrategy::First, 0});
    auto b = straighten(M, st233(), {PairStrategy::Last, 0});
    auto c = straighten(M, st233(), {PairStrategy::Random, static_cast<std::uint64_t>(k)});
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
    EXPECT_EQ(evaluate(a, st233().evaluator()), st233().evaluator()(M));
    for (auto& t : a) EXPECT_TRUE(is_standard(t.monomial));
  }
}

TEST(Weight, RelationTermsOutweighTheirPair) {
  for (auto& [x, y] : incomparable_pairs(k233)) {
    const auto& r = st233().relation(x, y);
    const auto lw = weight(r.lhs(k233)).value;
    for (auto& t : r.rhs) EXPECT_GT(weight(t.monomial).value, lw) << r.to_string();
  }
}

TEST(Weight, BaseMustExceedMatrixSize) {
  auto M = GenMonomial::parse(k233, "p[1|1]");
  EXPECT_THROW(weight(M, 3), ParameterError);
  EXPECT_EQ(weight(M).base, 4);
}

TEST(Straighten, StepGuard) {
  auto M = GenMonomial::parse(k233, "p[1|2]*p[2|1]*p[1|3]*p[3|1]");
  EXPECT_THROW(straighten(M, st233(), {PairStrategy::First, 0, 1}), TerminationFailure);
}

TEST(Straighten, ThreeTermPluecker) {
  const Shape s(2, 4, 3);
  Straightener st(s);
  auto r = st.relation(parse_element("u[1,4]", s), parse_element("u[2,3]", s));
  EXPECT_EQ(r.to_string(Mode::S), "u[2,3]*u[1,4] = - 1 u[3,4]*u[1,2] + 1 u[2,4]*u[1,3]");
}

TEST(Straighten, DegreeThree) {
  auto M = GenMonomial::parse(k233, "p[1|2]*p[2|1]*p[1|1]");
  auto e = straighten(M, st233());
  EXPECT_EQ(evaluate(e, st233().evaluator()), st233().evaluator()(M));
  EXPECT_EQ(to_string(e), "1 p[2|2]*p[1|1]*p[1|1]\n-1 p[1|1]*p[1,2|1,2]\n");
}

TEST(Straighten, MixedMonomial) {
  auto e = straighten(GenMonomial::parse(k233, "u[1,2]*xi[1,2]"), st233());
  EXPECT_EQ(to_string(e), "1 p[1,2|1,2]\n");
}
