#include <gtest/gtest.h>

#include "smt/oracle.hpp"
#include "smt/presentation.hpp"

using namespace smt;

namespace {
const Shape k233(2, 3, 3);
}

TEST(Oracle, SlInvariantDimensions) {
  EXPECT_EQ(invariant_dimension(k233, {0, 0}, Group::SL), 1u);
  EXPECT_EQ(invariant_dimension(k233, {1, 0}, Group::SL), 0u);
  EXPECT_EQ(invariant_dimension(k233, {1, 1}, Group::SL), 9u);
  EXPECT_EQ(invariant_dimension(k233, {2, 0}, Group::SL), 3u);
  EXPECT_EQ(invariant_dimension(k233, {2, 2}, Group::SL), 45u);
  EXPECT_EQ(invariant_dimension(k233, {1, 3}, Group::SL), 24u);
}

TEST(Oracle, GlInvariantDimensions) {
  EXPECT_EQ(invariant_dimension(k233, {1, 1}, Group::GL), 9u);
  EXPECT_EQ(invariant_dimension(k233, {2, 2}, Group::GL), 45u);
  EXPECT_EQ(invariant_dimension(k233, {2, 0}, Group::GL), 0u);
}

TEST(Oracle, HilbertOracle) {
  EXPECT_EQ(gl_hilbert_oracle(3, 3, 2, 3), 164);
  EXPECT_EQ(gl_hilbert_oracle(3, 3, 2, 2), 45);
  EXPECT_EQ(gl_hilbert_oracle(4, 3, 2, 2), 78);
}

TEST(Oracle, CapIsEnforced) {
  EXPECT_THROW(invariant_dimension(k233, {4, 4}, Group::SL, 100), ResourceError);
  EXPECT_THROW(gl_hilbert_oracle(4, 3, 2, 4, 10), ResourceError);
  EXPECT_THROW(invariant_dimension(k233, {-1, 0}, Group::SL), ParameterError);
}

TEST(Presentation, KernelMatchesRelationSpan) {
  Straightener st(k233);
  auto r = presentation_check(st, 3);
  ASSERT_EQ(r.degrees.size(), 3u);
  EXPECT_EQ(r.degrees[0].monomials, 25u);
  EXPECT_EQ(r.degrees[1].monomials, 325u);
  EXPECT_EQ(r.degrees[2].monomials, 2925u);
  EXPECT_EQ(r.degrees[0].kernel, 0u);
  EXPECT_EQ(r.degrees[1].kernel, 68u);
  EXPECT_EQ(r.degrees[2].kernel, 1308u);
  EXPECT_TRUE(r.pass());
}

TEST(Presentation, GlMinorsGenerateDegreeThreeRelations) {
  auto g = gl_presentation_check(k233);
  EXPECT_TRUE(g.minors_vanish);
  EXPECT_EQ(g.monomials, 165u);
  EXPECT_EQ(g.kernel, 1u);
  EXPECT_EQ(g.minors_rank, 1u);
  EXPECT_TRUE(g.pass());
}

TEST(Oracle, RankOf) {
  EXPECT_EQ(rank_of({phi(k233, 1, 1), phi(k233, 1, 2)}), 2u);
  auto f = phi(k233, 2, 3);
  EXPECT_EQ(rank_of({f, Rational(2) * f}), 1u);
  EXPECT_EQ(gl_hilbert_oracle(3, 3, 2, 1), 9);
}
