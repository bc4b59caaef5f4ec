#include <random>

#include <gtest/gtest.h>

#include "smt/oracle.hpp"
#include "smt/polyring.hpp"

using namespace smt;

namespace {
const Shape k233(2, 3, 3);

SparsePoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> var(0, variable_count(k233) - 1);
  std::uniform_int_distribution<int> coeff(-5, 5), deg(0, 2), terms(0, 4);
  SparsePoly f(k233);
  for (int t = terms(rng); t > 0; --t) {
    Exponents e(variable_count(k233), 0);
    for (int d = deg(rng); d > 0; --d) ++e[var(rng)];
    f.add_term(e, Rational(coeff(rng), 3));
  }
  return f;
}
}  // namespace

TEST(SparsePoly, RingAxioms) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 100; ++k) {
    auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a * SparsePoly::one(k233), a);
  }
}

TEST(SparsePoly, TextRoundTrip) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    auto f = random_poly(rng);
    EXPECT_EQ(SparsePoly::parse(k233, f.to_string()), f) << f.to_string();
  }
  EXPECT_EQ(SparsePoly(k233).to_string(), "0");
  auto g = Rational(-3, 2) * (SparsePoly::u(k233, 1, 1) * SparsePoly::xi(k233, 2, 3));
  EXPECT_EQ(SparsePoly::parse(k233, g.to_string()), g);
}

TEST(SparsePoly, ParseErrors) {
  EXPECT_THROW(SparsePoly::parse(k233, "1 * u[1,"), ParseError);
  EXPECT_THROW(SparsePoly::parse(k233, "1 * w[1,1]"), ParseError);
  EXPECT_THROW(SparsePoly::parse(k233, "1 * u[9,1]"), ParseError);
}

TEST(SparsePoly, Bidegree) {
  auto f = eval_p(k233, {1, 2}, {1, 3});
  ASSERT_TRUE(f.bidegree().has_value());
  EXPECT_EQ(f.bidegree()->u, 2);
  EXPECT_EQ(f.bidegree()->xi, 2);
  EXPECT_FALSE((SparsePoly::u(k233, 1, 1) + SparsePoly::xi(k233, 1, 1) * SparsePoly::xi(k233, 1, 2)).bidegree().has_value());
}

TEST(SparsePoly, RepeatedRowMinorVanishes) {
  EXPECT_TRUE(phi_minor(k233, {1, 1}, {1, 2}).is_zero());
  EXPECT_TRUE(phi_minor(k233, {2, 3}, {3, 3}).is_zero());
  EXPECT_FALSE(phi_minor(k233, {1, 2}, {1, 2}).is_zero());
}

TEST(SparsePoly, ExponentOverflowIsAResourceError) {
  auto x = SparsePoly::u(k233, 1, 1), f = x;
  for (int k = 0; k < 7; ++k) f = f * f;  // degree 128
  EXPECT_THROW(f * f, ResourceError);
}

TEST(SparsePoly, CauchyBinet) {
  for (auto& I : enumerate_tuples(2, 3))
    for (auto& J : enumerate_tuples(2, 3)) EXPECT_EQ(eval_u(k233, I) * eval_xi(k233, J), eval_p(k233, I, J));
}

TEST(LieAction, SignConvention) {
  RationalMatrix h(2, 2);
  h(0, 0) = 1;
  h(1, 1) = 3;
  auto u = eval_u(k233, {1, 2});
  auto xi = eval_xi(k233, {2, 3});
  EXPECT_EQ(lie_derive(h, u), Rational(-4) * u);
  EXPECT_EQ(lie_derive(h, xi), Rational(4) * xi);
  for (auto& X : lie_basis(2, Group::GL)) EXPECT_TRUE(lie_derive(X, phi(k233, 1, 2)).is_zero());
}

TEST(Linalg, BareissRank) {
  auto row = [](int a, int b, int c) { return IntRow{{0, a}, {1, b}, {2, c}}; };
  std::vector<IntRow> rows = {row(1, 2, 3), row(2, 4, 6), row(0, 1, 1)};
  EXPECT_EQ(bareiss_rank(rows, 3), 2u);
  EXPECT_EQ(bareiss_rank({}, 3), 0u);
}
