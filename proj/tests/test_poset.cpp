#include <gtest/gtest.h>

#include "smt/chains.hpp"
#include "smt/poset.hpp"

using namespace smt;

namespace {
const Shape k233(2, 3, 3);

DElement el(const char* t) { return parse_element(t, k233); }
}  // namespace

TEST(Shape, RejectsSmallMatrices) {
  EXPECT_THROW(Shape(2, 2, 3), ParameterError);
  EXPECT_THROW(Shape(2, 3, 1), ParameterError);
  EXPECT_THROW(Shape(0, 3, 3), ParameterError);
  EXPECT_EQ(Shape(2, 3, 3).h_rank(), 8);
}

TEST(IndexTuple, Validation) {
  EXPECT_THROW(IndexTuple({2, 1}), ParameterError);
  EXPECT_THROW(IndexTuple({0, 1}), ParameterError);
  EXPECT_EQ(enumerate_tuples(2, 4).size(), 6u);
  EXPECT_EQ(enumerate_tuples(0, 4).size(), 1u);
}

TEST(IndexTuple, GrassmannOrder) {
  EXPECT_TRUE(grassmann_leq({1, 2}, {1, 3}));
  EXPECT_TRUE(grassmann_leq({1, 3}, {2, 3}));
  EXPECT_FALSE(grassmann_leq({1, 4}, {2, 3}));
  EXPECT_FALSE(grassmann_leq({2, 3}, {1, 4}));
}

TEST(IndexTuple, ThetaReversesOrder) {
  for (int n = 1; n <= 5; ++n)
    for (int d = 0; d <= n; ++d) {
      auto T = enumerate_tuples(d, n);
      for (auto& a : T)
        for (auto& b : T) EXPECT_EQ(grassmann_leq(a, b), minor_geq(theta(a, d, n), theta(b, d, n)));
    }
}

TEST(Poset, TextRoundTrip) {
  for (auto& x : d_elements(k233)) EXPECT_EQ(parse_element(x.to_string(), k233), x);
  EXPECT_EQ(el("p[1,2|1,3]").to_string(), "p[1,2|1,3]");
  EXPECT_EQ(el(" xi[ 1, 3 ] ").to_string(), "xi[1,3]");
}

TEST(Poset, ParseErrors) {
  EXPECT_THROW(parse_element("p[1|1", k233), ParseError);
  EXPECT_THROW(parse_element("q[1]", k233), ParseError);
  EXPECT_THROW(parse_element("u[1]", k233), ParseError);  // wrong length for n = 2
  EXPECT_THROW(parse_element("p[4|1]", k233), ParseError);
  EXPECT_THROW(parse_element("p[1,2|1]", k233), ParseError);
  EXPECT_THROW(DElement::p({1, 2}, {1}).validate(k233), ParameterError);
}

TEST(Poset, Cardinalities) {
  EXPECT_EQ(h_elements(k233).size(), 24u);
  EXPECT_EQ(d_elements(k233).size(), 26u);
  EXPECT_EQ(h_elements(Shape(1, 2, 2)).size(), 8u);
}

TEST(Poset, OrderRules) {
  EXPECT_TRUE(leq_H(el("p[1|1]"), el("p[2|2]")));
  EXPECT_TRUE(leq_H(el("p[1,2|1,2]"), el("p[1|1]")));
  EXPECT_FALSE(leq_H(el("p[1|1]"), el("p[1,2|1,2]")));
  EXPECT_FALSE(comparable(el("p[1|2]"), el("p[2|1]")));
  EXPECT_FALSE(comparable(el("u[1,2]"), el("xi[1,2]")));
  EXPECT_TRUE(leq_H(el("u[1,2]"), el("u[1,3]")));
  // Nothing in H_u or H_xi lies above a p.
  for (auto& x : h_elements(k233))
    if (!x.is_p())
      for (auto& y : h_elements(k233))
        if (y.is_p()) {
          EXPECT_FALSE(leq_H(y, x)) << y.to_string() << " <= " << x.to_string();
        }
  for (auto& x : d_elements(k233)) {
    EXPECT_TRUE(leq_H(DElement::bottom(), x));
    EXPECT_TRUE(leq_H(x, DElement::top()));
  }
}

TEST(Poset, LatticeCoordinatesAreAnOrderEmbedding) {
  for (auto s : {Shape(1, 2, 2), Shape(2, 3, 3), Shape(2, 4, 3), Shape(3, 4, 4)}) {
    auto E = d_elements(s);
    for (auto& x : E) {
      EXPECT_EQ(lattice_coords(x, s).entries.size(), static_cast<std::size_t>(s.chain_length()));
      EXPECT_EQ(decode_lattice_coords(lattice_coords(x, s), s), x);
      for (auto& y : E) EXPECT_EQ(leq_H(x, y), chain_leq(lattice_coords(x, s), lattice_coords(y, s)));
    }
  }
}

TEST(Poset, ChainEmbeddingIsMonotoneHomomorphism) {
  auto E = d_elements(k233);
  for (auto& x : E)
    for (auto& y : E) {
      auto ex = embed_chain(x, k233), ey = embed_chain(y, k233);
      if (leq_H(x, y)) {
        EXPECT_TRUE(chain_leq(ex, ey));
      }
      EXPECT_EQ(chain_join(ex, ey), embed_chain(join_D(x, y, k233), k233));
      EXPECT_EQ(chain_meet(ex, ey), embed_chain(meet_D(x, y, k233), k233));
    }
}

TEST(Poset, JoinMeetOfSmallPair) {
  EXPECT_EQ(join_D(el("p[1|2]"), el("p[2|1]"), k233), el("p[2|2]"));
  EXPECT_EQ(meet_D(el("p[1|2]"), el("p[2|1]"), k233), el("p[1|1]"));
  EXPECT_EQ(join_D(el("u[1,2]"), el("xi[1,2]"), k233), el("p[1,2|1,2]"));
  EXPECT_EQ(meet_D(el("u[1,2]"), el("xi[1,2]"), k233), DElement::bottom());
}

TEST(Poset, DecodeRejectsForeignVectors) {
  ChainVector bad{{9, 9, 9, 9, 9, 9}};
  EXPECT_THROW(decode_lattice_coords(bad, k233), InvariantError);
}

TEST(Chains, TwoElementChain) {
  FinitePoset P(2, [](std::size_t i, std::size_t j) { return i <= j; });
  EXPECT_EQ(poset_rank(P), 1u);
  EXPECT_EQ(maximal_chains(P).size(), 1u);
}

TEST(Chains, RejectsNonAntisymmetric) {
  EXPECT_THROW(FinitePoset(2, [](std::size_t, std::size_t) { return true; }), ParameterError);
}

TEST(Chains, MaximalChainCounts) {
  auto H = make_poset(PosetKind::H, k233);
  auto prof = chain_profile(H);
  EXPECT_TRUE(prof.ranked());
  EXPECT_EQ(prof.max_cardinality, 9u);
  EXPECT_EQ(prof.count, 136);
  auto D = chain_profile(make_poset(PosetKind::D, k233));
  EXPECT_EQ(D.max_cardinality, 11u);
  EXPECT_EQ(chain_profile(make_poset(PosetKind::H, Shape(2, 4, 3))).count, 920);
}

TEST(Chains, EnumerationRespectsCap) {
  auto H = make_poset(PosetKind::H, k233);
  EXPECT_THROW(maximal_chains(H, 10), ResourceError);
}

TEST(IndexTuple, MixedLengthOrder) {
  EXPECT_TRUE(leq_tuple({1, 2}, {2}));
  EXPECT_TRUE(leq_tuple({1, 3}, {1, 3}));
  EXPECT_FALSE(leq_tuple({2}, {1, 3}));
}

TEST(IndexTuple, ThetaAndMinorMaps) {
  EXPECT_EQ(theta({1, 2, 3}, 3, 6), (MinorIndex{{}, {}}));
  EXPECT_EQ(theta({2, 4, 6}, 3, 6), (MinorIndex{{1, 3}, {1, 3}}));
  EXPECT_EQ(theta({4, 5, 6}, 3, 6), (MinorIndex{{1, 2, 3}, {1, 2, 3}}));
  EXPECT_EQ(f_minor({1, 2, 4}, 3, 6), (MinorIndex{{1}, {3}}));
  EXPECT_EQ(f_minor({2, 4, 6}, 3, 6), (MinorIndex{{1, 3}, {1, 3}}));
  EXPECT_EQ(f_minor({1, 2, 3}, 3, 6), (MinorIndex{{}, {}}));
}

TEST(Poset, MixedKindOrder) {
  EXPECT_FALSE(leq_H(el("u[2,3]"), el("p[1|1]")));
  EXPECT_TRUE(leq_H(el("u[1,3]"), el("p[2|1]")));
}

TEST(Poset, ChainEmbeddingValues) {
  EXPECT_EQ(embed_chain(el("p[2|3]"), k233).to_string(), "[2,3,1,3,3,1]");
  EXPECT_EQ(embed_chain(DElement::bottom(), k233).to_string(), "[1,1,1,1,1,1]");
  EXPECT_EQ(embed_chain(el("u[1,2]"), k233).to_string(), "[1,2,1,1,1,1]");
  // The printed embedding identifies p(A,B) with p(A+m, B+q); the lattice coordinates do not.
  EXPECT_EQ(embed_chain(el("p[1|1]"), k233), embed_chain(el("p[1,3|1,3]"), k233));
  EXPECT_NE(lattice_coords(el("p[1|1]"), k233), lattice_coords(el("p[1,3|1,3]"), k233));
}

TEST(Poset, JoinMeetAcrossKinds) {
  EXPECT_EQ(join_D(el("p[1|1]"), el("u[2,3]"), k233), el("p[2|1]"));
  EXPECT_EQ(meet_D(el("p[1|1]"), el("u[2,3]"), k233), el("u[1,3]"));
  for (auto& x : d_elements(k233)) {
    EXPECT_EQ(join_D(x, x, k233), x);
    EXPECT_EQ(meet_D(x, x, k233), x);
  }
}
