#include <gtest/gtest.h>

#include <random>

#include "cutcert/group_ring.hpp"
#include "testutil.hpp"

using namespace cutcert;

namespace {

struct Gens {
  Alphabet a = Alphabet(std::vector<std::string>{"x", "y"});
  Word x = Word::generator(a, 0);
  Word y = Word::generator(a, 1);
};

TEST(Fox, Axioms) {
  Gens g;
  EXPECT_EQ(fox_derivative(g.x, 0), GroupRingElt::of_word(Word(g.a)));
  EXPECT_TRUE(fox_derivative(g.y, 0).is_zero());
  EXPECT_EQ(fox_derivative(g.x.inverse(), 0),
            -GroupRingElt::of_word(g.x.inverse()));
  // d(xy)/dx = 1
  EXPECT_EQ(fox_derivative(g.x * g.y, 0), GroupRingElt::of_word(Word(g.a)));
  EXPECT_THROW(fox_derivative(g.x, 5), Error);
}

TEST(Fox, CommutatorDerivatives) {
  Gens g;
  Word c = commutator(g.x, g.y);
  // d[x,y]/dx = 1 - xyx^-1
  GroupRingElt expected_dx = GroupRingElt::of_word(Word(g.a)) -
                             GroupRingElt::of_word(g.x * g.y * g.x.inverse());
  EXPECT_EQ(fox_derivative(c, 0), expected_dx);
  // d[x,y]/dy = x - xyx^-1y^-1
  GroupRingElt expected_dy =
      GroupRingElt::of_word(g.x) - GroupRingElt::of_word(c);
  EXPECT_EQ(fox_derivative(c, 1), expected_dy);
}

TEST(Fox, ProductRuleProperty) {
  std::mt19937_64 rng(41);
  Alphabet a = Alphabet::indexed(3);
  for (int trial = 0; trial < 100; ++trial) {
    Word u = cutcert::testing::random_word(rng, a, 8);
    Word v = cutcert::testing::random_word(rng, a, 8);
    for (int i = 0; i < 3; ++i) {
      GroupRingElt lhs = fox_derivative(u * v, i);
      GroupRingElt rhs = fox_derivative(u, i) + u * fox_derivative(v, i);
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(Fox, FundamentalIdentityProperty) {
  // sum_i dw/dx_i (x_i - 1) = w - 1 in Z[F], and abelianized.
  std::mt19937_64 rng(42);
  Alphabet a = Alphabet::indexed(3);
  for (int trial = 0; trial < 100; ++trial) {
    Word w = cutcert::testing::random_word(rng, a, 10);
    GroupRingElt acc(a);
    for (int i = 0; i < 3; ++i) {
      GroupRingElt d = fox_derivative(w, i);
      acc += d * Word::generator(a, i) - d;
    }
    GroupRingElt expected = GroupRingElt::of_word(w) - GroupRingElt::of_word(Word(a));
    EXPECT_EQ(acc, expected);
    EXPECT_EQ(abelianize(acc), abelianize(expected));
  }
}

TEST(Fox, InverseRuleProperty) {
  // d(w^-1)/dx_i = -w^-1 dw/dx_i
  std::mt19937_64 rng(43);
  Alphabet a = Alphabet::indexed(3);
  for (int trial = 0; trial < 100; ++trial) {
    Word w = cutcert::testing::random_word(rng, a, 10);
    for (int i = 0; i < 3; ++i)
      EXPECT_EQ(fox_derivative(w.inverse(), i), -(w.inverse() * fox_derivative(w, i)));
  }
}

TEST(Fox, AbelianizeExamples) {
  Gens g;
  Word c = commutator(g.x, g.y);
  // 1 - xyx^-1 abelianizes to 1 - x2
  EXPECT_EQ(abelianize(fox_derivative(c, 0)),
            LaurentPoly::one(2) - LaurentPoly::variable(2, 1));
  // x - xyx^-1y^-1 abelianizes to x1 - 1
  EXPECT_EQ(abelianize(fox_derivative(c, 1)),
            LaurentPoly::variable(2, 0) - LaurentPoly::one(2));
  EXPECT_TRUE(abelianize(GroupRingElt(g.a)).is_zero());
}

}  // namespace
