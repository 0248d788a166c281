#include <gtest/gtest.h>

#include <random>

#include "cutcert/magnus.hpp"
#include "cutcert/magnus_series.hpp"
#include "testutil.hpp"

using namespace cutcert;

namespace {

struct Gens {
  Alphabet a = Alphabet(std::vector<std::string>{"x", "y", "z"});
  Word x = Word::generator(a, 0);
  Word y = Word::generator(a, 1);
  Word z = Word::generator(a, 2);
};

TEST(MagnusImage, GeneratorAndCommutator) {
  Alphabet a2 = Alphabet::indexed(2);
  Word x = Word::generator(a2, 0);
  Word y = Word::generator(a2, 1);

  MetabelianImage ix = magnus_image(x);
  EXPECT_EQ(ix.abelianization, (std::vector<long long>{1, 0}));
  EXPECT_EQ(ix.derivatives[0], LaurentPoly::one(2));
  EXPECT_TRUE(ix.derivatives[1].is_zero());

  // [x,y] -> (0, (1-x2, x1-1))
  MetabelianImage ic = magnus_image(commutator(x, y));
  EXPECT_EQ(ic.abelianization, (std::vector<long long>{0, 0}));
  EXPECT_EQ(ic.derivatives[0], LaurentPoly::one(2) - LaurentPoly::variable(2, 1));
  EXPECT_EQ(ic.derivatives[1], LaurentPoly::variable(2, 0) - LaurentPoly::one(2));
}

TEST(MagnusImage, MatchesAbelianizedFoxDerivatives) {
  std::mt19937_64 rng(51);
  Alphabet a = Alphabet::indexed(3);
  for (int trial = 0; trial < 60; ++trial) {
    Word w = cutcert::testing::random_word(rng, a, 10);
    MetabelianImage img = magnus_image(w);
    EXPECT_EQ(img.abelianization, w.exponent_vector());
    for (int i = 0; i < 3; ++i)
      EXPECT_EQ(img.derivatives[static_cast<size_t>(i)], abelianize(fox_derivative(w, i)));
  }
}

TEST(MagnusImage, MultiplicativityInvariant) {
  // image(uv) = (a_u + a_v, d_u + x^{a_u} d_v)
  std::mt19937_64 rng(56);
  Alphabet a = Alphabet::indexed(3);
  for (int trial = 0; trial < 60; ++trial) {
    Word u = cutcert::testing::random_word(rng, a, 10);
    Word v = cutcert::testing::random_word(rng, a, 10);
    MetabelianImage iu = magnus_image(u);
    MetabelianImage iv = magnus_image(v);
    MetabelianImage iuv = magnus_image(u * v);
    LaurentPoly::Exponents shift(3);
    for (size_t k = 0; k < 3; ++k) {
      EXPECT_EQ(iuv.abelianization[k], iu.abelianization[k] + iv.abelianization[k]);
      shift[k] = static_cast<int>(iu.abelianization[k]);
    }
    for (size_t i = 0; i < 3; ++i)
      EXPECT_EQ(iuv.derivatives[i], iu.derivatives[i] + iv.derivatives[i].shifted(shift));
  }
}

TEST(MagnusImage, FundamentalIdentityProperty) {
  std::mt19937_64 rng(52);
  Alphabet a = Alphabet::indexed(3);
  for (int trial = 0; trial < 100; ++trial) {
    Word w = cutcert::testing::random_word(rng, a, 12);
    EXPECT_TRUE(magnus_image(w).fundamental_identity_residue().is_zero());
  }
}

TEST(MagnusImage, KernelIsSecondDerived) {
  Gens g;
  // Commutators of F' elements lie in F'' and map trivially.
  EXPECT_TRUE(in_second_derived(
      commutator(commutator(g.x, g.y), commutator(g.x, g.y))));
  EXPECT_TRUE(in_second_derived(
      commutator(commutator(g.x, g.y), commutator(g.x, g.z))));
  // [x,y] and [[x,y],z] are not in F''.
  EXPECT_FALSE(in_second_derived(commutator(g.x, g.y)));
  EXPECT_FALSE(in_second_derived(commutator(commutator(g.x, g.y), g.z)));

  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    Word w = cutcert::testing::random_second_derived_word(rng, g.a);
    EXPECT_TRUE(in_second_derived(w));
  }
}

TEST(MagnusImage, EqualModSecondDerived) {
  Gens g;
  Word u = commutator(g.x, g.y);
  EXPECT_TRUE(equal_mod_second_derived(u, u));
  EXPECT_FALSE(equal_mod_second_derived(u, Word(g.a)));
  // mu_ij reduction with trivial conjugator: [x, v y v^-1] = [x,[v,y]][x,y]
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 30; ++trial) {
    Word v = cutcert::testing::random_commutator_subgroup_word(rng, g.a);
    Word lhs = commutator(g.x, v * g.y * v.inverse());
    Word rhs = commutator(g.x, commutator(v, g.y)) * commutator(g.x, g.y);
    EXPECT_TRUE(equal_mod_second_derived(lhs, rhs));
  }
}

TEST(MagnusSeries, Examples) {
  Alphabet a2 = Alphabet::indexed(2);
  Word x = Word::generator(a2, 0);
  Word y = Word::generator(a2, 1);

  // x at D=2 -> 1 + X
  MagnusSeries sx = magnus_series(x, 2);
  EXPECT_EQ(sx.coefficient({}), 1);
  EXPECT_EQ(sx.coefficient({0}), 1);
  EXPECT_EQ(sx.coefficient({0, 0}), 0);

  // x^-1 at D=2 -> 1 - X + X^2
  MagnusSeries sxi = magnus_series(x.inverse(), 2);
  EXPECT_EQ(sxi.coefficient({0}), -1);
  EXPECT_EQ(sxi.coefficient({0, 0}), 1);
  EXPECT_TRUE((sx * sxi).is_one());

  // [x,y] at D=2 -> 1 + XY - YX
  MagnusSeries sc = magnus_series(commutator(x, y), 2);
  EXPECT_EQ(sc.coefficient({}), 1);
  EXPECT_EQ(sc.coefficient({0}), 0);
  EXPECT_EQ(sc.coefficient({1}), 0);
  EXPECT_EQ(sc.coefficient({0, 1}), 1);
  EXPECT_EQ(sc.coefficient({1, 0}), -1);
  EXPECT_EQ(sc.coefficient({0, 0}), 0);
}

TEST(MagnusSeries, MultiplicativeProperty) {
  std::mt19937_64 rng(55);
  Alphabet a = Alphabet::indexed(2);
  for (int trial = 0; trial < 60; ++trial) {
    Word u = cutcert::testing::random_word(rng, a, 8);
    Word v = cutcert::testing::random_word(rng, a, 8);
    EXPECT_EQ(magnus_series(u * v, 3), magnus_series(u, 3) * magnus_series(v, 3));
  }
}

TEST(LcsWeightOp, Examples) {
  Alphabet a2 = Alphabet::indexed(2);
  Word x = Word::generator(a2, 0);
  Word y = Word::generator(a2, 1);

  EXPECT_EQ(lcs_weight(x, 5), (LcsWeight{LcsWeight::Kind::Exact, 1}));
  EXPECT_EQ(lcs_weight(commutator(x, y), 5), (LcsWeight{LcsWeight::Kind::Exact, 2}));
  Word c4 = commutator(x, commutator(x, commutator(x, y)));
  EXPECT_EQ(lcs_weight(c4, 5), (LcsWeight{LcsWeight::Kind::Exact, 4}));
  EXPECT_EQ(lcs_weight(c4, 3), (LcsWeight{LcsWeight::Kind::AtLeast, 4}));
  EXPECT_EQ(lcs_weight(Word(a2), 3), (LcsWeight{LcsWeight::Kind::Identity, 0}));
  EXPECT_EQ(lcs_weight(c4, 3).str(), ">=4");
}

TEST(LcsWeightOp, BasicCommutatorsDistinctGenerators) {
  // weight([x_{i1},[x_{i2},...]]) = w for w <= 5 with distinct generators
  for (int w = 1; w <= 5; ++w) {
    Alphabet a = Alphabet::indexed(5);
    Word nested = Word::generator(a, w - 1);
    for (int i = w - 2; i >= 0; --i) nested = commutator(Word::generator(a, i), nested);
    EXPECT_EQ(lcs_weight(nested, 5), (LcsWeight{LcsWeight::Kind::Exact, w}));
  }
}

}  // namespace
