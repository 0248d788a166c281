#include <gtest/gtest.h>

#include <random>

#include "cutcert/jet.hpp"
#include "cutcert/laurent.hpp"
#include "testutil.hpp"

using namespace cutcert;

namespace {

LaurentPoly tp(int e) { return LaurentPoly::t_power(e); }
LaurentPoly tm1(int e) { return LaurentPoly::t_power_minus_one(e); }

TEST(Laurent, AddExamples) {
  // (t-1) + (1-t) = 0
  EXPECT_TRUE((tm1(1) + (-tm1(1))).is_zero());
  // t^-1 + t stays uncollected
  LaurentPoly p = tp(-1) + tp(1);
  EXPECT_EQ(p.term_count(), 2u);
  // (t^2-1) + (t-1) = t^2 + t - 2
  LaurentPoly q = tm1(2) + tm1(1);
  LaurentPoly expected = tp(2) + tp(1) - LaurentPoly::constant(1, 2);
  EXPECT_EQ(q, expected);
}

TEST(Laurent, AddArityMismatch) {
  EXPECT_THROW(LaurentPoly::one(1) + LaurentPoly::one(2), Error);
}

TEST(Laurent, MulExamples) {
  // (t-1)(t+1) = t^2 - 1
  EXPECT_EQ(tm1(1) * (tp(1) + LaurentPoly::one(1)), tm1(2));
  // t^-n (1 - t^n) = t^-n - 1
  for (int n : {1, 2, 5}) {
    EXPECT_EQ(tp(-n) * (-tm1(n)), tm1(-n));
  }
  // 1 * p = p
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    LaurentPoly p = cutcert::testing::random_laurent(rng, 2);
    EXPECT_EQ(LaurentPoly::one(2) * p, p);
  }
}

TEST(Laurent, RingAxiomsProperty) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 50; ++i) {
    LaurentPoly a = cutcert::testing::random_laurent(rng, 2);
    LaurentPoly b = cutcert::testing::random_laurent(rng, 2);
    LaurentPoly c = cutcert::testing::random_laurent(rng, 2);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(Laurent, SpecializeExamples) {
  // x1^2 x2 with n=(2,3) -> t^7
  LaurentPoly m = LaurentPoly::monomial({2, 1}, 1);
  std::vector<long long> n{2, 3};
  EXPECT_EQ(m.specialize(n), tp(7));
  // 1 - x2 with n=(1,0) -> 0
  LaurentPoly p = LaurentPoly::one(2) - LaurentPoly::variable(2, 1);
  std::vector<long long> n2{1, 0};
  EXPECT_TRUE(p.specialize(n2).is_zero());
  // (1-x2)(x1-1) with n=(0,1) -> 0
  LaurentPoly q = (LaurentPoly::one(2) - LaurentPoly::variable(2, 1)) *
                  (LaurentPoly::variable(2, 0) - LaurentPoly::one(2));
  std::vector<long long> n3{0, 1};
  EXPECT_TRUE(q.specialize(n3).is_zero());
  std::vector<long long> bad{1, 2, 3};
  EXPECT_THROW(q.specialize(bad), Error);
}

TEST(Laurent, SpecializeIsMultiplicativeProperty) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long long> nd(-3, 3);
  for (int i = 0; i < 50; ++i) {
    LaurentPoly p = cutcert::testing::random_laurent(rng, 3);
    LaurentPoly q = cutcert::testing::random_laurent(rng, 3);
    std::vector<long long> n{nd(rng), nd(rng), nd(rng)};
    EXPECT_EQ((p * q).specialize(n), p.specialize(n) * q.specialize(n));
  }
}

TEST(Jet, Examples) {
  for (int n : {1, 3, 7}) {
    EXPECT_EQ(jet_at_one(tm1(n)), (JetAtOne{0, n}));
    EXPECT_EQ(jet_at_one(tm1(-n)), (JetAtOne{0, -n}));
  }
  EXPECT_EQ(jet_at_one(tm1(1) * tm1(1)), (JetAtOne{0, 0}));  // (t-1)^2 in J^2
}

TEST(Jet, MultiplicativeProperty) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100; ++i) {
    LaurentPoly p = cutcert::testing::random_laurent(rng, 1);
    LaurentPoly q = cutcert::testing::random_laurent(rng, 1);
    EXPECT_EQ(jet_at_one(p * q), jet_at_one(p) * jet_at_one(q));
    EXPECT_EQ(jet_at_one(p + q), jet_at_one(p) + jet_at_one(q));
  }
}

TEST(Laurent, JValuationExamples) {
  EXPECT_EQ(j_valuation(tm1(1)), 1);
  EXPECT_EQ(j_valuation(tm1(5)), 1);
  EXPECT_EQ(j_valuation(tm1(-3)), 1);
  EXPECT_EQ(j_valuation(LaurentPoly::zero(1)), std::nullopt);
  EXPECT_EQ(j_valuation(tm1(2) * tm1(3)), 2);
  EXPECT_EQ(j_valuation(LaurentPoly::one(1)), 0);
}

TEST(Laurent, JValuationAdditiveOnProductsProperty) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 60; ++i) {
    LaurentPoly p = cutcert::testing::random_nonzero_laurent(rng, 1);
    LaurentPoly q = cutcert::testing::random_nonzero_laurent(rng, 1);
    EXPECT_EQ(*j_valuation(p * q), *j_valuation(p) + *j_valuation(q));
  }
}

TEST(Laurent, DivideExactExamples) {
  // (t^2-1)/(t-1) = t+1
  EXPECT_EQ(divide_exact(tm1(2), tm1(1)), tp(1) + LaurentPoly::one(1));
  // 0/(t-1) = 0
  EXPECT_TRUE(divide_exact(LaurentPoly::zero(1), tm1(1)).is_zero());
  // (t^-1 - 1)/(t - 1) = -t^-1
  EXPECT_EQ(divide_exact(tm1(-1), tm1(1)), -tp(-1));
  // Non-exact division is an error, never truncated.
  EXPECT_THROW(divide_exact(tp(2) + LaurentPoly::one(1), tm1(1)), Error);
  EXPECT_THROW(divide_exact(LaurentPoly::constant(1, 3), LaurentPoly::constant(1, 2)), Error);
}

TEST(Laurent, DivideExactRoundTripProperty) {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 80; ++i) {
    int arity = 1 + static_cast<int>(i % 2);
    LaurentPoly q = cutcert::testing::random_laurent(rng, arity);
    LaurentPoly d = cutcert::testing::random_nonzero_laurent(rng, arity);
    EXPECT_EQ(divide_exact(q * d, d), q);
  }
}

TEST(Laurent, HumanForm) {
  EXPECT_EQ((tm1(2)).to_string(), "t^2 - 1");
  EXPECT_EQ(LaurentPoly::zero(1).to_string(), "0");
  EXPECT_EQ((tp(1) + tp(-1)).to_string(), "t + t^-1");
  LaurentPoly multi = LaurentPoly::monomial({2, 1}, 1) - LaurentPoly::one(2);
  EXPECT_EQ(multi.to_string(), "x1^2*x2 - 1");
}

}  // namespace
