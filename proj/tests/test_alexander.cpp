#include <gtest/gtest.h>

#include <random>

#include "cutcert/alexander.hpp"
#include "testutil.hpp"

using namespace cutcert;
using cutcert::testing::torus_z3_presentation;

namespace {

Presentation free_group(int g) {
  Presentation p{Alphabet::indexed(g), {}};
  return p;
}

TEST(Presentation, ParseAndDigest) {
  Presentation p = torus_z3_presentation();
  EXPECT_EQ(p.generator_count(), 3);
  ASSERT_EQ(p.relators.size(), 3u);
  Word x = Word::generator(p.gens, 0);
  Word y = Word::generator(p.gens, 1);
  EXPECT_EQ(p.relators[0], commutator(x, y));

  // canonical text round-trips, digest is stable under reparse
  Presentation q = parse_presentation_text(p.canonical_text());
  EXPECT_EQ(q.canonical_text(), p.canonical_text());
  EXPECT_EQ(q.digest(), p.digest());
}

TEST(Presentation, ParseErrors) {
  EXPECT_THROW(parse_presentation_text(""), ParseError);                    // empty file
  EXPECT_THROW(parse_presentation_text("rel [x,y]\n"), ParseError);         // rel before gens
  EXPECT_THROW(parse_presentation_text("gens x\ngens y\n"), ParseError);    // duplicate gens
  EXPECT_THROW(parse_presentation_text("gens x y\nrel [x,w]\n"), ParseError);  // unknown gen
  EXPECT_THROW(parse_presentation_text("gens x x\n"), ParseError);          // duplicate name
  // comments and empty relators are fine
  Presentation p = parse_presentation_text("# torus\ngens x\nrel\n");
  EXPECT_EQ(p.generator_count(), 1);
  ASSERT_EQ(p.relators.size(), 1u);
  EXPECT_TRUE(p.relators[0].empty());
}

TEST(Phi, Validation) {
  Presentation p = torus_z3_presentation();
  std::vector<long long> good{1, 0, 0};
  EXPECT_NO_THROW(validate_phi(p, good));

  std::vector<long long> nonprim{2, 0, 0};
  try {
    validate_phi(p, nonprim);
    FAIL() << "expected non_primitive_phi";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::non_primitive_phi);
  }

  Presentation q = parse_presentation_text("gens x y\nrel x y^-2\n");
  std::vector<long long> inconsistent{1, 0};
  try {
    validate_phi(q, inconsistent);
    FAIL() << "expected inconsistent_phi";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::inconsistent_phi);
  }
  std::vector<long long> consistent{2, 1};
  EXPECT_NO_THROW(validate_phi(q, consistent));

  std::vector<long long> shortv{1, 0};
  EXPECT_THROW(validate_phi(p, shortv), Error);
}

TEST(AlexanderMatrix, Examples) {
  // <x,y | [x,y]> has the single Fox row (1-x2, x1-1)
  Presentation p = parse_presentation_text("gens x y\nrel [x,y]\n");
  PolyMatrix m = alexander_matrix(p);
  ASSERT_EQ(m.rows(), 1);
  ASSERT_EQ(m.cols(), 2);
  EXPECT_EQ(m.at(0, 0), LaurentPoly::one(2) - LaurentPoly::variable(2, 1));
  EXPECT_EQ(m.at(0, 1), LaurentPoly::variable(2, 0) - LaurentPoly::one(2));

  // no relators -> 0 x g matrix
  PolyMatrix f = alexander_matrix(free_group(1));
  EXPECT_EQ(f.rows(), 0);
  EXPECT_EQ(f.cols(), 1);

  // Z^3: three commutator-type rows
  PolyMatrix t3 = alexander_matrix(torus_z3_presentation());
  EXPECT_EQ(t3.rows(), 3);
  EXPECT_EQ(t3.cols(), 3);
  EXPECT_EQ(t3.at(0, 0), LaurentPoly::one(3) - LaurentPoly::variable(3, 1));
}

TEST(H1Rank, Examples) {
  std::vector<long long> e1{1, 0, 0};
  EXPECT_EQ(h1_rank_of_cover(torus_z3_presentation(), e1), 0);

  std::vector<long long> f2phi{1, 0};
  EXPECT_EQ(h1_rank_of_cover(free_group(2), f2phi), 1);

  std::vector<long long> circle{1};
  EXPECT_EQ(h1_rank_of_cover(free_group(1), circle), 0);
}

TEST(H1Rank, SpecializedMatrixFromSpec) {
  // Z^3 at phi=(1,0,0) specializes to [[0,t-1,0],[0,0,0],[0,0,t-1]] up to
  // signs; rank 2.
  PolyMatrix spec = alexander_matrix(torus_z3_presentation());
  std::vector<long long> phi{1, 0, 0};
  EXPECT_EQ(rank_over_fraction_field(spec.specialize(phi)), 2);
}

TEST(H1Rank, TietzeInvariance) {
  std::mt19937_64 rng(61);
  Presentation p = torus_z3_presentation();
  std::vector<long long> phi{1, 0, 0};
  int base = h1_rank_of_cover(p, phi);
  for (int trial = 0; trial < 10; ++trial) {
    Presentation q = cutcert::testing::with_redundant_relator(p, rng);
    EXPECT_EQ(h1_rank_of_cover(q, phi), base);
    auto [r, phi2] = cutcert::testing::with_defined_generator(p, phi, rng);
    if (is_primitive_vector(phi2)) {
      EXPECT_EQ(h1_rank_of_cover(r, phi2), base);
    }
  }
}

TEST(H1Rank, PhiNegationSymmetry) {
  Presentation p = torus_z3_presentation();
  auto phis = sample_consistent_primitive_phis(p, 10, 7);
  for (const auto& phi : phis) {
    std::vector<long long> neg(phi.n);
    for (auto& x : neg) x = -x;
    EXPECT_EQ(h1_rank_of_cover(p, phi.n), h1_rank_of_cover(p, neg));
  }
}

TEST(FundamentalIdentity, HoldsForConsistentPhi) {
  std::vector<long long> e1{1, 0, 0};
  EXPECT_TRUE(fundamental_identity_check(torus_z3_presentation(), e1));

  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 20; ++trial) {
    // Random presentations on 3 generators with commutator-shaped relators
    // (so plenty of consistent phi exist).
    Alphabet a = Alphabet::indexed(3);
    Presentation p{a, {}};
    std::uniform_int_distribution<int> nrel(0, 3);
    int k = nrel(rng);
    for (int i = 0; i < k; ++i)
      p.relators.push_back(commutator(cutcert::testing::random_word(rng, a, 5),
                                      cutcert::testing::random_word(rng, a, 5)));
    for (const auto& phi : sample_consistent_primitive_phis(p, 5, 100 + trial))
      EXPECT_TRUE(fundamental_identity_check(p, phi.n));
  }
}

TEST(RankBound, SpecializedRankAtMostGMinusOne) {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 20; ++trial) {
    Alphabet a = Alphabet::indexed(3);
    Presentation p{a, {}};
    std::uniform_int_distribution<int> nrel(1, 4);
    int k = nrel(rng);
    for (int i = 0; i < k; ++i)
      p.relators.push_back(commutator(cutcert::testing::random_word(rng, a, 4),
                                      cutcert::testing::random_word(rng, a, 4)));
    for (const auto& phi : sample_consistent_primitive_phis(p, 4, 200 + trial)) {
      int rk = rank_over_fraction_field(alexander_matrix(p).specialize(phi.n));
      EXPECT_LE(rk, p.generator_count() - 1);
    }
  }
}

TEST(CorankObstruction, TorusAllRankZero) {
  Presentation p = torus_z3_presentation();
  auto phis = sample_consistent_primitive_phis(p, 20, 99);
  ASSERT_GE(phis.size(), 10u);
  RankCertificate cert = corank_obstruction(p, phis);
  EXPECT_EQ(cert.presentation_digest, p.digest());
  EXPECT_FALSE(cert.exhaustive_for_family);
  for (int r : cert.ranks) EXPECT_EQ(r, 0);
  // one conclusion per rank-zero phi, no universal claim without the flag
  EXPECT_EQ(cert.conclusions.size(), phis.size());
}

TEST(CorankObstruction, FreeGroupSilent) {
  Presentation p = free_group(2);
  std::vector<PhiMap> phis{PhiMap{{1, 0}}};
  RankCertificate cert = corank_obstruction(p, phis);
  ASSERT_EQ(cert.ranks.size(), 1u);
  EXPECT_EQ(cert.ranks[0], 1);
  EXPECT_TRUE(cert.conclusions.empty());
}

TEST(CorankObstruction, EmptySampleRejected) {
  EXPECT_THROW(corank_obstruction(torus_z3_presentation(), {}), Error);
}

TEST(PhiSampling, ProducesPrimitiveConsistentVectors) {
  Presentation p = torus_z3_presentation();
  auto phis = sample_consistent_primitive_phis(p, 20, 5);
  EXPECT_GE(phis.size(), 10u);
  for (const auto& phi : phis) EXPECT_NO_THROW(validate_phi(p, phi.n));

  // A presentation with a forced relation on phi.
  Presentation q = parse_presentation_text("gens x y\nrel x y^-1\n");
  for (const auto& phi : sample_consistent_primitive_phis(q, 10, 5)) {
    EXPECT_EQ(phi.n[0], phi.n[1]);
    EXPECT_NO_THROW(validate_phi(q, phi.n));
  }
}

}  // namespace
