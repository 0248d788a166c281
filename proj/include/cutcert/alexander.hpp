#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "cutcert/group_ring.hpp"
#include "cutcert/intlinalg.hpp"
#include "cutcert/poly_matrix.hpp"
#include "cutcert/presentation.hpp"

namespace cutcert {

/// Fox matrix of a presentation: entry (r, i) is the abelianized free
/// derivative of relator r by generator i, in Z[x_1^{+-1},...,x_g^{+-1}].
inline PolyMatrix alexander_matrix(const Presentation& p) {
  const int g = p.generator_count();
  const int r = static_cast<int>(p.relators.size());
  PolyMatrix m(r, g, g);
  for (int row = 0; row < r; ++row)
    for (int i = 0; i < g; ++i)
      m.set(row, i, abelianize(fox_derivative(p.relators[static_cast<size_t>(row)], i)));
  return m;
}

/// Rank over Z[t^{+-1}] of H_1 of the infinite cyclic cover attached to phi:
/// (g - 1) - rank_{Q(t)} of the Fox matrix specialized along x_i -> t^{n_i}.
/// The g-1 offset is the Crowell-sequence contribution of the covered
/// basepoint fiber; the convention is fixed here so every consumer agrees.
inline int h1_rank_of_cover(const Presentation& p, std::span<const long long> phi) {
  validate_phi(p, phi);
  const int g = p.generator_count();
  int rk = rank_over_fraction_field(alexander_matrix(p).specialize(phi));
  if (rk > g - 1)
    throw Error(Errc::check_failed,
                "specialized Fox matrix rank exceeds g-1; fundamental identity violated");
  return (g - 1) - rk;
}

/// Structural oracle: the specialized Fox matrix annihilates the column
/// vector (t^{n_i} - 1)_i. Must hold for every consistent character.
inline bool fundamental_identity_check(const Presentation& p, std::span<const long long> phi) {
  if (phi.size() != static_cast<size_t>(p.generator_count()))
    throw Error(Errc::invalid_argument, "phi length != generator count");
  if (!phi_consistent(p, phi))
    throw Error(Errc::inconsistent_phi, "phi does not vanish on all relators");
  PolyMatrix spec = alexander_matrix(p).specialize(phi);
  std::vector<LaurentPoly> col;
  col.reserve(phi.size());
  for (long long ni : phi) col.push_back(LaurentPoly::t_power_minus_one(static_cast<int>(ni)));
  for (const auto& entry : spec.mul_vector(col))
    if (!entry.is_zero()) return false;
  return true;
}

struct RankConclusion {
  std::string statement;
  std::string cites;  // named fact the conclusion rests on (see README)

  friend bool operator==(const RankConclusion&, const RankConclusion&) = default;
};

/// Verdict object for a batch of characters: the computed ranks and the
/// corank conclusions they license. Conclusions are only recorded when their
/// hypotheses hold among the recorded facts.
struct RankCertificate {
  uint64_t presentation_digest = 0;
  std::vector<PhiMap> phis;
  std::vector<int> ranks;
  bool exhaustive_for_family = false;
  std::vector<RankConclusion> conclusions;
};

/// For each phi of Alexander rank zero, the relative cut number is 1; a
/// rank-zero verdict for *all* primitive phi rules out epimorphisms onto the
/// rank-2 free metabelian group and forces cut number 1. The universal
/// statements are recorded only when the sample is flagged exhaustive for
/// the family under test.
inline RankCertificate corank_obstruction(const Presentation& p, const std::vector<PhiMap>& phis,
                                          bool exhaustive_for_family = false) {
  if (phis.empty()) throw Error(Errc::invalid_argument, "corank_obstruction: empty phi sample");
  RankCertificate cert;
  cert.presentation_digest = p.digest();
  cert.exhaustive_for_family = exhaustive_for_family;
  bool all_zero = true;
  for (const auto& phi : phis) {
    int rk = h1_rank_of_cover(p, phi.n);
    cert.phis.push_back(phi);
    cert.ranks.push_back(rk);
    if (rk == 0) {
      cert.conclusions.push_back(
          {"c(X, phi=" + phi.str() + ") = 1", "relative-rank-bound"});
    } else {
      all_zero = false;
    }
  }
  if (all_zero && exhaustive_for_family) {
    cert.conclusions.push_back(
        {"no epimorphism of pi_1(X) onto the free metabelian group of rank 2",
         "metabelian-quotient-bound"});
    cert.conclusions.push_back(
        {"c(X) = 1, granted rank 0 holds for all primitive phi (certified for this family)",
         "relative-rank-bound"});
  }
  return cert;
}

/// Seeded sample of primitive characters consistent with the presentation,
/// drawn from the integer kernel of the abelianized relator matrix.
inline std::vector<PhiMap> sample_consistent_primitive_phis(const Presentation& p, int count,
                                                            uint64_t seed) {
  const int g = p.generator_count();
  IntMat rel(static_cast<int>(p.relators.size()), g);
  for (int r = 0; r < rel.rows(); ++r) {
    auto ev = p.relators[static_cast<size_t>(r)].exponent_vector();
    for (int c = 0; c < g; ++c) rel.at(r, c) = ev[static_cast<size_t>(c)];
  }
  auto kernel = integer_kernel_basis(rel);
  std::vector<PhiMap> out;
  if (kernel.empty()) return out;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::set<std::vector<long long>> seen;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count && attempts < count * 200) {
    ++attempts;
    std::vector<long long> v(static_cast<size_t>(g), 0);
    for (const auto& b : kernel) {
      int c = coeff(rng);
      if (c == 0) continue;
      for (size_t k = 0; k < v.size(); ++k)
        v[k] += c * static_cast<long long>(b[k]);
    }
    long long gcd = gcd_of(v);
    if (gcd == 0) continue;
    for (auto& x : v) x /= gcd;
    if (seen.insert(v).second) out.push_back(PhiMap{std::move(v)});
  }
  return out;
}

}  // namespace cutcert
