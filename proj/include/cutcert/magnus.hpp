#pragma once

#include <vector>

#include "cutcert/laurent.hpp"
#include "cutcert/word.hpp"

namespace cutcert {

/// Image of a word under the Magnus embedding of F/F'': the abelianization
/// vector together with the abelianized Fox-derivative vector. The kernel of
/// w -> image(w) is exactly F'', so comparing images decides equality in the
/// free metabelian quotient.
struct MetabelianImage {
  std::vector<long long> abelianization;  // length m
  std::vector<LaurentPoly> derivatives;   // m entries of arity m

  friend bool operator==(const MetabelianImage&, const MetabelianImage&) = default;

  bool is_trivial() const {
    for (long long a : abelianization)
      if (a != 0) return false;
    for (const auto& d : derivatives)
      if (!d.is_zero()) return false;
    return true;
  }

  /// Residue of the defining identity sum_i d_i (x_i - 1) - (x^alpha - 1);
  /// zero for every genuine image.
  LaurentPoly fundamental_identity_residue() const {
    const int m = static_cast<int>(derivatives.size());
    LaurentPoly acc(m);
    for (int i = 0; i < m; ++i)
      acc += derivatives[static_cast<size_t>(i)] *
             (LaurentPoly::variable(m, i) - LaurentPoly::one(m));
    LaurentPoly::Exponents e(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) e[static_cast<size_t>(i)] = static_cast<int>(abelianization[static_cast<size_t>(i)]);
    acc -= LaurentPoly::monomial(std::move(e), 1) - LaurentPoly::one(m);
    return acc;
  }
};

inline MetabelianImage magnus_image(const Word& w) {
  const int m = w.alphabet().size();
  MetabelianImage img{std::vector<long long>(static_cast<size_t>(m), 0),
                      std::vector<LaurentPoly>(static_cast<size_t>(m), LaurentPoly(m))};
  std::vector<int> alpha(static_cast<size_t>(m), 0);
  auto monomial_at = [&]() {
    LaurentPoly::Exponents e(alpha.begin(), alpha.end());
    return LaurentPoly::monomial(std::move(e), 1);
  };
  for (size_t k = 0; k < w.size(); ++k) {
    const size_t g = static_cast<size_t>(w.gen_at(k));
    if (w.sign_at(k) > 0) {
      img.derivatives[g] += monomial_at();
      alpha[g] += 1;
    } else {
      alpha[g] -= 1;
      img.derivatives[g] -= monomial_at();
    }
  }
  for (size_t i = 0; i < alpha.size(); ++i) img.abelianization[i] = alpha[i];
  return img;
}

/// Decides u = v in F/F''.
inline bool equal_mod_second_derived(const Word& u, const Word& v) {
  if (!(u.alphabet() == v.alphabet()))
    throw Error(Errc::alphabet_mismatch, "words over different alphabets");
  return magnus_image(u) == magnus_image(v);
}

inline bool in_second_derived(const Word& w) { return magnus_image(w).is_trivial(); }

}  // namespace cutcert
