#pragma once

#include <map>
#include <utility>

#include "cutcert/laurent.hpp"
#include "cutcert/word.hpp"

namespace cutcert {

/// Element of the integral group ring Z[F]. Supports just what Fox calculus
/// needs: addition, negation, multiplication by a word on either side.
class GroupRingElt {
 public:
  explicit GroupRingElt(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  static GroupRingElt of_word(const Word& w, Int coeff = 1) {
    GroupRingElt e(w.alphabet());
    if (coeff != 0) e.terms_.emplace(w, std::move(coeff));
    return e;
  }

  const Alphabet& alphabet() const { return alphabet_; }
  const std::map<Word, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const GroupRingElt& a, const GroupRingElt& b) {
    return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
  }

  GroupRingElt& operator+=(const GroupRingElt& o) {
    require_same_alphabet(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }

  GroupRingElt& operator-=(const GroupRingElt& o) {
    require_same_alphabet(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }

  friend GroupRingElt operator+(GroupRingElt a, const GroupRingElt& b) { return a += b; }
  friend GroupRingElt operator-(GroupRingElt a, const GroupRingElt& b) { return a -= b; }

  GroupRingElt operator-() const {
    GroupRingElt r(alphabet_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
  }

  friend GroupRingElt operator*(const Word& u, const GroupRingElt& e) {
    GroupRingElt r(e.alphabet_);
    for (const auto& [w, c] : e.terms_) r.add_term(u * w, c);
    return r;
  }

  friend GroupRingElt operator*(const GroupRingElt& e, const Word& u) {
    GroupRingElt r(e.alphabet_);
    for (const auto& [w, c] : e.terms_) r.add_term(w * u, c);
    return r;
  }

 private:
  void require_same_alphabet(const GroupRingElt& o) const {
    if (!(alphabet_ == o.alphabet_))
      throw Error(Errc::alphabet_mismatch, "group ring elements over different alphabets");
  }

  void add_term(const Word& w, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Alphabet alphabet_;
  std::map<Word, Int> terms_;
};

/// Free derivative d(w)/d(x_i) in Z[F]: d(x_i)/d(x_i) = 1, d(x_j)/d(x_i) = 0
/// for j != i, d(x_i^-1)/d(x_i) = -x_i^-1, and d(uv) = du + u dv.
inline GroupRingElt fox_derivative(const Word& w, int i) {
  if (i < 0 || i >= w.alphabet().size())
    throw Error(Errc::invalid_argument, "fox_derivative: generator index out of range");
  GroupRingElt d(w.alphabet());
  Word prefix(w.alphabet());
  for (size_t k = 0; k < w.size(); ++k) {
    const int g = w.gen_at(k);
    const int s = w.sign_at(k);
    Word next = prefix * Word::generator(w.alphabet(), g, s);
    if (g == i) {
      if (s > 0)
        d += GroupRingElt::of_word(prefix);
      else
        d -= GroupRingElt::of_word(next);  // -(prefix x_i^-1)
    }
    prefix = std::move(next);
  }
  return d;
}

/// Image in Z[F/F'] = Z[x_1^{+-1},...,x_m^{+-1}]: each word becomes the
/// monomial of its exponent vector.
inline LaurentPoly abelianize(const GroupRingElt& e) {
  const int m = e.alphabet().size();
  LaurentPoly p(m);
  for (const auto& [w, c] : e.terms()) {
    auto ev = w.exponent_vector();
    LaurentPoly::Exponents exps(ev.size());
    for (size_t k = 0; k < ev.size(); ++k) exps[k] = static_cast<int>(ev[k]);
    p += LaurentPoly::monomial(std::move(exps), c);
  }
  return p;
}

}  // namespace cutcert
