#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cutcert/bigint.hpp"
#include "cutcert/error.hpp"

namespace cutcert {

/// Laurent polynomial with exact integer coefficients in `arity` commuting
/// variables. Terms are stored sparsely, keyed by exponent vector in
/// lexicographic order, and no zero coefficient is ever stored, so equality
/// is structural equality and serialization order is deterministic.
class LaurentPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Int>;

  explicit LaurentPoly(int arity) : arity_(check_arity(arity)) {}

  static LaurentPoly zero(int arity) { return LaurentPoly(arity); }

  static LaurentPoly constant(int arity, Int c) {
    LaurentPoly p(arity);
    if (c != 0) p.terms_.emplace(Exponents(static_cast<size_t>(arity), 0), std::move(c));
    return p;
  }

  static LaurentPoly one(int arity) { return constant(arity, 1); }

  static LaurentPoly monomial(Exponents e, Int c) {
    LaurentPoly p(static_cast<int>(e.size()));
    if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
    return p;
  }

  /// x_i^power (0-based variable index).
  static LaurentPoly variable(int arity, int i, int power = 1) {
    if (i < 0 || i >= arity) throw Error(Errc::invalid_argument, "variable index out of range");
    Exponents e(static_cast<size_t>(arity), 0);
    e[static_cast<size_t>(i)] = power;
    return monomial(std::move(e), 1);
  }

  /// t^e in the univariate ring.
  static LaurentPoly t_power(int e) { return monomial({e}, 1); }

  /// t^e - 1 in the univariate ring.
  static LaurentPoly t_power_minus_one(int e) {
    return t_power(e) - one(1);
  }

  int arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && std::ranges::all_of(terms_.begin()->first,
                                                      [](int e) { return e == 0; }));
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    require_same_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& o) {
    require_same_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  LaurentPoly operator-() const {
    LaurentPoly r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.require_same_arity(b);
    LaurentPoly r(a.arity_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea);
        for (size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator*(const LaurentPoly& a, const Int& c) {
    LaurentPoly r(a.arity_);
    if (c != 0)
      for (const auto& [e, coef] : a.terms_) r.terms_.emplace(e, coef * c);
    return r;
  }

  /// Multiply by the unit monomial x^shift.
  LaurentPoly shifted(const Exponents& shift) const {
    if (shift.size() != static_cast<size_t>(arity_))
      throw Error(Errc::arity_mismatch, "shift length != arity");
    LaurentPoly r(arity_);
    for (const auto& [e, c] : terms_) {
      Exponents e2(e);
      for (size_t k = 0; k < e2.size(); ++k) e2[k] += shift[k];
      r.terms_.emplace(std::move(e2), c);
    }
    return r;
  }

  /// Ring homomorphism x_i -> t^{n_i} into the univariate ring.
  LaurentPoly specialize(std::span<const long long> n) const {
    if (n.size() != static_cast<size_t>(arity_))
      throw Error(Errc::arity_mismatch, "specialization vector length != arity");
    LaurentPoly r(1);
    for (const auto& [e, c] : terms_) {
      long long d = 0;
      for (size_t k = 0; k < e.size(); ++k) d += n[k] * e[k];
      r.add_term({static_cast<int>(d)}, c);
    }
    return r;
  }

  /// Sum of coefficients: the image under every variable -> 1.
  Int evaluate_at_one() const {
    Int v = 0;
    for (const auto& [e, c] : terms_) v += c;
    return v;
  }

  /// dp/dt evaluated at t=1 (univariate only).
  Int derivative_at_one() const {
    require_univariate();
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c * e[0];
    return s;
  }

  /// Per-variable minimum exponent over the support; zero vector when empty.
  Exponents min_exponents() const {
    Exponents m(static_cast<size_t>(arity_), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first) {
        m = e;
        first = false;
      } else {
        for (size_t k = 0; k < m.size(); ++k) m[k] = std::min(m[k], e[k]);
      }
    }
    return m;
  }

  /// Largest term in lexicographic exponent order.
  const std::pair<const Exponents, Int>& leading_term() const {
    if (terms_.empty()) throw Error(Errc::invalid_argument, "leading term of zero polynomial");
    return *terms_.rbegin();
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending lexicographic order reads naturally ("t^2 - 1").
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const Int& c = it->second;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      Int mag = c < 0 ? Int(-c) : c;
      std::string mono = monomial_string(it->first);
      if (mono.empty()) {
        os << mag.str();
      } else {
        if (mag != 1) os << mag.str() << "*";
        os << mono;
      }
    }
    return os.str();
  }

 private:
  static int check_arity(int a) {
    if (a < 0) throw Error(Errc::invalid_argument, "arity must be nonnegative");
    return a;
  }

  void require_same_arity(const LaurentPoly& o) const {
    if (arity_ != o.arity_) throw Error(Errc::arity_mismatch, "operands have different arity");
  }

  void require_univariate() const {
    if (arity_ != 1) throw Error(Errc::arity_mismatch, "operation requires arity 1");
  }

  void add_term(const Exponents& e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::string monomial_string(const Exponents& e) const {
    std::ostringstream os;
    bool any = false;
    for (size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (any) os << "*";
      any = true;
      if (arity_ == 1)
        os << "t";
      else
        os << "x" << (k + 1);
      if (e[k] != 1) os << "^" << e[k];
    }
    return any ? os.str() : std::string();
  }

  int arity_;
  TermMap terms_;
};

/// Exact quotient p/d in the Laurent ring. Throws when d does not divide p;
/// never truncates.
inline LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& d) {
  if (p.arity() != d.arity()) throw Error(Errc::arity_mismatch, "divide_exact arity mismatch");
  if (d.is_zero()) {
    if (p.is_zero()) return p;
    throw Error(Errc::inexact_division, "division by zero");
  }
  if (p.is_zero()) return p;

  // Reduce to ordinary polynomial division: strip the unit monomial factors.
  auto pm = p.min_exponents();
  auto dm = d.min_exponents();
  LaurentPoly::Exponents neg_pm(pm), neg_dm(dm), shift(pm);
  for (size_t k = 0; k < pm.size(); ++k) {
    neg_pm[k] = -pm[k];
    neg_dm[k] = -dm[k];
    shift[k] = pm[k] - dm[k];
  }
  LaurentPoly rem = p.shifted(neg_pm);
  LaurentPoly dd = d.shifted(neg_dm);
  LaurentPoly q(p.arity());

  const auto& [de, dc] = dd.leading_term();
  while (!rem.is_zero()) {
    const auto& [re, rc] = rem.leading_term();
    LaurentPoly::Exponents qe(re);
    for (size_t k = 0; k < qe.size(); ++k) {
      qe[k] -= de[k];
      if (qe[k] < 0) throw Error(Errc::inexact_division, "non-exact division");
    }
    Int qc = rc / dc;
    if (qc * dc != rc) throw Error(Errc::inexact_division, "non-exact division");
    LaurentPoly t = LaurentPoly::monomial(std::move(qe), std::move(qc));
    q += t;
    rem -= t * dd;
  }
  return q.shifted(shift);
}

/// Order of vanishing at t=1 (univariate); nullopt encodes infinity (p = 0).
inline std::optional<int> j_valuation(const LaurentPoly& p) {
  if (p.arity() != 1) throw Error(Errc::arity_mismatch, "j_valuation requires arity 1");
  if (p.is_zero()) return std::nullopt;
  LaurentPoly cur = p;
  LaurentPoly tm1 = LaurentPoly::t_power_minus_one(1);
  int v = 0;
  while (cur.evaluate_at_one() == 0) {
    cur = divide_exact(cur, tm1);
    ++v;
  }
  return v;
}

}  // namespace cutcert
