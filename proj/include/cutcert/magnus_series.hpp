#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cutcert/bigint.hpp"
#include "cutcert/error.hpp"
#include "cutcert/word.hpp"

namespace cutcert {

/// Truncated Magnus expansion: an element of the integral power-series ring
/// on noncommuting symbols X_1..X_m, with all terms of total degree > D
/// discarded. Group elements map in via x_i -> 1 + X_i; a word lies in the
/// k-th lower central subgroup iff its expansion is 1 plus terms of degree
/// >= k (Magnus), so truncation at D decides membership up to F_{D+1}.
class MagnusSeries {
 public:
  using Key = std::vector<uint8_t>;  // symbol indices, length = degree

  MagnusSeries(int arity, int degree) : arity_(arity), degree_(degree) {
    if (arity < 0 || degree < 1) throw Error(Errc::invalid_argument, "bad series parameters");
  }

  static MagnusSeries one(int arity, int degree) {
    MagnusSeries s(arity, degree);
    s.terms_[Key{}] = 1;
    return s;
  }

  /// Expansion of x_i^{+-1}: 1 + X_i, or the alternating geometric series.
  static MagnusSeries generator(int arity, int degree, int i, int sign = 1) {
    if (i < 0 || i >= arity) throw Error(Errc::invalid_argument, "symbol index out of range");
    MagnusSeries s = one(arity, degree);
    Key k;
    for (int d = 1; d <= degree; ++d) {
      k.push_back(static_cast<uint8_t>(i));
      if (sign > 0 && d > 1) break;
      s.terms_[k] = (sign > 0) ? 1 : ((d % 2 == 1) ? -1 : 1);
    }
    return s;
  }

  int arity() const { return arity_; }
  int degree() const { return degree_; }
  const std::map<Key, Int>& terms() const { return terms_; }

  bool is_one() const { return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1; }

  friend bool operator==(const MagnusSeries& a, const MagnusSeries& b) {
    return a.arity_ == b.arity_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  Int coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Int(0) : it->second;
  }

  friend MagnusSeries operator*(const MagnusSeries& a, const MagnusSeries& b) {
    a.require_compatible(b);
    MagnusSeries r(a.arity_, a.degree_);
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        if (ka.size() + kb.size() > static_cast<size_t>(a.degree_)) continue;
        Key k = ka;
        k.insert(k.end(), kb.begin(), kb.end());
        r.add_term(std::move(k), ca * cb);
      }
    }
    return r;
  }

  MagnusSeries& operator*=(const MagnusSeries& o) { return *this = *this * o; }

  friend MagnusSeries operator+(MagnusSeries a, const MagnusSeries& b) {
    a.require_compatible(b);
    for (const auto& [k, c] : b.terms_) a.add_term(k, c);
    return a;
  }

  friend MagnusSeries operator-(MagnusSeries a, const MagnusSeries& b) {
    a.require_compatible(b);
    for (const auto& [k, c] : b.terms_) a.add_term(k, -c);
    return a;
  }

  /// Smallest degree >= 1 carrying a nonzero term; nullopt when none.
  std::optional<int> lowest_positive_degree() const {
    std::optional<int> best;
    for (const auto& [k, c] : terms_) {
      if (k.empty()) continue;
      int d = static_cast<int>(k.size());
      if (!best || d < *best) best = d;
    }
    return best;
  }

  /// Coefficients of all terms of exactly `d`, indexed by the base-`arity`
  /// encoding of the symbol word.
  std::vector<Int> homogeneous_component(int d) const {
    size_t n = 1;
    for (int i = 0; i < d; ++i) n *= static_cast<size_t>(arity_);
    std::vector<Int> v(n, Int(0));
    for (const auto& [k, c] : terms_) {
      if (static_cast<int>(k.size()) != d) continue;
      size_t idx = 0;
      for (uint8_t s : k) idx = idx * static_cast<size_t>(arity_) + s;
      v[idx] = c;
    }
    return v;
  }

  bool vanishes_below_degree(int d) const {
    for (const auto& [k, c] : terms_)
      if (!k.empty() && static_cast<int>(k.size()) < d) return false;
    return true;
  }

  std::string to_string(const Alphabet& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      Int mag = c < 0 ? Int(-c) : c;
      if (k.empty()) {
        os << mag.str();
        continue;
      }
      if (mag != 1) os << mag.str() << "*";
      for (size_t j = 0; j < k.size(); ++j) {
        if (j) os << ".";
        os << names.name(k[j]);
      }
    }
    return os.str();
  }

 private:
  void require_compatible(const MagnusSeries& o) const {
    if (arity_ != o.arity_ || degree_ != o.degree_)
      throw Error(Errc::arity_mismatch, "series arity/degree mismatch");
  }

  void add_term(Key k, const Int& c) {
    if (c == 0 || k.size() > static_cast<size_t>(degree_)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(k), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int arity_;
  int degree_;
  std::map<Key, Int> terms_;
};

/// Magnus expansion of a word, truncated at total degree D.
inline MagnusSeries magnus_series(const Word& w, int D) {
  const int m = w.alphabet().size();
  MagnusSeries s = MagnusSeries::one(m, D);
  for (size_t k = 0; k < w.size(); ++k)
    s *= MagnusSeries::generator(m, D, w.gen_at(k), w.sign_at(k));
  return s;
}

/// Lower-central-series weight, decided by the truncated expansion.
struct LcsWeight {
  enum class Kind { Identity, Exact, AtLeast };
  Kind kind;
  int k = 0;  // Exact: the weight; AtLeast: maxK + 1

  friend bool operator==(const LcsWeight&, const LcsWeight&) = default;

  std::string str() const {
    switch (kind) {
      case Kind::Identity: return "identity";
      case Kind::Exact: return std::to_string(k);
      case Kind::AtLeast: return ">=" + std::to_string(k);
    }
    return "";
  }
};

/// Largest k <= maxK with w in F_k, or ">= maxK+1", or "identity" for the
/// trivial word.
inline LcsWeight lcs_weight(const Word& w, int maxK) {
  if (maxK < 1) throw Error(Errc::invalid_argument, "maxK must be >= 1");
  if (w.empty()) return {LcsWeight::Kind::Identity, 0};
  MagnusSeries s = magnus_series(w, maxK);
  auto d = s.lowest_positive_degree();
  if (!d) return {LcsWeight::Kind::AtLeast, maxK + 1};
  return {LcsWeight::Kind::Exact, *d};
}

}  // namespace cutcert
