#pragma once

#include <utility>
#include <vector>

#include "cutcert/intlinalg.hpp"
#include "cutcert/laurent.hpp"

namespace cutcert {

/// Dense row-major matrix of Laurent polynomials of uniform arity.
class PolyMatrix {
 public:
  PolyMatrix(int rows, int cols, int arity)
      : rows_(rows), cols_(cols), arity_(arity),
        entries_(static_cast<size_t>(rows) * static_cast<size_t>(cols), LaurentPoly(arity)) {
    if (rows < 0 || cols < 0) throw Error(Errc::invalid_argument, "negative matrix dimension");
  }

  static PolyMatrix identity(int n, int arity) {
    PolyMatrix m(n, n, arity);
    for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::one(arity);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int arity() const { return arity_; }

  LaurentPoly& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  const LaurentPoly& at(int r, int c) const {
    return entries_[static_cast<size_t>(r) * cols_ + c];
  }

  void set(int r, int c, LaurentPoly p) {
    if (p.arity() != arity_) throw Error(Errc::arity_mismatch, "entry arity mismatch");
    at(r, c) = std::move(p);
  }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

  /// Entrywise image under x_i -> t^{n_i}.
  PolyMatrix specialize(std::span<const long long> n) const {
    PolyMatrix m(rows_, cols_, 1);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c).specialize(n);
    return m;
  }

  std::vector<LaurentPoly> mul_vector(const std::vector<LaurentPoly>& v) const {
    if (static_cast<int>(v.size()) != cols_)
      throw Error(Errc::invalid_argument, "vector length != cols");
    std::vector<LaurentPoly> out(static_cast<size_t>(rows_), LaurentPoly(arity_));
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) out[static_cast<size_t>(r)] += at(r, c) * v[static_cast<size_t>(c)];
    return out;
  }

 private:
  int rows_, cols_, arity_;
  std::vector<LaurentPoly> entries_;
};

namespace detail {

// Multiply each row by the unit monomial clearing its negative exponents, so
// elimination works over the ordinary polynomial ring. Units do not change
// the rank; the determinant picks up the recorded monomial factor.
inline LaurentPoly::Exponents clear_row_units(PolyMatrix& m) {
  LaurentPoly::Exponents total(static_cast<size_t>(m.arity()), 0);
  for (int r = 0; r < m.rows(); ++r) {
    LaurentPoly::Exponents mn(static_cast<size_t>(m.arity()), 0);
    bool any = false;
    for (int c = 0; c < m.cols(); ++c) {
      if (m.at(r, c).is_zero()) continue;
      auto e = m.at(r, c).min_exponents();
      if (!any) {
        mn = e;
        any = true;
      } else {
        for (size_t k = 0; k < mn.size(); ++k) mn[k] = std::min(mn[k], e[k]);
      }
    }
    if (!any) continue;
    LaurentPoly::Exponents neg(mn);
    bool nontrivial = false;
    for (size_t k = 0; k < neg.size(); ++k) {
      neg[k] = -mn[k];
      if (mn[k] != 0) nontrivial = true;
      total[k] += mn[k];
    }
    if (nontrivial)
      for (int c = 0; c < m.cols(); ++c)
        if (!m.at(r, c).is_zero()) m.at(r, c) = m.at(r, c).shifted(neg);
  }
  return total;
}

}  // namespace detail

/// Exact determinant over Z[x_1^{+-1},...,x_k^{+-1}] by Bareiss elimination
/// (divisions are exact by the Sylvester identity). Row pivoting only; a
/// pivotless column means the determinant is zero.
inline LaurentPoly det(PolyMatrix m) {
  if (m.rows() != m.cols()) throw Error(Errc::invalid_argument, "determinant of non-square matrix");
  const int n = m.rows();
  const int arity = m.arity();
  if (n == 0) return LaurentPoly::one(arity);
  auto unit_shift = detail::clear_row_units(m);

  int sign = 1;
  LaurentPoly prev = LaurentPoly::one(arity);
  for (int k = 0; k + 1 < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (!m.at(r, k).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return LaurentPoly::zero(arity);
    if (piv != k) {
      for (int c = k; c < n; ++c) std::swap(m.at(piv, c), m.at(k, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = divide_exact(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
      m.at(i, k) = LaurentPoly::zero(arity);
    }
    prev = m.at(k, k);
  }
  LaurentPoly d = m.at(n - 1, n - 1).shifted(unit_shift);
  return sign < 0 ? -d : d;
}

/// Rank of the matrix over the fraction field Q(x_1,...,x_k), by fraction-free
/// elimination with full pivoting.
inline int rank_over_fraction_field(PolyMatrix m) {
  const int n = m.rows(), c = m.cols();
  const int arity = m.arity();
  detail::clear_row_units(m);
  LaurentPoly prev = LaurentPoly::one(arity);
  int rank = 0;
  for (int k = 0; k < std::min(n, c); ++k) {
    // Any nonzero entry will do; prefer few terms to limit growth.
    int pr = -1, pc = -1;
    size_t best = 0;
    for (int i = k; i < n; ++i)
      for (int j = k; j < c; ++j) {
        if (m.at(i, j).is_zero()) continue;
        size_t sz = m.at(i, j).term_count();
        if (pr < 0 || sz < best) {
          pr = i;
          pc = j;
          best = sz;
        }
      }
    if (pr < 0) break;
    if (pr != k)
      for (int j = 0; j < c; ++j) std::swap(m.at(pr, j), m.at(k, j));
    if (pc != k)
      for (int i = 0; i < n; ++i) std::swap(m.at(i, pc), m.at(i, k));
    ++rank;
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < c; ++j)
        m.at(i, j) = divide_exact(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
      m.at(i, k) = LaurentPoly::zero(arity);
    }
    prev = m.at(k, k);
  }
  return rank;
}

}  // namespace cutcert
