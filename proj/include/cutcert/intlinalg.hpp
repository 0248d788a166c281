#pragma once

#include <utility>
#include <vector>

#include "cutcert/bigint.hpp"
#include "cutcert/error.hpp"

namespace cutcert {

/// Dense matrix of exact integers.
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
    if (rows < 0 || cols < 0) throw Error(Errc::invalid_argument, "negative matrix dimension");
  }

  static IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  IntMat transposed() const {
    IntMat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  friend bool operator==(const IntMat&, const IntMat&) = default;

  friend IntMat operator+(const IntMat& x, const IntMat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
      throw Error(Errc::invalid_argument, "matrix shape mismatch");
    IntMat r(x.rows_, x.cols_);
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
    return r;
  }

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

/// Exact determinant by fraction-free Bareiss elimination with row pivoting.
inline Int det(IntMat m) {
  if (m.rows() != m.cols()) throw Error(Errc::invalid_argument, "determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (m.at(r, k) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      for (int c = k; c < n; ++c) std::swap(m.at(piv, c), m.at(k, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)) / prev;
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

/// Row span of integer vectors, kept in Hermite-style echelon form. Supports
/// exact rank, membership, and lattice equality tests.
class IntLattice {
 public:
  explicit IntLattice(size_t dim) : dim_(dim) {}

  size_t dimension() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  void add(std::vector<Int> v) {
    if (v.size() != dim_) throw Error(Errc::invalid_argument, "lattice vector dimension mismatch");
    pending_.push_back(std::move(v));
    normalize();
  }

  bool contains(std::vector<Int> v) const {
    if (v.size() != dim_) throw Error(Errc::invalid_argument, "lattice vector dimension mismatch");
    reduce(v);
    for (const Int& x : v)
      if (x != 0) return false;
    return true;
  }

  bool contains_lattice(const IntLattice& other) const {
    for (const auto& r : other.rows_)
      if (!contains(r)) return false;
    return true;
  }

  friend bool operator==(const IntLattice& a, const IntLattice& b) {
    return a.contains_lattice(b) && b.contains_lattice(a);
  }

 private:
  // Echelon invariant: rows_ sorted by strictly increasing pivot column,
  // pivots positive, at most one row per pivot column.
  void normalize() {
    while (!pending_.empty()) {
      std::vector<Int> v = std::move(pending_.back());
      pending_.pop_back();
      size_t c = pivot_col(v);
      while (c < dim_) {
        auto it = find_pivot(c);
        if (it == rows_.end()) {
          if (v[c] < 0)
            for (Int& x : v) x = -x;
          insert_row(std::move(v));
          break;
        }
        std::vector<Int>& p = *it;
        Int q = v[c] / p[c];
        for (size_t k = 0; k < dim_; ++k) v[k] -= q * p[k];
        if (v[c] != 0) {
          // Euclidean remainder at the pivot column: swap roles and go on
          // reducing the larger row against the smaller one.
          std::swap(p, v);
          if (p[c] < 0)
            for (Int& x : p) x = -x;
        } else {
          c = pivot_col(v);
        }
      }
    }
  }

  void reduce(std::vector<Int>& v) const {
    for (const auto& p : rows_) {
      size_t c = pivot_col(p);
      if (v[c] == 0) continue;
      Int q = v[c] / p[c];
      // Only exact multiples can be cleared; a nonzero remainder simply stays.
      for (size_t k = 0; k < dim_; ++k) v[k] -= q * p[k];
    }
  }

  static size_t pivot_col(const std::vector<Int>& r) {
    size_t c = 0;
    while (c < r.size() && r[c] == 0) ++c;
    return c;
  }

  std::vector<std::vector<Int>>::iterator find_pivot(size_t c) {
    for (auto it = rows_.begin(); it != rows_.end(); ++it)
      if (pivot_col(*it) == c) return it;
    return rows_.end();
  }

  void insert_row(std::vector<Int> v) {
    size_t c = pivot_col(v);
    auto it = rows_.begin();
    while (it != rows_.end() && pivot_col(*it) < c) ++it;
    rows_.insert(it, std::move(v));
  }

  size_t dim_;
  std::vector<std::vector<Int>> rows_;
  std::vector<std::vector<Int>> pending_;
};

/// Basis of the right kernel {v : M v = 0} over the integers, via unimodular
/// column reduction of M applied in parallel to an identity block.
inline std::vector<std::vector<Int>> integer_kernel_basis(const IntMat& m) {
  const int r = m.rows(), g = m.cols();
  IntMat top = m;
  IntMat bot = IntMat::identity(g);
  auto col_swap = [&](int i, int j) {
    for (int k = 0; k < r; ++k) std::swap(top.at(k, i), top.at(k, j));
    for (int k = 0; k < g; ++k) std::swap(bot.at(k, i), bot.at(k, j));
  };
  auto col_axpy = [&](int dst, int src, const Int& q) {  // col[dst] -= q*col[src]
    for (int k = 0; k < r; ++k) top.at(k, dst) -= q * top.at(k, src);
    for (int k = 0; k < g; ++k) bot.at(k, dst) -= q * bot.at(k, src);
  };
  int lead = 0;
  for (int row = 0; row < r && lead < g; ++row) {
    // Clear row `row` to a single entry in column `lead` by Euclid.
    while (true) {
      int nz = -1;
      for (int c = lead; c < g; ++c)
        if (top.at(row, c) != 0) {
          if (nz < 0 ||
              abs(top.at(row, c)) < abs(top.at(row, nz)))
            nz = c;
        }
      if (nz < 0) break;  // row already zero on [lead, g)
      if (nz != lead) col_swap(nz, lead);
      bool done = true;
      for (int c = lead + 1; c < g; ++c) {
        if (top.at(row, c) == 0) continue;
        Int q = top.at(row, c) / top.at(row, lead);
        col_axpy(c, lead, q);
        if (top.at(row, c) != 0) done = false;
      }
      if (done) {
        ++lead;
        break;
      }
    }
  }
  std::vector<std::vector<Int>> basis;
  for (int c = lead; c < g; ++c) {
    std::vector<Int> v(static_cast<size_t>(g));
    for (int k = 0; k < g; ++k) v[static_cast<size_t>(k)] = bot.at(k, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cutcert
