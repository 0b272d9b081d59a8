#pragma once

#include <algorithm>
#include <optional>
#include <utility>

#include "newtoric/numbers.hpp"

namespace newtoric {

/// Dense matrix of arbitrary-precision integers, row major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<IntVec>& rows) {
    if (rows.empty()) return IntMatrix();
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_)
        throw invalid_input_error("from_rows: ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix from_columns(const std::vector<IntVec>& cols) {
    if (cols.empty()) return IntMatrix();
    IntMatrix m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != m.rows_)
        throw invalid_input_error("from_columns: ragged columns");
      for (std::size_t i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntVec row(std::size_t i) const {
    IntVec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
  }

  IntVec column(std::size_t j) const {
    IntVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw invalid_input_error("matrix product shape");
    IntMatrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if (at(i, k) == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          p.at(i, j) += at(i, k) * o.at(k, j);
      }
    return p;
  }

  IntVec apply(const IntVec& x) const {
    if (x.size() != cols_) throw invalid_input_error("matrix apply shape");
    IntVec y(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
    return y;
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

struct HermiteResult {
  IntMatrix h;  // row Hermite form
  IntMatrix u;  // unimodular, u * m == h
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Row Hermite normal form with transformation matrix. Pivots are
/// positive, entries above a pivot are reduced into [0, pivot), zero
/// rows come last.
inline HermiteResult hermite_normal_form(const IntMatrix& m) {
  HermiteResult res;
  res.h = m;
  res.u = IntMatrix::identity(m.rows());
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;
  const std::size_t rows = m.rows(), cols = m.cols();

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(h.at(a, j), h.at(b, j));
    for (std::size_t j = 0; j < rows; ++j) std::swap(u.at(a, j), u.at(b, j));
  };
  auto add_multiple = [&](std::size_t dst, std::size_t src, const Int& c) {
    if (c == 0) return;
    for (std::size_t j = 0; j < cols; ++j) h.at(dst, j) += c * h.at(src, j);
    for (std::size_t j = 0; j < rows; ++j) u.at(dst, j) += c * u.at(src, j);
  };
  auto negate_row = [&](std::size_t r) {
    for (std::size_t j = 0; j < cols; ++j) h.at(r, j) = -h.at(r, j);
    for (std::size_t j = 0; j < rows; ++j) u.at(r, j) = -u.at(r, j);
  };

  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    // gcd elimination in column j below row r
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (h.at(i, j) == 0) continue;
        if (best == rows || abs(h.at(i, j)) < abs(h.at(best, j))) best = i;
      }
      if (best == rows) break;  // column clear
      swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h.at(i, j) == 0) continue;
        Int q = h.at(i, j) / h.at(r, j);  // truncated division is fine here
        add_multiple(i, r, -q);
        if (h.at(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (h.at(r, j) == 0) continue;
    if (h.at(r, j) < 0) negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      // floor division so entries above land in [0, pivot)
      Int q = h.at(i, j) / h.at(r, j);
      if (h.at(i, j) - q * h.at(r, j) < 0) q -= 1;
      add_multiple(i, r, -q);
    }
    res.pivot_cols.push_back(j);
    ++r;
  }
  res.rank = r;
  return res;
}

inline std::size_t rank(const IntMatrix& m) { return hermite_normal_form(m).rank; }

/// Basis of the saturated lattice { u : A u = 0 }. Rows of the
/// transformation past the rank of A^T are a direct-summand basis, so
/// no further saturation step is needed.
inline std::vector<IntVec> kernel_lattice(const IntMatrix& a) {
  HermiteResult hr = hermite_normal_form(a.transpose());
  std::vector<IntVec> basis;
  for (std::size_t i = hr.rank; i < a.cols(); ++i) basis.push_back(hr.u.row(i));
  return basis;
}

/// Fraction-free (Bareiss) determinant.
inline Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw invalid_input_error("determinant: not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

/// Largest |det| over all maximal square column selections of a full
/// row rank matrix. Errors out if every maximal minor vanishes.
inline Int max_abs_minor(const IntMatrix& m) {
  const std::size_t r = m.rows(), n = m.cols();
  if (n < r) throw invalid_input_error("max_abs_minor: fewer columns than rows");
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  Int best = 0;
  while (true) {
    IntMatrix s(r, r);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i < r; ++i) s.at(i, j) = m.at(i, idx[j]);
    Int d = abs(determinant(s));
    if (d > best) best = d;
    // next combination
    std::size_t k = r;
    while (k > 0 && idx[k - 1] == n - r + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t i = k; i < r; ++i) idx[i] = idx[i - 1] + 1;
  }
  if (best == 0)
    throw invalid_input_error("max_abs_minor: all maximal minors vanish");
  return best;
}

/// Solves c * H = t over the integers for a row-echelon H (rows are a
/// lattice basis). Returns nothing when t is outside the lattice.
inline std::optional<IntVec> solve_in_row_lattice(const HermiteResult& hr,
                                                  const IntVec& t) {
  const IntMatrix& h = hr.h;
  if (t.size() != h.cols()) throw invalid_input_error("solve: length mismatch");
  IntVec rem = t;
  IntVec c(hr.rank, Int(0));
  for (std::size_t i = 0; i < hr.rank; ++i) {
    std::size_t p = hr.pivot_cols[i];
    if (rem[p] % h.at(i, p) != 0) return std::nullopt;
    c[i] = rem[p] / h.at(i, p);
    for (std::size_t j = 0; j < h.cols(); ++j) rem[j] -= c[i] * h.at(i, j);
  }
  if (!is_zero(rem)) return std::nullopt;
  return c;
}

}  // namespace newtoric
