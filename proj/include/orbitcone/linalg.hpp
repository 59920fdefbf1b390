#pragma once

#include <optional>
#include <vector>

#include "orbitcone/vec.hpp"

namespace orbitcone {

/// Dense rational matrix, row-major.
struct QMat {
  std::size_t rows = 0, cols = 0;
  std::vector<Rational> a;

  QMat() = default;
  QMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rational(0)) {}

  Rational& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  QVec row(std::size_t i) const { return QVec(a.begin() + i * cols, a.begin() + (i + 1) * cols); }

  static QMat identity(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static QMat from_rows(const std::vector<QVec>& rows_in) {
    if (rows_in.empty()) return QMat();
    QMat m(rows_in.size(), rows_in[0].size());
    for (std::size_t i = 0; i < rows_in.size(); ++i) {
      if (rows_in[i].size() != m.cols) throw std::invalid_argument("from_rows: ragged rows");
      for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rows_in[i][j];
    }
    return m;
  }
};

inline QVec mat_vec(const QMat& m, const QVec& v) {
  if (v.size() != m.cols) throw std::invalid_argument("mat_vec: dimension mismatch");
  QVec out(m.rows, Rational(0));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out[i] += m(i, j) * v[j];
  return out;
}

inline QMat mat_mul(const QMat& A, const QMat& B) {
  if (A.cols != B.rows) throw std::invalid_argument("mat_mul: dimension mismatch");
  QMat C(A.rows, B.cols);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t k = 0; k < A.cols; ++k) {
      if (A(i, k) == 0) continue;
      for (std::size_t j = 0; j < B.cols; ++j) C(i, j) += A(i, k) * B(k, j);
    }
  return C;
}

/// In-place row echelon form; returns pivot column indices.
inline std::vector<std::size_t> row_echelon(QMat& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(QMat m) { return row_echelon(m).size(); }

inline Rational determinant(QMat m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant: not square");
  std::size_t n = m.rows;
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Rational inv = 1 / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

inline std::size_t rank_of_rows(const std::vector<QVec>& rows) {
  if (rows.empty()) return 0;
  return rank(QMat::from_rows(rows));
}

/// Basis of {x : Mx = 0}.
inline std::vector<QVec> nullspace(QMat m) {
  std::size_t n = m.cols;
  auto pivots = row_echelon(m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (std::size_t free_c = 0; free_c < n; ++free_c) {
    if (is_pivot[free_c]) continue;
    QVec v = zero_vec(n);
    v[free_c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free_c);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of Mx = b, or nullopt if inconsistent.
inline std::optional<QVec> solve(QMat m, QVec b) {
  if (b.size() != m.rows) throw std::invalid_argument("solve: dimension mismatch");
  QMat aug(m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
    aug(i, m.cols) = b[i];
  }
  auto pivots = row_echelon(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  QVec x = zero_vec(m.cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols);
  return x;
}

inline std::optional<QMat> inverse(const QMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse: not square");
  std::size_t n = m.rows;
  QMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = row_echelon(aug);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  QMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

}  // namespace orbitcone
