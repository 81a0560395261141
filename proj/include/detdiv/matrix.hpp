#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "detdiv/error.hpp"
#include "detdiv/ring.hpp"

namespace detdiv {

/// Largest dimension for which determinants over Z[sqrt(-5)] are computed.
inline constexpr std::size_t kMaxQuadraticDetSize = 6;

/// Dense square matrix over a ring backend, row-major.
template <Ring R>
class Matrix {
 public:
  using RingType = R;
  using Elem = typename R::Elem;

  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, R::zero()) {}

  Matrix(std::initializer_list<std::initializer_list<Elem>> rows) : Matrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != n_) throw Error(ErrorCode::DimensionMismatch, "matrix must be square");
      std::size_t j = 0;
      for (const auto& x : row) (*this)(i, j++) = x;
      ++i;
    }
  }

  static Matrix from_rows(const std::vector<std::vector<Elem>>& rows) {
    Matrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size())
        throw Error(ErrorCode::DimensionMismatch, "matrix must be square");
      for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R::one();
    return m;
  }

  static Matrix diagonal(std::span<const Elem> diag) {
    Matrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }

  std::size_t size() const { return n_; }

  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<const Elem> entries() const { return data_; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!R::is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
    Matrix s(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
    return s;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < n_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.n_ != y.n_) throw Error(ErrorCode::DimensionMismatch, "matrix product dimension mismatch");
    Matrix out(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k) {
        const Elem& xik = x(i, k);
        if (R::is_zero(xik)) continue;
        for (std::size_t j = 0; j < x.n_; ++j) out(i, j) += xik * y(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.n_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.n_; ++j) os << (j ? ", " : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t n_ = 0;
  std::vector<Elem> data_;
};

using IntMatrix = Matrix<IntegerRing>;
using QuadMatrix = Matrix<QuadraticRing>;

template <Ring R>
Matrix<R> block_diagonal(std::span<const Matrix<R>> blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  Matrix<R> out(n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out(off + i, off + j) = b(i, j);
    off += b.size();
  }
  return out;
}

namespace detail {

// Fraction-free elimination with row pivoting; every division is exact.
inline Integer bareiss_det(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && sgn(m(piv, k)) == 0) ++piv;
      if (piv == n) return 0;
      m.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = divexact(t, prev);
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// Laplace expansion along the first row of the rows/cols still in play.
inline QuadInt laplace_det(const QuadMatrix& m, std::size_t row, std::vector<std::size_t>& cols) {
  if (cols.empty()) return QuadInt(1);
  if (cols.size() == 1) return m(row, cols[0]);
  QuadInt acc;
  for (std::size_t idx = 0; idx < cols.size(); ++idx) {
    const QuadInt& x = m(row, cols[idx]);
    if (x.is_zero()) continue;
    std::size_t c = cols[idx];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(idx));
    QuadInt minor = laplace_det(m, row + 1, cols);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(idx), c);
    if (minor.is_zero()) continue;
    if (idx % 2 == 0)
      acc += x * minor;
    else
      acc -= x * minor;
  }
  return acc;
}

}  // namespace detail

/// Exact determinant: fraction-free elimination over Z, cofactor expansion
/// over Z[sqrt(-5)] (dimension at most kMaxQuadraticDetSize).
template <Ring R>
Elem<R> det(const Matrix<R>& m) {
  if constexpr (std::same_as<R, IntegerRing>) {
    return detail::bareiss_det(m);
  } else {
    if (m.size() > kMaxQuadraticDetSize)
      throw Error(ErrorCode::DimensionCap, "determinant over ZSqrt-5 is limited to dimension 6");
    std::vector<std::size_t> cols(m.size());
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    return detail::laplace_det(m, 0, cols);
  }
}

template <Ring R>
bool is_unimodular(const Matrix<R>& m) {
  return R::is_unit(det(m));
}

}  // namespace detdiv
