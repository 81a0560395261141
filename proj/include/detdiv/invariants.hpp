#pragma once

// Compound matrices and the divisor invariants built from them:
// determinantal divisors d_k, elementary divisors e_k, rank, column class.

#include <cstddef>
#include <optional>
#include <vector>

#include "detdiv/error.hpp"
#include "detdiv/ideal.hpp"
#include "detdiv/matrix.hpp"

namespace detdiv {

using IndexSet = std::vector<std::size_t>;

/// All k-subsets of {0, ..., n-1} in lexicographic order.
inline std::vector<IndexSet> k_subsets(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw Error(ErrorCode::InvalidArgument, "subset size out of range");
  std::vector<IndexSet> out;
  IndexSet cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

/// k-th compound: the matrix of all k x k minors, rows and columns indexed by
/// k_subsets(n, k).
template <Ring R>
Matrix<R> compound(const Matrix<R>& m, std::size_t k) {
  const auto subsets = k_subsets(m.size(), k);
  Matrix<R> out(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = 0; j < subsets.size(); ++j)
      out(i, j) = det(m.submatrix(subsets[i], subsets[j]));
  return out;
}

/// d_k(M); the unit ideal for k <= 0 and the zero ideal for k > n.
template <Ring R>
Ideal<R> det_divisor(const Matrix<R>& m, int k) {
  if (k <= 0) return Ideal<R>::unit();
  if (static_cast<std::size_t>(k) > m.size()) return Ideal<R>::zero();
  if (k == 1) return Ideal<R>::from_generators(m.entries());
  const auto c = compound(m, static_cast<std::size_t>(k));
  return Ideal<R>::from_generators(c.entries());
}

/// e_k(M) = d_k d_{k-1}^{-1}, or the zero ideal when d_k = 0.
template <Ring R>
Ideal<R> elem_divisor(const Matrix<R>& m, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "elementary divisor index must be >= 1");
  auto dk = det_divisor(m, k);
  if (dk.is_zero()) return dk;
  auto q = exact_quotient(dk, det_divisor(m, k - 1));
  if (!q) throw std::logic_error("non-integral elementary divisor");
  return *q;
}

/// Largest r with d_r(M) != 0; d_r = 0 forces d_{r+1} = 0, so scanning up is enough.
template <Ring R>
std::size_t rank(const Matrix<R>& m) {
  for (std::size_t k = 1; k <= m.size(); ++k)
    if (det_divisor(m, static_cast<int>(k)).is_zero()) return k - 1;
  return m.size();
}

/// Class of the gcd of a nonzero column of the rank-th compound. Throws if
/// two columns disagree, which would contradict the theory.
template <Ring R>
IdealClass<R> column_class(const Matrix<R>& m) {
  if (m.is_zero()) throw Error(ErrorCode::InvalidArgument, "column class of the zero matrix");
  const auto c = compound(m, rank(m));
  std::optional<IdealClass<R>> cls;
  for (std::size_t j = 0; j < c.size(); ++j) {
    std::vector<Elem<R>> col;
    bool nonzero = false;
    for (std::size_t i = 0; i < c.size(); ++i) {
      col.push_back(c(i, j));
      nonzero = nonzero || !R::is_zero(c(i, j));
    }
    if (!nonzero) continue;
    auto here = ideal_class(Ideal<R>::from_generators(col));
    if (!cls)
      cls = here;
    else if (!(*cls == here))
      throw std::logic_error("column classes of one matrix disagree");
  }
  return *cls;
}

/// Determinantal divisors [d_1, ..., d_n] of one matrix (or a prescribed list).
template <Ring R>
class DivisorChain {
 public:
  DivisorChain() = default;
  explicit DivisorChain(std::vector<Ideal<R>> d) : d_(std::move(d)) {}

  /// d_k = e_1 ... e_k.
  static DivisorChain from_elementary(const std::vector<Ideal<R>>& e) {
    std::vector<Ideal<R>> d;
    auto acc = Ideal<R>::unit();
    for (const auto& x : e) {
      acc = acc * x;
      d.push_back(acc);
    }
    return DivisorChain(std::move(d));
  }

  std::size_t size() const { return d_.size(); }
  const std::vector<Ideal<R>>& determinantal() const { return d_; }

  /// d_k with the conventions d_k = (1) for k <= 0 and d_k = 0 for k > n.
  Ideal<R> d(int k) const {
    if (k <= 0) return Ideal<R>::unit();
    if (static_cast<std::size_t>(k) > d_.size()) return Ideal<R>::zero();
    return d_[static_cast<std::size_t>(k - 1)];
  }

  /// [e_1, ..., e_n], or nothing when some d_{k-1} does not divide a nonzero d_k.
  std::optional<std::vector<Ideal<R>>> elementary() const {
    std::vector<Ideal<R>> e;
    for (int k = 1; k <= static_cast<int>(d_.size()); ++k) {
      auto dk = d(k);
      if (dk.is_zero()) {
        e.push_back(dk);
        continue;
      }
      auto prev = d(k - 1);
      if (prev.is_zero()) return std::nullopt;
      auto q = exact_quotient(dk, prev);
      if (!q) return std::nullopt;
      e.push_back(*q);
    }
    return e;
  }

  bool has_zero() const {
    for (const auto& x : d_)
      if (x.is_zero()) return true;
    return false;
  }

  friend DivisorChain operator*(const DivisorChain& x, const DivisorChain& y) {
    if (x.size() != y.size()) throw Error(ErrorCode::DimensionMismatch, "chain length mismatch");
    std::vector<Ideal<R>> d;
    for (std::size_t i = 0; i < x.size(); ++i) d.push_back(x.d_[i] * y.d_[i]);
    return DivisorChain(std::move(d));
  }

  friend bool operator==(const DivisorChain&, const DivisorChain&) = default;

 private:
  std::vector<Ideal<R>> d_;
};

template <Ring R>
DivisorChain<R> divisor_chain(const Matrix<R>& m) {
  std::vector<Ideal<R>> d;
  for (int k = 1; k <= static_cast<int>(m.size()); ++k) {
    // once a divisor vanishes all later ones do
    if (!d.empty() && d.back().is_zero())
      d.push_back(Ideal<R>::zero());
    else
      d.push_back(det_divisor(m, k));
  }
  return DivisorChain<R>(std::move(d));
}

}  // namespace detdiv
