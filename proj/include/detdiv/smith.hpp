#pragma once

// Smith normal form over Z with unimodular certificates, the equivalence
// decision for both rings, the 2n x 2n block normal form over Z, and the
// block-diagonal lemma checker.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "detdiv/error.hpp"
#include "detdiv/invariants.hpp"
#include "detdiv/matrix.hpp"

namespace detdiv {

/// P * A * Q = D with P, Q unimodular and D diagonal with a_1 | a_2 | ... | a_n >= 0.
struct SmithDecomposition {
  IntMatrix P;
  IntMatrix D;
  IntMatrix Q;

  std::vector<Integer> diagonal() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < D.size(); ++i) out.push_back(D(i, i));
    return out;
  }
};

namespace detail {

// rows (a, b) <- [s t; -y/g x/g] (a, b); determinant 1
inline void combine_rows(IntMatrix& m, std::size_t a, std::size_t b, const Integer& s,
                         const Integer& t, const Integer& u, const Integer& v) {
  for (std::size_t j = 0; j < m.size(); ++j) {
    Integer ra = s * m(a, j) + t * m(b, j);
    Integer rb = u * m(a, j) + v * m(b, j);
    m(a, j) = std::move(ra);
    m(b, j) = std::move(rb);
  }
}

inline void combine_cols(IntMatrix& m, std::size_t a, std::size_t b, const Integer& s,
                         const Integer& t, const Integer& u, const Integer& v) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    Integer ca = s * m(i, a) + t * m(i, b);
    Integer cb = u * m(i, a) + v * m(i, b);
    m(i, a) = std::move(ca);
    m(i, b) = std::move(cb);
  }
}

}  // namespace detail

inline SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t n = a.size();
  IntMatrix D = a, P = IntMatrix::identity(n), Q = IntMatrix::identity(n);

  for (std::size_t t = 0; t < n; ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < n; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (sgn(D(i, j)) != 0 && (!best || mpz_cmpabs(D(i, j).get_mpz_t(), D(best->first, best->second).get_mpz_t()) < 0))
          best = {i, j};
    if (!best) break;
    if (best->first != t) {
      D.swap_rows(t, best->first);
      P.swap_rows(t, best->first);
    }
    if (best->second != t) {
      D.swap_cols(t, best->second);
      Q.swap_cols(t, best->second);
    }

    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (sgn(D(i, t)) == 0) continue;
        if (divisible(D(i, t), D(t, t))) {
          const Integer q = divexact(D(i, t), D(t, t));
          detail::combine_rows(D, t, i, 1, 0, Integer(-q), 1);
          detail::combine_rows(P, t, i, 1, 0, Integer(-q), 1);
          continue;
        }
        auto [g, s, u] = gcdext(D(t, t), D(i, t));
        Integer x = divexact(D(t, t), g), y = divexact(D(i, t), g);
        detail::combine_rows(D, t, i, s, u, Integer(-y), x);
        detail::combine_rows(P, t, i, s, u, Integer(-y), x);
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(D(t, j)) == 0) continue;
        // plain subtraction keeps column t intact; a Bezout step here could
        // swap in a column with a pivot of the same size and loop forever
        if (divisible(D(t, j), D(t, t))) {
          const Integer q = divexact(D(t, j), D(t, t));
          detail::combine_cols(D, t, j, 1, 0, Integer(-q), 1);
          detail::combine_cols(Q, t, j, 1, 0, Integer(-q), 1);
          continue;
        }
        auto [g, s, u] = gcdext(D(t, t), D(t, j));
        Integer x = divexact(D(t, t), g), y = divexact(D(t, j), g);
        detail::combine_cols(D, t, j, s, u, Integer(-y), x);
        detail::combine_cols(Q, t, j, s, u, Integer(-y), x);
        dirty = true;
      }
      if (dirty) {
        // column steps may have refilled column t
        bool refilled = false;
        for (std::size_t i = t + 1; i < n; ++i) refilled = refilled || sgn(D(i, t)) != 0;
        if (refilled) continue;
      }
      // pivot must divide the whole trailing block
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < n && !bad_row; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!divisible(D(i, j), D(t, t))) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      detail::combine_rows(D, t, *bad_row, 1, 1, 0, 1);
      detail::combine_rows(P, t, *bad_row, 1, 1, 0, 1);
    }

    if (sgn(D(t, t)) < 0) {
      for (std::size_t j = 0; j < n; ++j) {
        D(t, j) = -D(t, j);
        P(t, j) = -P(t, j);
      }
    }
  }
  return {std::move(P), std::move(D), std::move(Q)};
}

/// Inverse of a unimodular integer matrix via the adjugate.
inline IntMatrix unimodular_inverse(const IntMatrix& m) {
  const std::size_t n = m.size();
  Integer d = det(m);
  if (abs(d) != 1) throw Error(ErrorCode::InvalidArgument, "matrix is not unimodular");
  IntMatrix inv(n);
  if (n == 1) {
    inv(0, 0) = d;
    return inv;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IndexSet rows, cols;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      Integer cof = det(m.submatrix(rows, cols));
      if ((i + j) % 2 == 1) cof = -cof;
      inv(i, j) = cof * d;  // d = +-1 so 1/d = d
    }
  return inv;
}

/// Divisor chains agree and, for nonzero matrices, column classes agree.
template <Ring R>
bool equivalent(const Matrix<R>& a, const Matrix<R>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "matrices differ in size");
  if (!(divisor_chain(a) == divisor_chain(b))) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return column_class(a) == column_class(b);
}

/// Unimodular (P, Q) with B = P A Q, assembled from the two Smith certificates.
inline std::optional<std::pair<IntMatrix, IntMatrix>> transform_certificate(const IntMatrix& a,
                                                                            const IntMatrix& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "matrices differ in size");
  auto sa = smith_normal_form(a);
  auto sb = smith_normal_form(b);
  if (!(sa.D == sb.D)) return std::nullopt;
  // Pa A Qa = D = Pb B Qb  =>  B = Pb^{-1} Pa A Qa Qb^{-1}
  IntMatrix P = unimodular_inverse(sb.P) * sa.P;
  IntMatrix Q = sa.Q * unimodular_inverse(sb.Q);
  if (!(P * a * Q == b)) throw std::logic_error("transform certificate failed verification");
  return std::pair{std::move(P), std::move(Q)};
}

/// P (A 0; 0 0) Q = blockdiag(A_1, ..., A_n) with A_k = (e_k 0; 0 0).
struct BlockNormalForm {
  std::vector<IntMatrix> blocks;
  IntMatrix P;
  IntMatrix Q;
};

inline IntMatrix pad_with_zeros(const IntMatrix& a) {
  const std::size_t n = a.size();
  IntMatrix out(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j);
  return out;
}

inline BlockNormalForm block_normal_form(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (sgn(det(a)) == 0) throw Error(ErrorCode::InvalidArgument, "block normal form needs det != 0");
  auto snf = smith_normal_form(a);

  IntMatrix P(2 * n), Q(2 * n), perm(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      P(i, j) = snf.P(i, j);
      Q(i, j) = snf.Q(i, j);
    }
  for (std::size_t i = n; i < 2 * n; ++i) P(i, i) = Q(i, i) = 1;
  // index k -> 2k, n + k -> 2k + 1
  for (std::size_t k = 0; k < n; ++k) {
    perm(2 * k, k) = 1;
    perm(2 * k + 1, n + k) = 1;
  }
  BlockNormalForm out;
  out.P = perm * P;
  out.Q = Q * perm.transpose();
  for (std::size_t k = 0; k < n; ++k) {
    IntMatrix blk(2);
    blk(0, 0) = snf.D(k, k);
    out.blocks.push_back(std::move(blk));
  }
  if (!(out.P * pad_with_zeros(a) * out.Q == block_diagonal<IntegerRing>(out.blocks)))
    throw std::logic_error("block normal form failed verification");
  return out;
}

/// Outcome of checking e_k(blockdiag) = d_1(A_k) and the column-class product rule.
template <Ring R>
struct BlockLemmaReport {
  std::vector<Ideal<R>> elementary;   // e_k of the assembled matrix
  std::vector<Ideal<R>> block_gcds;   // d_1 of each block
  std::vector<bool> elementary_match;
  IdealClass<R> assembled_class;
  IdealClass<R> product_class;
  bool class_match = false;

  bool ok() const {
    for (bool b : elementary_match)
      if (!b) return false;
    return class_match;
  }
};

template <Ring R>
BlockLemmaReport<R> verify_block_lemma(std::span<const Matrix<R>> blocks) {
  if (blocks.empty()) throw Error(ErrorCode::InvalidArgument, "no blocks given");
  BlockLemmaReport<R> rep;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const auto& b = blocks[k];
    if (b.size() != 2) throw Error(ErrorCode::DimensionMismatch, "blocks must be 2x2");
    if (rank(b) != 1) throw Error(ErrorCode::InvalidArgument, "every block must have rank 1");
    rep.block_gcds.push_back(det_divisor(b, 1));
    if (k > 0 && !divides(rep.block_gcds[k - 1], rep.block_gcds[k]))
      throw Error(ErrorCode::InvalidChain, "block gcds must form a divisibility chain");
  }
  const auto a = block_diagonal<R>(blocks);
  const int n = static_cast<int>(blocks.size());
  for (int k = 1; k <= n; ++k) {
    rep.elementary.push_back(elem_divisor(a, k));
    rep.elementary_match.push_back(rep.elementary.back() == rep.block_gcds[k - 1]);
  }
  // rank is n exactly when d_{n+1} vanishes
  rep.elementary_match.push_back(det_divisor(a, n + 1).is_zero());

  rep.assembled_class = column_class(a);
  rep.product_class = column_class(blocks[0]);
  for (std::size_t k = 1; k < blocks.size(); ++k)
    rep.product_class = rep.product_class * column_class(blocks[k]);
  rep.class_match = rep.assembled_class == rep.product_class;
  return rep;
}

}  // namespace detdiv
