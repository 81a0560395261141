#pragma once

// Generators and independent reference computations for the test suites.
// Nothing here calls into the library's determinant or ideal code paths
// except to build inputs.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "detdiv/detdiv.hpp"

namespace detdiv::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Integer big(std::int64_t x) { return Integer(static_cast<long>(x)); }

inline QuadInt quad(std::int64_t a, std::int64_t b) { return {big(a), big(b)}; }

inline const QuadIdeal& prime_above_two() {
  static const QuadIdeal p = [] {
    std::vector<QuadInt> g{quad(2, 0), quad(1, 1)};
    return QuadIdeal::from_generators(g);
  }();
  return p;
}

inline IntMatrix random_int_matrix(Rng& rng, std::size_t n, std::int64_t bound) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = big(uniform(rng, -bound, bound));
  return m;
}

inline QuadMatrix random_quad_matrix(Rng& rng, std::size_t n, std::int64_t bound) {
  QuadMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = quad(uniform(rng, -bound, bound), uniform(rng, -bound, bound));
  return m;
}

// Product of random elementary row operations; determinant +-1 by construction.
template <Ring R>
Matrix<R> random_unimodular(Rng& rng, std::size_t n, int steps = 6) {
  auto m = Matrix<R>::identity(n);
  if (n == 1) {
    if (uniform(rng, 0, 1)) m(0, 0) = -m(0, 0);
    return m;
  }
  for (int s = 0; s < steps; ++s) {
    auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 2));
    if (j >= i) ++j;
    Elem<R> c;
    if constexpr (std::same_as<R, IntegerRing>)
      c = big(uniform(rng, -2, 2));
    else
      c = quad(uniform(rng, -1, 1), uniform(rng, -1, 1));
    for (std::size_t k = 0; k < n; ++k) m(i, k) += c * m(j, k);
    if (uniform(rng, 0, 3) == 0) m.swap_rows(i, j);
  }
  return m;
}

// Leibniz formula over all permutations: independent of elimination and
// cofactor recursion.
template <Ring R>
Elem<R> leibniz_det(const Matrix<R>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Elem<R> acc = R::zero();
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Elem<R> term = R::one();
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
    if (inversions % 2) acc = acc - term; else acc = acc + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

// Minor by row/column index lists through Leibniz.
template <Ring R>
Elem<R> leibniz_minor(const Matrix<R>& m, const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols) {
  Matrix<R> s(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
  return leibniz_det(s);
}

inline void subsets_rec(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                        std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets_rec(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<std::size_t>> brute_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets_rec(n, k, 0, cur, out);
  return out;
}

// d_k over Z as gcd of Leibniz minors.
inline std::vector<Integer> brute_int_chain(const IntMatrix& m) {
  std::vector<Integer> d;
  for (std::size_t k = 1; k <= m.size(); ++k) {
    Integer g = 0;
    for (const auto& r : brute_subsets(m.size(), k))
      for (const auto& c : brute_subsets(m.size(), k)) g = gcd(g, leibniz_minor(m, r, c));
    d.push_back(g);
  }
  return d;
}

inline IntMatrix nonsingular_int_matrix(Rng& rng, std::size_t n, std::int64_t bound) {
  while (true) {
    auto m = random_int_matrix(rng, n, bound);
    if (sgn(leibniz_det(m)) != 0) return m;
  }
}

inline QuadMatrix nonsingular_quad_matrix(Rng& rng, std::size_t n, std::int64_t bound) {
  while (true) {
    auto m = random_quad_matrix(rng, n, bound);
    if (!leibniz_det(m).is_zero()) return m;
  }
}

inline QuadIdeal random_quad_ideal(Rng& rng, std::int64_t bound = 3) {
  while (true) {
    std::vector<QuadInt> gens;
    const auto count = uniform(rng, 1, 2);
    for (int i = 0; i < count; ++i) gens.push_back(quad(uniform(rng, -bound, bound), uniform(rng, -bound, bound)));
    auto x = QuadIdeal::from_generators(gens);
    if (!x.is_zero()) return x;
  }
}

// Valid divisor chain over Z: diagonal of random e_1 | e_2 | ... | e_n.
inline DivisorChain<IntegerRing> random_int_chain(Rng& rng, std::size_t n) {
  std::vector<IntegerIdeal> e;
  Integer cur = uniform(rng, 1, 3);
  for (std::size_t k = 0; k < n; ++k) {
    e.push_back(IntegerIdeal::principal(cur));
    cur *= uniform(rng, 1, 3);
  }
  return DivisorChain<IntegerRing>::from_elementary(e);
}

}  // namespace detdiv::testing
