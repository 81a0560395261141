#pragma once

// Realizability of triples (a, b, c) of determinantal-divisor chains: is
// there a pair A, B of nonsingular matrices with chains a, b and chain c for
// the product A B?

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "detdiv/error.hpp"
#include "detdiv/invariants.hpp"
#include "detdiv/smith.hpp"

namespace detdiv {

template <Ring R>
struct Triple {
  DivisorChain<R> a, b, c;

  Triple(DivisorChain<R> a_, DivisorChain<R> b_, DivisorChain<R> c_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (a.size() != b.size() || a.size() != c.size())
      throw Error(ErrorCode::DimensionMismatch, "chains of a triple must have equal length");
    if (a.size() == 0) throw Error(ErrorCode::InvalidArgument, "empty chains");
    if (a.has_zero() || b.has_zero() || c.has_zero())
      throw Error(ErrorCode::InvalidChain, "chains of nonsingular matrices have no zero divisors");
  }

  std::size_t size() const { return a.size(); }
};

enum class Outcome { NotRealizable, Realizable, Unknown };

inline std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::NotRealizable: return "NotRealizable";
    case Outcome::Realizable: return "Realizable";
    case Outcome::Unknown: return "Unknown";
  }
  return "";
}

template <Ring R>
struct Verdict {
  Outcome outcome = Outcome::Unknown;
  std::optional<int> violated;  // necessary-condition id 1..6
  std::optional<std::pair<Matrix<R>, Matrix<R>>> witness;
  std::string rationale;
};

/// Chain of a nonsingular matrix: each d_{k-1}^2 | d_k d_{k-2} (so e_k | e_{k+1}),
/// and d_n principal. Returns the id (2 or 3) of the first failing
/// divisibility, 1 for non-principal d_n, 0 when valid.
template <Ring R>
int first_chain_violation(const DivisorChain<R>& c) {
  const int n = static_cast<int>(c.size());
  if (c.has_zero()) return 2;
  if (n >= 2 && !divides(c.d(1) * c.d(1), c.d(2))) return 2;
  for (int k = 3; k <= n; ++k)
    if (!divides(c.d(k - 1) * c.d(k - 1), c.d(k) * c.d(k - 2))) return 3;
  if (!is_principal(c.d(n))) return 1;
  return 0;
}

template <Ring R>
bool check_chain(const DivisorChain<R>& c) {
  return first_chain_violation(c) == 0;
}

namespace detail {

// Lattice points of an ideal whose coordinates lie in [-radius, radius],
// in lexicographic order of (u, v).
inline std::vector<std::pair<std::int64_t, std::int64_t>> ideal_points(const QuadIdeal& x,
                                                                         std::int64_t radius) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pts;
  for (std::int64_t u = -radius; u <= radius; ++u)
    for (std::int64_t v = -radius; v <= radius; ++v)
      if (x.contains(QuadInt(Integer(static_cast<long>(u)), Integer(static_cast<long>(v)))))
        pts.emplace_back(u, v);
  return pts;
}

struct Small {
  std::int64_t a, b;
};
inline Small mul(Small x, Small y) { return {x.a * y.a - 5 * x.b * y.b, x.a * y.b + x.b * y.a}; }
inline Small sub(Small x, Small y) { return {x.a - y.a, x.b - y.b}; }
inline std::int64_t norm(Small x) { return x.a * x.a + 5 * x.b * x.b; }
inline QuadInt to_quad(Small x) {
  return {Integer(static_cast<long>(x.a)), Integer(static_cast<long>(x.b))};
}

inline QuadMatrix to_matrix(const Small (&m)[4]) {
  QuadMatrix out(2);
  out(0, 0) = to_quad(m[0]);
  out(0, 1) = to_quad(m[1]);
  out(1, 0) = to_quad(m[2]);
  out(1, 1) = to_quad(m[3]);
  return out;
}

inline constexpr std::int64_t kSearchStartRadius = 3;
inline constexpr std::int64_t kSearchMaxRadius = 48;

// 2x2 matrix over Z[sqrt(-5)] with chain (e1, e1 e2). Entries range over the
// lattice points of e1 (every entry lies in d_1); the first hit in
// lexicographic order is returned, growing the radius 3, 6, 12, 24, 48.
inline QuadMatrix search_quadratic_2x2(const QuadIdeal& e1, const QuadIdeal& e2) {
  const auto target = DivisorChain<QuadraticRing>::from_elementary({e1, e2});
  const Integer det_norm = target.d(2).norm();
  if (!det_norm.fits_slong_p())
    throw Error(ErrorCode::SearchExhausted, "target norm too large for the search");
  const std::int64_t want = det_norm.get_si();
  for (std::int64_t radius = kSearchStartRadius; radius <= kSearchMaxRadius; radius *= 2) {
    const auto pts = ideal_points(e1, radius);
    for (const auto& [a0, b0] : pts)
      for (const auto& [a1, b1] : pts)
        for (const auto& [a2, b2] : pts)
          for (const auto& [a3, b3] : pts) {
            Small m[4] = {{a0, b0}, {a1, b1}, {a2, b2}, {a3, b3}};
            if (norm(sub(mul(m[0], m[3]), mul(m[1], m[2]))) != want) continue;
            auto cand = to_matrix(m);
            if (divisor_chain(cand) == target) return cand;
          }
  }
  throw Error(ErrorCode::SearchExhausted, "no matrix found within the search radius");
}

// Unimodular 2x2 matrices with coordinates in [-radius, radius], lexicographic.
inline std::vector<QuadMatrix> small_unimodulars(std::int64_t radius) {
  std::vector<QuadMatrix> out;
  std::vector<Small> elems;
  for (std::int64_t a = -radius; a <= radius; ++a)
    for (std::int64_t b = -radius; b <= radius; ++b) elems.push_back({a, b});
  for (auto x0 : elems)
    for (auto x1 : elems)
      for (auto x2 : elems)
        for (auto x3 : elems)
          if (norm(sub(mul(x0, x3), mul(x1, x2))) == 1) {
            Small m[4] = {x0, x1, x2, x3};
            out.push_back(to_matrix(m));
          }
  return out;
}

}  // namespace detail

/// A matrix with prescribed elementary divisors. Over Z the diagonal matrix;
/// over Z[sqrt(-5)] n <= 2 by bounded search.
template <Ring R>
Matrix<R> construct_from_elementary(const std::vector<Ideal<R>>& e) {
  const auto chain = DivisorChain<R>::from_elementary(e);
  if (e.empty()) throw Error(ErrorCode::InvalidArgument, "empty chain");
  for (std::size_t k = 0; k + 1 < e.size(); ++k)
    if (!divides(e[k], e[k + 1])) throw Error(ErrorCode::InvalidChain, "e_k must divide e_{k+1}");
  if (!is_principal(chain.d(static_cast<int>(e.size()))))
    throw Error(ErrorCode::InvalidChain, "product of elementary divisors is not principal");

  if constexpr (std::same_as<R, IntegerRing>) {
    std::vector<Integer> diag;
    for (const auto& x : e) diag.push_back(x.generator());
    return IntMatrix::diagonal(diag);
  } else {
    if (e.size() == 1) {
      QuadMatrix m(1);
      m(0, 0) = *is_principal(e[0]);
      return m;
    }
    if (e.size() > 2)
      throw Error(ErrorCode::Unsupported, "construction over ZSqrt-5 is limited to n <= 2");
    // (0, 0) is a zero-ideal chain; the search needs nonzero targets
    if (e[0].is_zero() || e[1].is_zero())
      throw Error(ErrorCode::Unsupported, "construction over ZSqrt-5 needs nonzero divisors");
    return detail::search_quadratic_2x2(e[0], e[1]);
  }
}

template <Ring R>
std::vector<Ideal<R>> elementary_or_throw(const DivisorChain<R>& c) {
  if (!check_chain(c)) throw Error(ErrorCode::InvalidChain, "not the chain of a nonsingular matrix");
  return *c.elementary();
}

/// (A~, B~) with chains a, b and product chain a_k b_k.
template <Ring R>
std::pair<Matrix<R>, Matrix<R>> realize_product_equal(const DivisorChain<R>& a,
                                                      const DivisorChain<R>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "chain length mismatch");
  auto ma = construct_from_elementary(elementary_or_throw(a));
  auto mb = construct_from_elementary(elementary_or_throw(b));
  const auto target = a * b;
  if constexpr (std::same_as<R, IntegerRing>) {
    // diag(e(a)) diag(e(b)) = diag(e_k(a) e_k(b)), still a divisibility chain
    if (!(divisor_chain(ma) == a && divisor_chain(mb) == b && divisor_chain(ma * mb) == target))
      throw std::logic_error("diagonal realization failed verification");
    return {std::move(ma), std::move(mb)};
  } else {
    if (divisor_chain(ma * mb) == target) return {std::move(ma), std::move(mb)};
    // A U B for unimodular U has the right chain for some U; B~ = U B.
    for (std::int64_t radius = 1; radius <= 2; ++radius)
      for (const auto& u : detail::small_unimodulars(radius)) {
        auto ub = u * mb;
        if (divisor_chain(ma * ub) == target) return {std::move(ma), std::move(ub)};
      }
    throw Error(ErrorCode::SearchExhausted, "no unimodular twist found within the search radius");
  }
}

/// Result of the 2x2 characterization over Z: a witness, or the id (1..3) of
/// the failed condition.
struct N2Construction {
  std::optional<std::pair<IntMatrix, IntMatrix>> witness;
  int failed_condition = 0;
};

inline N2Construction realize_n2(const std::pair<IntegerIdeal, IntegerIdeal>& a,
                                  const std::pair<IntegerIdeal, IntegerIdeal>& b,
                                  const std::pair<IntegerIdeal, IntegerIdeal>& c) {
  const Integer &a1 = a.first.generator(), &a2 = a.second.generator();
  const Integer &b1 = b.first.generator(), &b2 = b.second.generator();
  const Integer &c1 = c.first.generator(), &c2 = c.second.generator();
  N2Construction out;
  for (const Integer* x : {&a1, &a2, &b1, &b2, &c1, &c2})
    if (sgn(*x) == 0) throw Error(ErrorCode::InvalidChain, "zero divisor in a 2x2 triple");

  if (!divisible(a2, a1 * a1) || !divisible(b2, b1 * b1) || !divisible(c2, c1 * c1)) {
    out.failed_condition = 1;
    return out;
  }
  if (a2 * b2 != c2) {
    out.failed_condition = 2;
    return out;
  }
  const Integer ab = a1 * b1;
  const Integer bound = ab * gcd(divexact(a2, a1 * a1), divexact(b2, b1 * b1));
  if (!divisible(c1, ab) || !divisible(bound, c1)) {
    out.failed_condition = 3;
    return out;
  }

  const Integer d = divexact(c1, ab);
  IntMatrix A{{Integer(a1 * d), a1}, {divexact(a2, a1), 0}};
  IntMatrix B{{b1, 0}, {0, divexact(b2, b1)}};

  // d_1(A) = (a1) because a1 | a2 / a1
  if (det_divisor(A, 1) != a.first) throw std::logic_error("witness A has the wrong d_1");
  const DivisorChain<IntegerRing> ca({a.first, a.second}), cb({b.first, b.second}),
      cc({c.first, c.second});
  if (!(divisor_chain(A) == ca && divisor_chain(B) == cb && divisor_chain(A * B) == cc))
    throw std::logic_error("2x2 witness failed verification");
  out.witness = std::pair{std::move(A), std::move(B)};
  return out;
}

/// Necessary conditions first (ids 1..6), then the sufficient branches.
template <Ring R>
Verdict<R> check_triple(const Triple<R>& t) {
  const int n = static_cast<int>(t.size());
  Verdict<R> v;
  auto reject = [&](int id, std::string why) {
    v.outcome = Outcome::NotRealizable;
    v.violated = id;
    v.rationale = std::move(why);
    return v;
  };

  // (1) top divisors principal
  for (const auto* ch : {&t.a, &t.b, &t.c})
    if (!is_principal(ch->d(n))) return reject(1, "top divisor is not principal");
  // (2), (3) each chain is the chain of a single matrix
  for (const auto* ch : {&t.a, &t.b, &t.c}) {
    const int id = first_chain_violation(*ch);
    if (id == 2) return reject(2, "d_1^2 does not divide d_2");
    if (id == 3) return reject(3, "d_{k-1}^2 d_{k-2}^{-1} does not divide d_k");
  }
  // (4) determinants multiply
  if (t.a.d(n) * t.b.d(n) != t.c.d(n)) return reject(4, "d_n(a) d_n(b) != d_n(c)");
  // (5) lower bound
  for (int k = 1; k < n; ++k)
    if (!divides(t.a.d(k) * t.b.d(k), t.c.d(k))) return reject(5, "d_k(a) d_k(b) does not divide d_k(c)");
  // (6) upper bound, denominators cleared
  for (int k = 1; k < n; ++k) {
    const int m = n - k;
    auto lhs = t.c.d(k) * t.a.d(m) * t.b.d(m);
    auto rhs = t.a.d(m) * t.a.d(k) * t.b.d(n) + t.b.d(m) * t.b.d(k) * t.a.d(n);
    if (!divides(lhs, rhs)) return reject(6, "d_k(c) exceeds the upper bound");
  }

  if (t.c == t.a * t.b) {
    try {
      v.witness = realize_product_equal(t.a, t.b);
      v.outcome = Outcome::Realizable;
      v.rationale = "product chain equals a_k b_k";
    } catch (const Error& err) {
      if (err.code() != ErrorCode::Unsupported && err.code() != ErrorCode::SearchExhausted) throw;
      v.outcome = Outcome::Unknown;
      v.rationale = std::string("product branch not constructible: ") + err.what();
    }
    return v;
  }

  if constexpr (std::same_as<R, IntegerRing>) {
    if (n == 2) {
      auto res = realize_n2({t.a.d(1), t.a.d(2)}, {t.b.d(1), t.b.d(2)}, {t.c.d(1), t.c.d(2)});
      if (!res.witness)  // the 2x2 conditions coincide with the necessary ones
        throw std::logic_error("2x2 characterization disagrees with the necessary conditions");
      v.outcome = Outcome::Realizable;
      v.witness = std::move(res.witness);
      v.rationale = "2x2 characterization over a principal ideal domain";
      return v;
    }
  }
  v.outcome = Outcome::Unknown;
  v.rationale = "necessary conditions hold but no sufficient criterion applies";
  return v;
}

}  // namespace detdiv
