#pragma once

// Integral and fractional ideals of Z and Z[sqrt(-5)].
//
// Over Z an ideal is its nonnegative generator. Over Z[sqrt(-5)] an ideal is
// stored as the lower-triangular row Hermite basis
//
//     [ p  0 ]
//     [ r  s ]      p > 0, s > 0, 0 <= r < p
//
// of the lattice {u + v*sqrt(-5)} in Z^2, so structural equality is ideal
// equality. The zero ideal is p = r = s = 0.

#include <algorithm>
#include <compare>
#include <concepts>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "detdiv/error.hpp"
#include "detdiv/ring.hpp"

namespace detdiv {

template <Ring R>
class Ideal;

template <>
class Ideal<IntegerRing> {
 public:
  using RingType = IntegerRing;

  Ideal() = default;

  static Ideal zero() { return {}; }
  static Ideal unit() { return principal(1); }
  static Ideal principal(const Integer& x) {
    Ideal out;
    out.gen_ = abs(x);
    return out;
  }

  static Ideal from_generators(std::span<const Integer> elems) {
    if (elems.empty()) throw Error(ErrorCode::InvalidArgument, "ideal needs at least one generator");
    Integer g = 0;
    for (const auto& e : elems) g = detdiv::gcd(g, e);
    return principal(g);
  }

  const Integer& generator() const { return gen_; }
  bool is_zero() const { return sgn(gen_) == 0; }
  const Integer& norm() const { return gen_; }
  const Integer& content() const { return gen_; }
  Ideal conj() const { return *this; }

  bool contains(const Integer& x) const {
    if (is_zero()) return sgn(x) == 0;
    return divisible(x, gen_);
  }

  Ideal scaled(const Integer& k) const { return principal(gen_ * k); }
  Ideal divided(const Integer& k) const { return principal(divexact(gen_, k)); }

  friend Ideal operator*(const Ideal& x, const Ideal& y) { return principal(x.gen_ * y.gen_); }
  friend Ideal operator+(const Ideal& x, const Ideal& y) {
    return principal(detdiv::gcd(x.gen_, y.gen_));
  }
  friend bool operator==(const Ideal& x, const Ideal& y) { return x.gen_ == y.gen_; }
  friend std::strong_ordering operator<=>(const Ideal& x, const Ideal& y) {
    return compare(x.gen_, y.gen_);
  }

 private:
  Integer gen_{0};
};

template <>
class Ideal<QuadraticRing> {
 public:
  using RingType = QuadraticRing;

  Ideal() = default;

  static Ideal zero() { return {}; }
  static Ideal unit() { return principal(QuadInt(1)); }
  static Ideal principal(const QuadInt& x) { return from_generators(std::span(&x, 1)); }

  static Ideal from_generators(std::span<const QuadInt> elems) {
    if (elems.empty()) throw Error(ErrorCode::InvalidArgument, "ideal needs at least one generator");
    std::vector<QuadInt> lattice;
    lattice.reserve(2 * elems.size());
    for (const auto& e : elems) {
      lattice.push_back(e);
      lattice.push_back(e.times_root());
    }
    return from_lattice(lattice);
  }

  /// Hermite basis of the Z-span of `vectors`, which must already be an ideal.
  static Ideal from_lattice(std::span<const QuadInt> vectors) {
    // Fold all vectors into one with v-coordinate gcd(v_i); the leftovers
    // have v = 0 and their u-coordinates generate the first row.
    Integer pivot_u = 0, pivot_v = 0, p = 0;
    for (const auto& x : vectors) {
      if (sgn(x.b()) == 0) {
        p = detdiv::gcd(p, x.a());
        continue;
      }
      if (sgn(pivot_v) == 0) {
        pivot_u = x.a();
        pivot_v = x.b();
        continue;
      }
      auto [g, s, t] = gcdext(pivot_v, x.b());
      Integer wv = divexact(pivot_v, g), xv = divexact(x.b(), g);
      Integer residual = xv * pivot_u - wv * x.a();
      p = detdiv::gcd(p, residual);
      pivot_u = s * pivot_u + t * x.a();
      pivot_v = g;
    }
    Ideal out;
    if (sgn(pivot_v) == 0 && sgn(p) == 0) return out;
    if (sgn(pivot_v) == 0 || sgn(p) == 0)
      throw Error(ErrorCode::InvalidArgument, "lattice has rank < 2; not a nonzero ideal");
    if (sgn(pivot_v) < 0) {
      pivot_u = -pivot_u;
      pivot_v = -pivot_v;
    }
    out.p_ = p;
    out.r_ = mod_floor(pivot_u, p);
    out.s_ = pivot_v;
    return out;
  }

  /// Builds from explicit Hermite coefficients; throws unless canonical and an ideal.
  static Ideal from_hnf(const Integer& p, const Integer& r, const Integer& s) {
    if (sgn(p) == 0 && sgn(r) == 0 && sgn(s) == 0) return {};
    if (sgn(p) <= 0 || sgn(s) <= 0 || sgn(r) < 0 || r >= p)
      throw Error(ErrorCode::MalformedInput, "basis is not in canonical Hermite form");
    Ideal out;
    out.p_ = p;
    out.r_ = r;
    out.s_ = s;
    if (!out.closed_under_root())
      throw Error(ErrorCode::MalformedInput, "lattice is not closed under sqrt(-5)");
    return out;
  }

  const Integer& p() const { return p_; }
  const Integer& r() const { return r_; }
  const Integer& s() const { return s_; }

  bool is_zero() const { return sgn(p_) == 0; }
  Integer norm() const { return p_ * s_; }
  Integer content() const { return detdiv::gcd(detdiv::gcd(p_, r_), s_); }

  std::vector<QuadInt> basis() const {
    if (is_zero()) return {};
    return {QuadInt(p_, 0), QuadInt(r_, s_)};
  }

  bool contains(const QuadInt& x) const {
    if (is_zero()) return x.is_zero();
    if (!divisible(x.b(), s_)) return false;
    Integer t = divexact(x.b(), s_);
    return divisible(x.a() - t * r_, p_);
  }

  bool closed_under_root() const {
    return std::ranges::all_of(basis(), [&](const QuadInt& x) { return contains(x.times_root()); });
  }

  Ideal conj() const {
    if (is_zero()) return {};
    std::vector<QuadInt> v{QuadInt(p_, 0), QuadInt(r_, Integer(-s_))};
    return from_lattice(v);
  }

  Ideal scaled(const Integer& k) const {
    if (sgn(k) == 0) return {};
    std::vector<QuadInt> v;
    for (const auto& b : basis()) v.push_back(b * QuadInt(k));
    return from_lattice(v);
  }

  // Requires k | content().
  Ideal divided(const Integer& k) const {
    Ideal out;
    if (is_zero()) return out;
    out.p_ = divexact(p_, abs(k));
    out.r_ = divexact(r_, abs(k));
    out.s_ = divexact(s_, abs(k));
    return out;
  }

  friend Ideal operator*(const Ideal& x, const Ideal& y) {
    if (x.is_zero() || y.is_zero()) return {};
    std::vector<QuadInt> products;
    for (const auto& a : x.basis())
      for (const auto& b : y.basis()) products.push_back(a * b);
    return from_generators(products);
  }

  friend Ideal operator+(const Ideal& x, const Ideal& y) {
    std::vector<QuadInt> v = x.basis();
    for (const auto& b : y.basis()) v.push_back(b);
    return from_lattice(v);
  }

  friend bool operator==(const Ideal&, const Ideal&) = default;
  friend std::strong_ordering operator<=>(const Ideal& x, const Ideal& y) {
    if (auto c = compare(x.p_, y.p_); c != 0) return c;
    if (auto c = compare(x.r_, y.r_); c != 0) return c;
    return compare(x.s_, y.s_);
  }

 private:
  Integer p_{0};
  Integer r_{0};
  Integer s_{0};
};

using IntegerIdeal = Ideal<IntegerRing>;
using QuadIdeal = Ideal<QuadraticRing>;

/// Y is contained in X. Divisibility by the zero ideal holds only for zero.
template <Ring R>
bool divides(const Ideal<R>& x, const Ideal<R>& y) {
  if (x.is_zero()) return y.is_zero();
  if constexpr (std::same_as<R, IntegerRing>) {
    return x.contains(y.generator());
  } else {
    return std::ranges::all_of(y.basis(), [&](const QuadInt& b) { return x.contains(b); });
  }
}

template <Ring R>
Ideal<R> ideal_from_generators(std::span<const Elem<R>> elems) {
  return Ideal<R>::from_generators(elems);
}

/// A generator of X when X is principal. The zero ideal is generated by 0.
template <Ring R>
std::optional<Elem<R>> is_principal(const Ideal<R>& x) {
  if constexpr (std::same_as<R, IntegerRing>) {
    return x.generator();
  } else {
    if (x.is_zero()) return QuadInt();
    // X = c Y with Y primitive; only Y needs the norm-form search
    const Integer c = x.content();
    if (c > 1) {
      auto g = is_principal(x.divided(c));
      if (!g) return std::nullopt;
      return QuadInt(g->a() * c, g->b() * c);
    }
    // a^2 + 5 b^2 = N(X); ordered so that the result is deterministic.
    const Integer n = x.norm();
    for (Integer b = 0; 5 * b * b <= n; ++b) {
      auto a = exact_sqrt(Integer(n - 5 * b * b));
      if (!a) continue;
      for (const QuadInt& cand : {QuadInt(*a, b), QuadInt(*a, Integer(-b)),
                                 QuadInt(Integer(-*a), b), QuadInt(Integer(-*a), Integer(-b))}) {
        if (x.contains(cand) && QuadIdeal::principal(cand) == x) return cand;
      }
    }
    return std::nullopt;
  }
}

/// Ideal class: trivial over Z, one bit over Z[sqrt(-5)].
template <Ring R>
struct IdealClass {
  Ideal<R> representative;
  bool principal = true;

  friend IdealClass operator*(const IdealClass& x, const IdealClass& y) {
    // order-2 class group: the product is principal iff the bits agree
    return {x.representative * y.representative, x.principal == y.principal};
  }
  friend bool operator==(const IdealClass& x, const IdealClass& y) {
    return x.principal == y.principal;
  }
};

template <Ring R>
IdealClass<R> ideal_class(const Ideal<R>& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroIdeal, "the zero ideal has no class");
  return {x, is_principal(x).has_value()};
}

/// num / den with den a positive integer, reduced so that no integer > 1
/// divides both den and every coordinate of num.
template <Ring R>
class FracIdeal {
 public:
  FracIdeal() : FracIdeal(Ideal<R>::unit()) {}
  FracIdeal(Ideal<R> num, Integer den = 1) : num_(std::move(num)), den_(std::move(den)) {  // NOLINT
    if (sgn(den_) <= 0) throw Error(ErrorCode::InvalidArgument, "denominator must be positive");
    reduce();
  }

  const Ideal<R>& num() const { return num_; }
  const Integer& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integral() const { return den_ == 1; }

  std::optional<Ideal<R>> integral() const {
    if (!is_integral()) return std::nullopt;
    return num_;
  }

  /// (g)^{-1} = (1)/g over Z; X^{-1} = conj(X) / N(X) over Z[sqrt(-5)].
  FracIdeal inverse() const {
    if (num_.is_zero()) throw Error(ErrorCode::ZeroIdeal, "cannot invert the zero ideal");
    if constexpr (std::same_as<R, IntegerRing>)
      return FracIdeal(Ideal<R>::principal(den_), num_.generator());
    else
      return FracIdeal(num_.conj().scaled(den_), num_.norm());
  }

  friend FracIdeal operator*(const FracIdeal& x, const FracIdeal& y) {
    return FracIdeal(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend FracIdeal operator+(const FracIdeal& x, const FracIdeal& y) {
    return FracIdeal(x.num_.scaled(y.den_) + y.num_.scaled(x.den_), x.den_ * y.den_);
  }
  friend bool operator==(const FracIdeal&, const FracIdeal&) = default;

  /// Y is contained in X, i.e. Y X^{-1} is integral.
  friend bool divides(const FracIdeal& x, const FracIdeal& y) {
    if (x.is_zero()) throw Error(ErrorCode::ZeroIdeal, "divisibility by the zero fractional ideal");
    return detdiv::divides(x.num_.scaled(y.den_), y.num_.scaled(x.den_));
  }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    Integer g = detdiv::gcd(num_.content(), den_);
    if (g != 1) {
      num_ = num_.divided(g);
      den_ = divexact(den_, g);
    }
  }

  Ideal<R> num_;
  Integer den_;
};

/// X Y^{-1} when it is an integral ideal.
template <Ring R>
std::optional<Ideal<R>> exact_quotient(const Ideal<R>& x, const Ideal<R>& y) {
  if (y.is_zero()) throw Error(ErrorCode::ZeroIdeal, "quotient by the zero ideal");
  return (FracIdeal<R>(x) * FracIdeal<R>(y).inverse()).integral();
}

}  // namespace detdiv
