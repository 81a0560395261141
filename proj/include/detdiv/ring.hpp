#pragma once

// Element arithmetic for the two coefficient rings: the rational integers and
// the quadratic order Z[sqrt(-5)]. Rings are compile-time tags so that mixing
// elements of different rings is a type error; the runtime tag only matters at
// the JSON boundary.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <tuple>

namespace detdiv {

using Integer = mpz_class;

enum class RingTag { Z, ZSqrtMinus5 };

constexpr std::string_view ring_name(RingTag tag) {
  return tag == RingTag::Z ? "Z" : "ZSqrt-5";
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
inline std::tuple<Integer, Integer, Integer> gcdext(const Integer& a, const Integer& b) {
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return {g, s, t};
}

inline Integer divexact(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool divisible(const Integer& a, const Integer& b) {
  return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

// Nonnegative remainder for b > 0.
inline Integer mod_floor(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline std::optional<Integer> exact_sqrt(const Integer& n) {
  if (sgn(n) < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline std::strong_ordering compare(const Integer& a, const Integer& b) {
  int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

/// An element a + b*sqrt(-5) of Z[sqrt(-5)].
class QuadInt {
 public:
  QuadInt() = default;
  QuadInt(long a) : a_(a), b_(0) {}  // NOLINT(google-explicit-constructor)
  QuadInt(Integer a, Integer b = 0) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  Integer norm() const { return Integer(a_ * a_ + 5 * b_ * b_); }
  QuadInt conj() const { return {a_, Integer(-b_)}; }

  // sqrt(-5) * x
  QuadInt times_root() const { return {Integer(-5 * b_), a_}; }

  QuadInt operator-() const { return {Integer(-a_), Integer(-b_)}; }

  QuadInt& operator+=(const QuadInt& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QuadInt& operator-=(const QuadInt& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QuadInt& operator*=(const QuadInt& o) {
    Integer a = a_ * o.a_ - 5 * b_ * o.b_;
    Integer b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }

  friend QuadInt operator+(QuadInt x, const QuadInt& y) { return x += y; }
  friend QuadInt operator-(QuadInt x, const QuadInt& y) { return x -= y; }
  friend QuadInt operator*(QuadInt x, const QuadInt& y) { return x *= y; }

  friend bool operator==(const QuadInt& x, const QuadInt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const QuadInt& x, const QuadInt& y) {
    if (auto c = compare(x.a_, y.a_); c != 0) return c;
    return compare(x.b_, y.b_);
  }

  /// Exact quotient x / y when it lies in Z[sqrt(-5)].
  friend std::optional<QuadInt> exact_divide(const QuadInt& x, const QuadInt& y) {
    if (y.is_zero()) return std::nullopt;
    QuadInt t = x * y.conj();
    Integer n = y.norm();
    if (!divisible(t.a_, n) || !divisible(t.b_, n)) return std::nullopt;
    return QuadInt(divexact(t.a_, n), divexact(t.b_, n));
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadInt& x) {
    return os << x.a_ << (sgn(x.b_) < 0 ? "" : "+") << x.b_ << "*r";
  }

 private:
  Integer a_{0};
  Integer b_{0};
};

/// The rational integers.
struct IntegerRing {
  using Elem = Integer;
  static constexpr RingTag tag = RingTag::Z;

  static Elem zero() { return 0; }
  static Elem one() { return 1; }
  static bool is_zero(const Elem& x) { return sgn(x) == 0; }
  static bool is_unit(const Elem& x) { return abs(x) == 1; }
  static Integer norm(const Elem& x) { return abs(x); }
  static Elem from_coords(const Integer& a, const Integer& /*b*/) { return a; }
};

/// The quadratic order Z[sqrt(-5)], class number 2.
struct QuadraticRing {
  using Elem = QuadInt;
  static constexpr RingTag tag = RingTag::ZSqrtMinus5;

  static Elem zero() { return {}; }
  static Elem one() { return {1}; }
  static bool is_zero(const Elem& x) { return x.is_zero(); }
  // norm 1 forces b = 0, a = +-1
  static bool is_unit(const Elem& x) { return x.norm() == 1; }
  static Integer norm(const Elem& x) { return x.norm(); }
  static Elem from_coords(const Integer& a, const Integer& b) { return {a, b}; }
};

template <class R>
concept Ring = std::same_as<R, IntegerRing> || std::same_as<R, QuadraticRing>;

template <Ring R>
using Elem = typename R::Elem;

}  // namespace detdiv
