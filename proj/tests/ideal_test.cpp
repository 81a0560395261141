#include <gtest/gtest.h>

#include <algorithm>

#include "detdiv/ideal.hpp"
#include "test_support.hpp"

namespace detdiv {
namespace {

using testing::big;
using testing::prime_above_two;
using testing::quad;

QuadIdeal quad_principal(std::int64_t a, std::int64_t b) { return QuadIdeal::principal(quad(a, b)); }

void expect_hnf(const QuadIdeal& x, long p, long r, long s) {
  EXPECT_EQ(x.p(), p);
  EXPECT_EQ(x.r(), r);
  EXPECT_EQ(x.s(), s);
}

TEST(IntegerIdeal, FromGenerators) {
  std::vector<Integer> g{4, 6};
  EXPECT_EQ(IntegerIdeal::from_generators(g).generator(), 2);
  std::vector<Integer> z{0, 0};
  EXPECT_TRUE(IntegerIdeal::from_generators(z).is_zero());
  std::vector<Integer> none;
  EXPECT_THROW(IntegerIdeal::from_generators(none), Error);
  EXPECT_EQ(IntegerIdeal::principal(-5).generator(), 5);
}

TEST(IntegerIdeal, Arithmetic) {
  auto i = [](long x) { return IntegerIdeal::principal(x); };
  EXPECT_EQ(i(2) * i(3), i(6));
  EXPECT_EQ(i(4) + i(6), i(2));
  EXPECT_EQ(i(7) + IntegerIdeal::zero(), i(7));
  EXPECT_TRUE(divides(i(2), i(6)));
  EXPECT_FALSE(divides(i(4), i(6)));
  EXPECT_TRUE(divides(IntegerIdeal::zero(), IntegerIdeal::zero()));
  EXPECT_FALSE(divides(IntegerIdeal::zero(), i(3)));
  EXPECT_TRUE(divides(i(3), IntegerIdeal::zero()));
  EXPECT_EQ(is_principal(i(6)), Integer(6));
  EXPECT_TRUE(ideal_class(i(6)).principal);
}

TEST(QuadIdeal, PrimeAboveTwoHermiteBasis) {
  expect_hnf(prime_above_two(), 2, 1, 1);
  EXPECT_EQ(prime_above_two().norm(), 2);
  // the four lattice generators {2, 2r, 1+r, -5+r} directly
  std::vector<QuadInt> raw{quad(2, 0), quad(0, 2), quad(1, 1), quad(-5, 1)};
  EXPECT_EQ(QuadIdeal::from_lattice(raw), prime_above_two());
}

TEST(QuadIdeal, ZeroIdeal) {
  std::vector<QuadInt> z{QuadInt(), QuadInt()};
  EXPECT_TRUE(QuadIdeal::from_generators(z).is_zero());
  EXPECT_EQ(is_principal(QuadIdeal::zero()), QuadInt());
  EXPECT_THROW(ideal_class(QuadIdeal::zero()), Error);
}

TEST(QuadIdeal, Products) {
  const auto& p = prime_above_two();
  auto p2 = p * p;
  EXPECT_EQ(p2, quad_principal(2, 0));
  expect_hnf(p2, 2, 0, 2);
  EXPECT_EQ(p * QuadIdeal::unit(), p);
  EXPECT_EQ(quad_principal(2, 0) * quad_principal(3, 0), quad_principal(6, 0));
  expect_hnf(p2 * p, 4, 2, 2);  // sympy reference
  EXPECT_TRUE((p * QuadIdeal::zero()).is_zero());
}

TEST(QuadIdeal, Sums) {
  EXPECT_EQ(quad_principal(2, 0) + quad_principal(1, 1), prime_above_two());
  EXPECT_EQ(prime_above_two() + QuadIdeal::zero(), prime_above_two());
}

TEST(QuadIdeal, Divisibility) {
  EXPECT_TRUE(divides(prime_above_two(), quad_principal(2, 0)));
  EXPECT_TRUE(divides(prime_above_two(), quad_principal(1, 1)));
  EXPECT_FALSE(divides(prime_above_two(), quad_principal(3, 0)));
  EXPECT_FALSE(divides(quad_principal(2, 0), prime_above_two()));
}

TEST(QuadIdeal, Principality) {
  EXPECT_FALSE(is_principal(prime_above_two()).has_value());
  auto g = is_principal(prime_above_two() * prime_above_two());
  ASSERT_TRUE(g.has_value());
  EXPECT_EQ(*g, quad(2, 0));
  auto h = is_principal(quad_principal(1, 1));
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(QuadIdeal::principal(*h), quad_principal(1, 1));
}

TEST(QuadIdeal, Classes) {
  EXPECT_TRUE(ideal_class(quad_principal(3, -2)).principal);
  EXPECT_FALSE(ideal_class(prime_above_two()).principal);
  EXPECT_TRUE(ideal_class(prime_above_two() * prime_above_two()).principal);
  EXPECT_FALSE(ideal_class(prime_above_two() * prime_above_two() * prime_above_two()).principal);
}

TEST(QuadIdeal, FromHnfValidates) {
  EXPECT_EQ(QuadIdeal::from_hnf(2, 1, 1), prime_above_two());
  EXPECT_THROW(QuadIdeal::from_hnf(2, 0, 1), Error);  // {2, r} is not closed under r
  EXPECT_THROW(QuadIdeal::from_hnf(2, 3, 1), Error);  // r not reduced
  EXPECT_TRUE(QuadIdeal::from_hnf(0, 0, 0).is_zero());
}

TEST(QuadIdeal, Conjugate) {
  const auto& p = prime_above_two();
  EXPECT_EQ(p.conj(), p);  // ramified
  auto x = quad_principal(2, 1);
  EXPECT_EQ(x.conj(), quad_principal(2, -1));
  EXPECT_EQ(x * x.conj(), quad_principal(9, 0));
}

TEST(FracIdeal, Examples) {
  using F = FracIdeal<IntegerRing>;
  auto i = [](long x) { return IntegerIdeal::principal(x); };
  F prod = F(i(2), 1) * F(i(3), 2);
  EXPECT_EQ(prod.num(), i(3));
  EXPECT_EQ(prod.den(), 1);
  EXPECT_TRUE(prod.is_integral());
  EXPECT_TRUE(divides(F(i(1)), F(i(17))));
  F sum = F(i(4), 2) + F(i(6), 2);
  EXPECT_EQ(sum, F(i(1), 1));
  EXPECT_FALSE(F(i(1), 2).is_integral());
  EXPECT_THROW(F(IntegerIdeal::zero()).inverse(), Error);
  EXPECT_THROW(F(i(1), 0), Error);
}

TEST(FracIdeal, QuadraticInverse) {
  using F = FracIdeal<QuadraticRing>;
  const auto& p = prime_above_two();
  F inv = F(p).inverse();
  EXPECT_EQ(inv.den(), 2);
  EXPECT_EQ(F(p) * inv, F(QuadIdeal::unit()));
  EXPECT_EQ(exact_quotient(QuadIdeal(quad_principal(2, 0)), p), p);
  EXPECT_FALSE(exact_quotient(QuadIdeal::unit(), p).has_value());
}

// properties

TEST(IdealProperties, NormMultiplicative) {
  testing::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    auto x = testing::random_quad_ideal(rng), y = testing::random_quad_ideal(rng);
    auto xy = x * y;
    EXPECT_EQ(xy.norm(), x.norm() * y.norm());
    EXPECT_TRUE(xy.closed_under_root());
    EXPECT_TRUE(divides(x, xy));
    EXPECT_TRUE(divides(y, xy));
  }
}

TEST(IdealProperties, DividesIffSumIsDivisor) {
  testing::Rng rng(12);
  int hits = 0;
  for (int i = 0; i < 300; ++i) {
    auto x = testing::random_quad_ideal(rng, 2), y = testing::random_quad_ideal(rng, 4);
    if (i % 3 == 0) y = y * x;
    const bool d = divides(x, y);
    hits += d;
    EXPECT_EQ(d, x + y == x);
  }
  EXPECT_GT(hits, 50);
}

TEST(IdealProperties, HermiteFormIsCanonical) {
  testing::Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    std::vector<QuadInt> gens;
    for (int k = 0; k < 3; ++k)
      gens.push_back(quad(testing::uniform(rng, -6, 6), testing::uniform(rng, -6, 6)));
    auto base = QuadIdeal::from_generators(gens);
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(QuadIdeal::from_generators(shuffled), base);
    // unimodular recombination g0 <- g0 + c g1 (c in the ring) keeps the ideal
    auto mixed = gens;
    mixed[0] = mixed[0] + quad(testing::uniform(rng, -3, 3), testing::uniform(rng, -3, 3)) * mixed[1];
    EXPECT_EQ(QuadIdeal::from_generators(mixed), base);
    if (!base.is_zero()) {
      EXPECT_TRUE(base.closed_under_root());
      EXPECT_GT(sgn(base.p()), 0);
      EXPECT_GT(sgn(base.s()), 0);
      EXPECT_LT(base.r(), base.p());
    }
  }
}

TEST(IdealProperties, ClassGroupLawIsXor) {
  testing::Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    auto x = testing::random_quad_ideal(rng), y = testing::random_quad_ideal(rng);
    const bool px = ideal_class(x).principal, py = ideal_class(y).principal;
    EXPECT_EQ(ideal_class(x * y).principal, px == py);
    EXPECT_EQ(ideal_class(x) * ideal_class(y), ideal_class(x * y));
  }
}

TEST(IdealProperties, FracReductionIdempotent) {
  testing::Rng rng(15);
  for (int i = 0; i < 100; ++i) {
    auto x = testing::random_quad_ideal(rng);
    Integer k = testing::uniform(rng, 1, 6), d = testing::uniform(rng, 1, 12);
    FracIdeal<QuadraticRing> f(x.scaled(k), d);
    FracIdeal<QuadraticRing> again(f.num(), f.den());
    EXPECT_EQ(again, f);
    EXPECT_EQ(gcd(f.num().content(), f.den()), 1);
  }
}

}  // namespace
}  // namespace detdiv
