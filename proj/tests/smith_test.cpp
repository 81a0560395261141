#include <gtest/gtest.h>

#include "detdiv/smith.hpp"
#include "test_support.hpp"

namespace detdiv {
namespace {

using testing::prime_above_two;
using testing::quad;

bool is_diagonal_chain(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      if (i != j && sgn(d(i, j)) != 0) return false;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (sgn(d(i, i)) < 0) return false;
    if (i + 1 < d.size() && !divisible(d(i + 1, i + 1), d(i, i))) return false;
  }
  return true;
}

void expect_certificate(const IntMatrix& a) {
  auto s = smith_normal_form(a);
  EXPECT_TRUE(is_unimodular(s.P));
  EXPECT_TRUE(is_unimodular(s.Q));
  EXPECT_EQ(s.P * a * s.Q, s.D);
  EXPECT_TRUE(is_diagonal_chain(s.D)) << s.D;
}

TEST(Smith, Examples) {
  IntMatrix m{{2, 4}, {6, 8}};
  auto s = smith_normal_form(m);
  std::vector<Integer> want{2, 4};
  EXPECT_EQ(s.diagonal(), want);
  expect_certificate(m);

  std::vector<Integer> d64{6, 4};
  auto t = smith_normal_form(IntMatrix::diagonal(d64));
  std::vector<Integer> want2{2, 12};
  EXPECT_EQ(t.diagonal(), want2);

  auto z = smith_normal_form(IntMatrix(3));
  EXPECT_TRUE(z.D.is_zero());

  IntMatrix r1{{1, 2}, {2, 4}};
  std::vector<Integer> want3{1, 0};
  EXPECT_EQ(smith_normal_form(r1).diagonal(), want3);
  expect_certificate(r1);
}

TEST(Smith, CertificatesOnRandomMatrices) {
  testing::Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    auto m = testing::random_int_matrix(rng, n, 20);
    expect_certificate(m);
    // D recovers the elementary divisors
    auto e = divisor_chain(m).elementary();
    ASSERT_TRUE(e.has_value());
    auto diag = smith_normal_form(m).diagonal();
    for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(IntegerIdeal::principal(diag[k]), (*e)[k]);
  }
}

TEST(Unimodular, Examples) {
  IntMatrix u{{2, 1}, {1, 1}};
  EXPECT_TRUE(is_unimodular(u));
  IntMatrix v{{2, 0}, {0, 1}};
  EXPECT_FALSE(is_unimodular(v));
  QuadMatrix q{{quad(1, 1), quad(2, 0)}, {quad(2, 0), quad(1, -1)}};
  EXPECT_FALSE(is_unimodular(q));
  QuadMatrix w{{quad(1, 0), quad(1, 1)}, {QuadInt(), quad(-1, 0)}};
  EXPECT_TRUE(is_unimodular(w));
  auto inv = unimodular_inverse(u);
  EXPECT_EQ(u * inv, IntMatrix::identity(2));
  EXPECT_THROW(unimodular_inverse(v), Error);
}

TEST(Equivalence, IntegerExamples) {
  std::vector<Integer> a{1, 4}, b{2, 2};
  EXPECT_FALSE(equivalent(IntMatrix::diagonal(a), IntMatrix::diagonal(b)));
  IntMatrix m{{2, 4}, {6, 8}};
  std::vector<Integer> d{2, 4};
  EXPECT_TRUE(equivalent(m, IntMatrix::diagonal(d)));
  EXPECT_TRUE(equivalent(IntMatrix(2), IntMatrix(2)));
  EXPECT_THROW(equivalent(IntMatrix(2), IntMatrix(3)), Error);
}

TEST(Equivalence, QuadraticColumnClassSeparates) {
  QuadMatrix a{{quad(2, 0), QuadInt()}, {quad(1, 1), QuadInt()}};
  QuadMatrix b{{quad(2, 0), quad(1, 1)}, {QuadInt(), QuadInt()}};
  EXPECT_EQ(divisor_chain(a), divisor_chain(b));
  EXPECT_FALSE(equivalent(a, b));
  EXPECT_TRUE(equivalent(a, a));
}

TEST(Equivalence, TransformCertificate) {
  testing::Rng rng(32);
  for (int i = 0; i < 100; ++i) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 4));
    auto a = testing::random_int_matrix(rng, n, 6);
    auto b = testing::random_unimodular<IntegerRing>(rng, n) * a * testing::random_unimodular<IntegerRing>(rng, n);
    auto cert = transform_certificate(a, b);
    ASSERT_TRUE(cert.has_value());
    EXPECT_EQ(cert->first * a * cert->second, b);
    EXPECT_TRUE(is_unimodular(cert->first));
    EXPECT_TRUE(is_unimodular(cert->second));
    EXPECT_TRUE(equivalent(a, b));
  }
  std::vector<Integer> x{1, 4}, y{2, 2};
  EXPECT_FALSE(transform_certificate(IntMatrix::diagonal(x), IntMatrix::diagonal(y)).has_value());
}

TEST(BlockForm, Example) {
  IntMatrix m{{2, 4}, {6, 8}};
  auto bf = block_normal_form(m);
  ASSERT_EQ(bf.blocks.size(), 2u);
  IntMatrix b0{{2, 0}, {0, 0}}, b1{{4, 0}, {0, 0}};
  EXPECT_EQ(bf.blocks[0], b0);
  EXPECT_EQ(bf.blocks[1], b1);
  EXPECT_EQ(bf.P * pad_with_zeros(m) * bf.Q, block_diagonal<IntegerRing>(bf.blocks));
  EXPECT_TRUE(is_unimodular(bf.P));
  EXPECT_TRUE(is_unimodular(bf.Q));
  IntMatrix sing{{1, 2}, {2, 4}};
  EXPECT_THROW(block_normal_form(sing), Error);
}

TEST(BlockForm, RandomThreeByThree) {
  testing::Rng rng(33);
  for (int i = 0; i < 60; ++i) {
    auto m = testing::nonsingular_int_matrix(rng, 3, 9);
    auto bf = block_normal_form(m);
    EXPECT_EQ(bf.P * pad_with_zeros(m) * bf.Q, block_diagonal<IntegerRing>(bf.blocks));
    auto e = *divisor_chain(m).elementary();
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(det_divisor(bf.blocks[k], 1), e[k]);
  }
}

TEST(BlockLemma, Integer) {
  IntMatrix b0{{2, 0}, {0, 0}}, b1{{4, 8}, {2, 4}};
  std::vector<IntMatrix> blocks{b0, b1};
  auto rep = verify_block_lemma<IntegerRing>(blocks);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.elementary[0], IntegerIdeal::principal(2));

  IntMatrix full = IntMatrix::identity(2);
  std::vector<IntMatrix> bad{b0, full};
  EXPECT_THROW(verify_block_lemma<IntegerRing>(bad), Error);
  IntMatrix b3{{3, 0}, {0, 0}};
  std::vector<IntMatrix> broken{b0, b3};
  EXPECT_THROW(verify_block_lemma<IntegerRing>(broken), Error);
}

TEST(BlockLemma, QuadraticNonPrincipal) {
  QuadMatrix pcol{{quad(2, 0), QuadInt()}, {quad(1, 1), QuadInt()}};
  QuadMatrix one{{quad(1, 0), QuadInt()}, {QuadInt(), QuadInt()}};
  std::vector<QuadMatrix> blocks{one, pcol};
  auto rep = verify_block_lemma<QuadraticRing>(blocks);
  EXPECT_TRUE(rep.ok());
  EXPECT_FALSE(rep.assembled_class.principal);
  EXPECT_EQ(rep.elementary[1], prime_above_two());

  std::vector<QuadMatrix> two{pcol, pcol};
  auto rep2 = verify_block_lemma<QuadraticRing>(two);
  EXPECT_TRUE(rep2.ok());
  EXPECT_TRUE(rep2.assembled_class.principal);
}

}  // namespace
}  // namespace detdiv
