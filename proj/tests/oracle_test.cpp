#include <gtest/gtest.h>

#include "detdiv/oracle.hpp"
#include "test_support.hpp"

namespace detdiv {
namespace {

ScanConfig int_config(std::size_t n, std::int64_t bound) {
  ScanConfig cfg;
  cfg.n = n;
  cfg.entry_bound = bound;
  cfg.threads = 2;
  return cfg;
}

TEST(OracleScan, OneByOne) {
  auto rep = enumerate_realized_triples<IntegerRing>(int_config(1, 3));
  std::set<TripleKey> want;
  for (std::int64_t x = 1; x <= 3; ++x)
    for (std::int64_t y = 1; y <= 3; ++y) want.insert({x, y, x * y});
  EXPECT_EQ(rep.realized_triples, want);
  EXPECT_TRUE(rep.ok());
}

TEST(OracleScan, TwoByTwoSmall) {
  auto rep = enumerate_realized_triples<IntegerRing>(int_config(2, 2));
  EXPECT_TRUE(rep.realized_triples.count({1, 2, 1, 2, 2, 4}));
  EXPECT_TRUE(rep.realized_triples.count({1, 2, 1, 2, 1, 4}));
  for (const auto& k : rep.realized_triples) {
    EXPECT_EQ(k[5], k[1] * k[3]);
    EXPECT_EQ(k[4] % (k[0] * k[2]), 0);
  }
}

TEST(OracleScan, IntegerKernelMatchesLibrary) {
  // the int64 kernel and the GMP divisor code must see the same triples
  auto cfg = int_config(2, 1);
  auto fast = enumerate_realized_triples<IntegerRing>(cfg);
  std::set<TripleKey> slow;
  for (const auto& a : oracle_detail::nonsingular_matrices<IntegerRing>(cfg))
    for (const auto& b : oracle_detail::nonsingular_matrices<IntegerRing>(cfg))
      slow.insert(encode_triple(divisor_chain(a), divisor_chain(b), divisor_chain(a * b)));
  EXPECT_EQ(fast.realized_triples, slow);
}

TEST(OracleScan, ThreeByThreeSampled) {
  auto cfg = int_config(3, 4);
  cfg.mode = ScanMode::Sampled;
  cfg.sample_count = 300;
  auto rep = enumerate_realized_triples<IntegerRing>(cfg);
  EXPECT_FALSE(rep.realized_triples.empty());
  for (const auto& key : rep.realized_triples) {
    auto v = check_triple(decode_triple<IntegerRing>(key, 3));
    EXPECT_NE(v.outcome, Outcome::NotRealizable);
  }
}

TEST(OracleScan, QuadraticSmall) {
  ScanConfig cfg;
  cfg.n = 1;
  cfg.entry_bound = 1;
  cfg.ring = RingTag::ZSqrtMinus5;
  auto rep = enumerate_realized_triples<QuadraticRing>(cfg);
  // nonzero a + b r with |a|, |b| <= 1; each triple is (x, y, xy)
  EXPECT_FALSE(rep.realized_triples.empty());
  for (const auto& key : rep.realized_triples) {
    auto t = decode_triple<QuadraticRing>(key, 1);
    EXPECT_EQ(t.a.d(1) * t.b.d(1), t.c.d(1));
  }
}

TEST(OracleScan, RingMismatch) {
  auto cfg = int_config(2, 1);
  try {
    enumerate_realized_triples<QuadraticRing>(cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RingMismatch);
  }
}

TEST(OracleScan, CeilingRefusal) {
  auto cfg = int_config(2, 3);
  cfg.pair_ceiling = 1000;
  try {
    enumerate_realized_triples<IntegerRing>(cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ScanTooLarge);
  }
}

TEST(OracleScan, DeterministicAcrossThreadCounts) {
  auto a = int_config(2, 2);
  a.threads = 1;
  auto b = int_config(2, 2);
  b.threads = 3;
  EXPECT_EQ(enumerate_realized_triples<IntegerRing>(a).realized_triples,
            enumerate_realized_triples<IntegerRing>(b).realized_triples);

  auto s1 = int_config(3, 3), s2 = int_config(3, 3);
  s1.mode = s2.mode = ScanMode::Sampled;
  s1.sample_count = s2.sample_count = 100;
  s2.threads = 1;
  EXPECT_EQ(enumerate_realized_triples<IntegerRing>(s1).realized_triples,
            enumerate_realized_triples<IntegerRing>(s2).realized_triples);
}

TEST(OracleBounds, HoldOnSmallScans) {
  auto rep = verify_bound_theorems<IntegerRing>(int_config(2, 2));
  EXPECT_TRUE(rep.ok());
  EXPECT_GT(rep.stats["lower_bound_pass"], 0u);
  EXPECT_GT(rep.stats["upper_bound_pass"], 0u);

  ScanConfig q;
  q.n = 2;
  q.entry_bound = 1;
  q.ring = RingTag::ZSqrtMinus5;
  q.mode = ScanMode::Sampled;
  q.sample_count = 200;
  EXPECT_TRUE(verify_bound_theorems<QuadraticRing>(q).ok());
}

TEST(OracleCrossCheck, SmallUniverse) {
  auto cfg = int_config(2, 2);
  cfg.det_bound = 4;
  auto rep = cross_check_checker(cfg);
  EXPECT_TRUE(rep.ok()) << (rep.counterexamples.empty() ? "" : rep.counterexamples[0].detail);
  EXPECT_GT(rep.stats["universe_rejected"], 0u);
  EXPECT_GT(rep.stats["witness_within_bound"], 0u);
  EXPECT_EQ(rep.stats["scanned_accepted"], rep.realized_triples.size());
  EXPECT_THROW(cross_check_checker(int_config(3, 1)), Error);
}

TEST(OracleKeys, RoundTrip) {
  std::vector<IntegerIdeal> a{IntegerIdeal::principal(1), IntegerIdeal::principal(2)};
  DivisorChain<IntegerRing> c(a);
  auto key = encode_triple(c, c, c * c);
  TripleKey want{1, 2, 1, 2, 1, 4};
  EXPECT_EQ(key, want);
  auto t = decode_triple<IntegerRing>(key, 2);
  EXPECT_EQ(t.c, c * c);
  EXPECT_THROW(decode_triple<IntegerRing>(key, 3), Error);
}

}  // namespace
}  // namespace detdiv
