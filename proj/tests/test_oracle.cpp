#include <gtest/gtest.h>

#include "pencilform/oracle.hpp"
#include "test_util.hpp"

using namespace pencilform;
using namespace testutil;

TEST(Oracle, GroupOrders) {
  EXPECT_EQ(group_order(2, 2, GroupKind::GL), 6u);
  EXPECT_EQ(group_order(3, 2, GroupKind::SL), 24u);
  EXPECT_EQ(group_order(3, 3, GroupKind::GL), 11232u);
}

TEST(Oracle, EncodeDecode) {
  PrimeField f(3);
  Rng rng(2);
  for (bool sym : {true, false}) {
    Oracle<PrimeField> o(f, 2, sym);
    for (int it = 0; it < 20; ++it) {
      auto m = random_regular(f, rng, 2, sym);
      EXPECT_TRUE(equal(f, o.pencil(o.code(m)), m));
    }
  }
}

TEST(Oracle, F2TableConsistency) {
  PrimeField f(2);
  Oracle<PrimeField> o(f, 2, true);
  auto t = o.enumerate(GroupKind::GL);
  std::uint64_t regular = 0;
  for (std::uint64_t c = 0; c < o.total(); ++c)
    if (!disc(f, o.pencil(c)).is_zero(f)) ++regular;
  EXPECT_EQ(t.pencil_count(), regular);
  for (const auto& orb : t.orbits) {
    EXPECT_EQ(orb.size * orb.stabilizer, 6u);
    EXPECT_EQ(brute_stabilizer(f, orb.rep, GroupKind::GL).size(), orb.stabilizer);
  }
}

TEST(Oracle, ClosureAndEquivalence) {
  PrimeField f(3);
  Rng rng(4);
  Oracle<PrimeField> o(f, 2, true);
  for (int it = 0; it < 10; ++it) {
    auto m = random_regular(f, rng, 2, true);
    auto orb = o.orbit(m, GroupKind::GL);
    o.for_each_group_element(GroupKind::GL, [&](const auto& p) {
      EXPECT_TRUE(orb.count(o.encode(o.act(o.to_small(m), p))));
    });
    EXPECT_TRUE(brute_equivalent(f, m, m, GroupKind::SL));
    auto p = random_invertible(f, rng, 2);
    EXPECT_TRUE(brute_equivalent(f, m, act(f, m, p), GroupKind::GL));
    EXPECT_EQ(group_order(3, 2, GroupKind::GL) % brute_stabilizer(f, m, GroupKind::GL).size(), 0u);
  }
}

TEST(Oracle, Stabilizers) {
  PrimeField f(3);
  // generic diagonal pencil: SL stabilizer is {I, -I}
  auto m = make_pencil(f, mat::identity(f, 2), mat::from_ints(f, {{1, 0}, {0, 2}}));
  EXPECT_EQ(brute_stabilizer(f, m, GroupKind::SL).size(), 2u);
  // (I, I): the orthogonal group O_2(F_3) of x^2 + y^2, order 8
  auto s = make_pencil(f, mat::identity(f, 2), mat::identity(f, 2));
  EXPECT_EQ(brute_stabilizer(f, s, GroupKind::GL).size(), 8u);
}

TEST(Oracle, Budget) {
  PrimeField f(5);
  Oracle<PrimeField> o(f, 3, true, 1000);
  try {
    o.enumerate(GroupKind::GL);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}
