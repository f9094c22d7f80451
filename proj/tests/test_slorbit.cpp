#include <gtest/gtest.h>

#include "pencilform/oracle.hpp"
#include "pencilform/slorbit.hpp"
#include "test_util.hpp"

using namespace pencilform;
using namespace testutil;

namespace {

template <FiniteField F>
AlgebraElem<F> random_unit(const FiniteAlgebra<F>& l, Rng& rng) {
  while (true) {
    auto a = alg::element(l, std::uniform_int_distribution<std::uint64_t>(0, alg::size(l) - 1)(rng));
    if (alg::is_unit(l, a)) return a;
  }
}

// gs_equal by brute force over all b in L^x.
template <FiniteField F>
bool brute_gs_equal(const FiniteAlgebra<F>& l, const typename F::Elem& u, const AlgebraElem<F>& a,
                    const typename F::Elem& u2, const AlgebraElem<F>& a2) {
  bool found = false;
  alg::for_each_unit(l, [&](const AlgebraElem<F>& b) {
    if (found) return;
    if (alg::equal(l, a, alg::mul(l, alg::mul(l, b, b), a2)) && l.base.equal(l.base.mul(u, norm(l, b)), u2))
      found = true;
  });
  return found;
}

template <FiniteField F>
SchemeS<F> scheme(const F& f, const BinaryForm<F>& b) { return scheme_of(f, b); }

}  // namespace

TEST(Algebra, Shapes) {
  PrimeField f(3);
  auto l = algebra_of(f, scheme(f, B(f, {0, 1, 1, 0})));  // X0 X1 (X0 + X1)
  EXPECT_EQ(l.factors.size(), 3u);
  EXPECT_EQ(l.dim(), 3u);
  auto l2 = algebra_of(f, scheme(f, B(f, {1, 1, 1})));  // (X0 - X1)^2 over F_3... X^2 + X + 1 = (X - 1)^2
  ASSERT_EQ(l2.factors.size(), 1u);
  EXPECT_EQ(l2.factors[0].m, 2u);
  auto l3 = algebra_of(f, scheme(f, B(f, {1, 0, 1})));
  ASSERT_EQ(l3.factors.size(), 1u);
  EXPECT_EQ(l3.factors[0].residue.size(), 9u);
}

TEST(Algebra, Norms) {
  PrimeField f(3);
  auto l = algebra_of(f, scheme(f, B(f, {1, 1, 1})));
  EXPECT_EQ(norm(l, alg::one(l)), 1u);
  AlgebraElem<PrimeField> a{{l.factors[0].residue.one(), l.factors[0].residue.one()}};
  EXPECT_EQ(norm(l, a), 1u);
  auto l3 = algebra_of(f, scheme(f, B(f, {1, 0, 1})));
  const auto& r = l3.factors[0].residue;
  AlgebraElem<PrimeField> g{{r.generator()}};
  EXPECT_EQ(norm(l3, g), ext_norm(r, r.generator()));
}

TEST(Algebra, ChartPolynomialsAndNorm) {
  Rng rng(12);
  PrimeField f(5);
  for (int it = 0; it < 40; ++it) {
    auto m = random_regular(f, rng, 1 + it % 4, true);
    auto l = algebra_of(f, scheme_of(f, m));
    auto c = chart_of(f, m);
    auto a = random_unit(l, rng);
    auto p = to_chart_poly(l, a, c);
    EXPECT_TRUE(alg::equal(l, from_chart_poly(l, p, c), a));
    // N(a) = det a(N) with N the X'-action
    auto mc = to_chart(f, m, c);
    auto nn = mat::scale(f, mat::mul(f, mat::inverse(f, mc.m0), mc.m1), f.from_int(-1));
    EXPECT_EQ(norm(l, a), mat::det(f, eval_matrix(f, p, nn)));
  }
}

TEST(GSEqual, Examples) {
  PrimeField f(3);
  auto l = algebra_of(f, scheme(f, B(f, {0, 1})));
  EXPECT_FALSE(gs_equal(l, f.one(), alg::constant(l, f.from_int(2)), f.one(), alg::one(l)));
  EXPECT_TRUE(gs_equal(l, f.one(), alg::one(l), f.one(), alg::one(l)));
  try {
    gs_equal(l, f.zero(), alg::one(l), f.one(), alg::one(l));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonUnit);
  }
}

TEST(GSEqual, AgreesWithBruteForce) {
  Rng rng(13);
  auto f4 = make_galois_field(2, 2);
  PrimeField f3(3), f5(5), f2(2);
  auto run = [&](const auto& f, int n) {
    for (int it = 0; it < 15; ++it) {
      auto m = random_regular(f, rng, n, true);
      auto l = algebra_of(f, scheme_of(f, m));
      if (alg::size(l) > 1000) continue;
      auto nz = [&] {
        while (true) {
          auto x = f.random(rng);
          if (!f.is_zero(x)) return x;
        }
      };
      for (int k = 0; k < 10; ++k) {
        auto u = nz(), u2 = nz();
        auto a = random_unit(l, rng), a2 = random_unit(l, rng);
        EXPECT_EQ(gs_equal(l, u, a, u2, a2), brute_gs_equal(l, u, a, u2, a2));
        auto b = random_unit(l, rng);
        auto nb = norm(l, b);
        EXPECT_TRUE(gs_equal(l, f.div(u, nb), alg::mul(l, alg::mul(l, b, b), a), u, a));
      }
    }
  };
  run(f3, 2);
  run(f3, 3);
  run(f5, 2);
  run(f2, 3);
  run(f2, 4);
  run(f4, 2);
}

TEST(Stabilizer, FormulaMatchesEnumeration) {
  PrimeField f3(3), f2(2);
  EXPECT_EQ(stabilizer_size(algebra_of(f3, scheme(f3, B(f3, {0, 1})))), 1u);
  EXPECT_EQ(stabilizer_size(algebra_of(f3, scheme(f3, B(f3, {0, 1, 0})))), 2u);
  EXPECT_EQ(stabilizer_size(algebra_of(f3, scheme(f3, B(f3, {1, 1, 1})))), 2u);
  Rng rng(14);
  auto f4 = make_galois_field(2, 2);
  auto run = [&](const auto& f, int n) {
    for (int it = 0; it < 20; ++it) {
      auto m = random_regular(f, rng, n, true);
      auto l = algebra_of(f, scheme_of(f, m));
      EXPECT_EQ(stabilizer_size(l), stabilizer_elements(l).size());
    }
  };
  run(f3, 3);
  run(f3, 4);
  run(f2, 4);
  run(f2, 5);
  run(f4, 3);
}

TEST(SLCount, FormulaAndOracleF3) {
  PrimeField f(3);
  Oracle<PrimeField> o(f, 2, true);
  auto t = o.enumerate(GroupKind::SL);
  // group free orbits by discriminant
  std::map<std::vector<std::uint64_t>, std::uint64_t> free_orbits;
  for (const auto& orb : t.orbits)
    if (is_free(f, orb.rep)) ++free_orbits[disc(f, orb.rep).c];
  for (std::uint64_t idx = 0; idx < 27; ++idx) {
    BinaryForm<PrimeField> fm{2, {idx % 3, idx / 3 % 3, idx / 9}};
    if (fm.is_zero(f)) continue;
    auto s = scheme_of(f, fm);
    auto r = sl_orbit_count(f, s, fm);
    EXPECT_EQ(r.count, r.predicted);
    EXPECT_EQ(r.count, free_orbits[fm.c]) << form::to_string(f, fm);
    auto ex = existence_search(f, s, fm);
    EXPECT_TRUE(ex.decided);
    EXPECT_EQ(ex.found, r.count > 0);
  }
}

TEST(Existence, FiniteFieldCanFail) {
  PrimeField f(3);
  auto fm = B(f, {0, 0, 1});  // X0^2: C = 1, target -1, not a square mod 3
  auto r = existence_search(f, scheme_of(f, fm), fm);
  EXPECT_TRUE(r.decided);
  EXPECT_FALSE(r.found);
}

TEST(Existence, Rationals) {
  Rationals q;
  auto xy = B(q, {0, 1, 0});
  auto r = existence_search(q, scheme_of(q, xy), xy);
  ASSERT_TRUE(r.found);
  auto l = algebra_of(q, scheme_of(q, xy));
  EXPECT_EQ(q.mul(q.mul(r.witness->u, r.witness->u), norm(l, r.witness->alpha)), q.from_int(-1));
  auto circle = B(q, {1, 0, 1});
  auto c = existence_search(q, scheme_of(q, circle), circle);
  EXPECT_FALSE(c.found);
  EXPECT_FALSE(c.decided);
  try {
    existence_search(q, scheme_of(q, circle), xy);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SchemeMismatch);
  }
}

TEST(GSAct, IdentityAndScaling) {
  Rng rng(15);
  PrimeField f(5);
  int done = 0;
  for (int it = 0; it < 100; ++it) {
    auto m = random_regular(f, rng, 1 + it % 3, true);
    if (!is_free(f, m)) continue;
    ++done;
    auto l = algebra_of(f, scheme_of(f, m));
    auto same = gs_act(f, m, f.one(), alg::one(l));
    EXPECT_TRUE(equal(f, same.pencil, m));
    auto a = random_unit(l, rng);
    auto u = f.from_int(1 + it % 4);
    auto r = gs_act(f, m, u, a);
    EXPECT_TRUE(r.pencil.symmetric);
    EXPECT_FALSE(r.transposed);
    EXPECT_TRUE(form::equal(f, disc(f, r.pencil), form::scale(f, disc(f, m), f.mul(f.mul(u, u), norm(l, a)))));
  }
  EXPECT_GT(done, 30);
}

TEST(GSAct, RelationActsTriviallyOnSLOrbits) {
  Rng rng(16);
  PrimeField f(3);
  Oracle<PrimeField> o(f, 2, true);
  int done = 0;
  for (int it = 0; it < 60 && done < 15; ++it) {
    auto m = random_regular(f, rng, 2, true);
    if (!is_free(f, m)) continue;
    ++done;
    auto l = algebra_of(f, scheme_of(f, m));
    auto b = random_unit(l, rng);
    auto r = gs_act(f, m, f.inv(norm(l, b)), alg::mul(l, b, b));
    EXPECT_TRUE(o.equivalent(m, r.pencil, GroupKind::SL));
    // and distinct G_S classes give distinct SL-orbits
    auto a = random_unit(l, rng);
    auto u = f.from_int(1 + it % 2);
    auto x = gs_act(f, m, u, a);
    EXPECT_EQ(o.equivalent(m, x.pencil, GroupKind::SL), gs_equal(l, u, a, f.one(), alg::one(l)));
  }
}

TEST(GSAct, SwapChart) {
  PrimeField f(3);
  // X0 (X0 - X1)(X0 + X1): every point (1 : c) lies on S, (0 : 1) does not
  auto m = make_pencil(f, mat::from_ints(f, {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                       mat::from_ints(f, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
  auto ch = chart_of(f, m);
  EXPECT_TRUE(f.is_zero(ch.a));
  auto l = algebra_of(f, scheme_of(f, m));
  Rng rng(17);
  for (int it = 0; it < 10; ++it) {
    auto a = random_unit(l, rng);
    auto r = gs_act(f, m, f.one(), a);
    EXPECT_TRUE(form::equal(f, disc(f, r.pencil), form::scale(f, disc(f, m), norm(l, a))));
    EXPECT_EQ(brute_equivalent(f, m, r.pencil, GroupKind::SL), gs_equal(l, f.one(), a, f.one(), alg::one(l)));
  }
}
