#include <gtest/gtest.h>

#include "pencilform/construct.hpp"
#include "pencilform/module_type.hpp"
#include "test_util.hpp"

using namespace pencilform;
using namespace testutil;

TEST(Disc, OneByOne) {
  Rationals q;
  auto m = make_pencil(q, mat::from_ints(q, {{3}}), mat::from_ints(q, {{-2}}));
  EXPECT_TRUE(form::equal(q, disc(q, m), B(q, {-2, 3})));
}

TEST(Disc, TwoRoutesAgree) {
  Rng rng(7);
  PrimeField f5(5);
  Rationals q;
  auto f9 = make_galois_field(3, 2);
  for (int it = 0; it < 30; ++it) {
    for (std::size_t n : {1u, 2u, 3u}) {
      auto a = make_pencil(f5, random_matrix(f5, rng, n), random_matrix(f5, rng, n));
      EXPECT_TRUE(form::equal(f5, disc_eliminate(f5, a), disc_interpolate(f5, a)));
      auto b = make_pencil(q, random_matrix(q, rng, n), random_matrix(q, rng, n));
      EXPECT_TRUE(form::equal(q, disc_eliminate(q, b), disc_interpolate(q, b)));
      auto c = make_pencil(f9, random_matrix(f9, rng, n), random_matrix(f9, rng, n));
      EXPECT_TRUE(form::equal(f9, disc_eliminate(f9, c), disc_interpolate(f9, c)));
    }
  }
  // F_2 with a 3x3 pencil uses elimination only
  PrimeField f2(2);
  auto m = make_pencil(f2, mat::identity(f2, 3), mat::zero(f2, 3, 3));
  EXPECT_TRUE(form::equal(f2, disc(f2, m), B(f2, {0, 0, 0, 1})));
}

TEST(Act, RightActionAndScaling) {
  Rng rng(11);
  PrimeField f(5);
  for (int it = 0; it < 50; ++it) {
    auto m = random_regular(f, rng, 3, true);
    auto p = random_invertible(f, rng, 3), r = random_invertible(f, rng, 3);
    EXPECT_TRUE(equal(f, act(f, act(f, m, p), r), act(f, m, mat::mul(f, p, r))));
    auto dp = mat::det(f, p);
    EXPECT_TRUE(form::equal(f, disc(f, act(f, m, p)), form::scale(f, disc(f, m), f.mul(dp, dp))));
    EXPECT_TRUE(act(f, m, p).symmetric);
    EXPECT_EQ(is_free(f, m), is_free(f, act(f, m, p)));
  }
  auto m = random_regular(f, rng, 2, true);
  EXPECT_TRUE(equal(f, act(f, m, mat::identity(f, 2)), m));
  auto c = mat::scale(f, mat::identity(f, 2), f.from_int(2));
  EXPECT_TRUE(equal(f, act(f, m, c), make_pencil(f, mat::scale(f, m.m0, 4), mat::scale(f, m.m1, 4))));
}

TEST(Act, Errors) {
  PrimeField f(5);
  auto m = make_pencil(f, mat::identity(f, 2), mat::zero(f, 2, 2));
  try {
    act(f, m, mat::zero(f, 2, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularP);
  }
  try {
    act(f, m, mat::identity(f, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeMismatch);
  }
}

TEST(Freeness, Examples) {
  PrimeField f3(3);
  auto m = make_pencil(f3, mat::identity(f3, 2), mat::zero(f3, 2, 2));
  EXPECT_FALSE(is_free(f3, m));
  for (unsigned e = 1; e <= 4; ++e) EXPECT_TRUE(is_free(f3, delta_lambda_block(f3, e, f3.one(), f3.from_int(2))));
  PrimeField f2(2);
  // disc = X0 X1 (X0 + X1)
  auto r = make_pencil(f2, mat::from_ints(f2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}),
                       mat::from_ints(f2, {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_TRUE(form::equal(f2, disc(f2, r), B(f2, {0, 1, 1, 0})));
  EXPECT_TRUE(scheme_is_reduced(f2, r));
  EXPECT_TRUE(is_free(f2, r));
  auto nr = make_pencil(f2, mat::from_ints(f2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}),
                        mat::from_ints(f2, {{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}));
  EXPECT_FALSE(scheme_is_reduced(f2, nr));
  // (X0^2 + X1^2)^2 over F_3
  auto sq = make_pencil(f3, mat::identity(f3, 4),
                        mat::from_ints(f3, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}));
  EXPECT_FALSE(scheme_is_reduced(f3, sq));
  EXPECT_TRUE(form::equal(f3, disc(f3, sq), B(f3, {1, 0, 1, 0, 1})));
  EXPECT_FALSE(is_free(f3, sq));
  try {
    is_free(f3, make_pencil(f3, mat::zero(f3, 2, 2), mat::zero(f3, 2, 2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::VanishingDiscriminant);
  }
}

TEST(Freeness, ReducedImpliesFree) {
  Rng rng(3);
  PrimeField f(3);
  int seen = 0;
  for (int it = 0; it < 200; ++it) {
    auto m = random_regular(f, rng, 3, true);
    if (!scheme_is_reduced(f, m)) continue;
    ++seen;
    EXPECT_TRUE(is_free(f, m));
  }
  EXPECT_GT(seen, 10);
}

namespace {

template <Field F>
PolyMatrix<F> PM(const F& f, const std::vector<std::vector<std::vector<long long>>>& rows) {
  PolyMatrix<F> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (const auto& c : row) r.back().push_back(P(f, c));
  }
  return r;
}

template <Field F>
void check_smith(const F& f, const PolyMatrix<F>& a, const SmithForm<F>& s) {
  const std::size_t n = a.size();
  auto prod = pmat::mul(f, pmat::mul(f, s.u, a), s.v);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) EXPECT_TRUE(poly::equal(f, prod[i][j], s.d[i]));
      else EXPECT_TRUE(prod[i][j].is_zero());
    }
  EXPECT_EQ(pmat::det(f, s.u).degree(), 0);
  EXPECT_EQ(pmat::det(f, s.v).degree(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_TRUE(f.equal(s.d[i].lead(), f.one()));
    if (i + 1 < n) EXPECT_TRUE(poly::divides(f, s.d[i], s.d[i + 1]));
  }
}

}  // namespace

TEST(Smith, Examples) {
  Rationals q;
  auto a = PM(q, {{{0, 1}, {}}, {{}, {0, 1}}});
  auto s = smith(q, a);
  check_smith(q, a, s);
  EXPECT_TRUE(poly::equal(q, s.d[0], P(q, {0, 1})));
  EXPECT_TRUE(poly::equal(q, s.d[1], P(q, {0, 1})));
  auto b = PM(q, {{{0, 1}, {1}}, {{}, {0, 1}}});
  auto t = smith(q, b);
  check_smith(q, b, t);
  EXPECT_TRUE(poly::equal(q, t.d[0], P(q, {1})));
  EXPECT_TRUE(poly::equal(q, t.d[1], P(q, {0, 0, 1})));
  // X I - C for the companion of f
  auto g = P(q, {3, -1, 0, 2, 1});
  auto c = companion(q, g);
  auto xc = affine_matrix(q, mat::identity(q, 4), mat::scale(q, c, q.from_int(-1)));
  auto u = smith(q, xc);
  check_smith(q, xc, u);
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(poly::equal(q, u.d[i], poly::one(q)));
  EXPECT_TRUE(poly::equal(q, u.d[3], g));
}

TEST(Smith, SingularThrows) {
  Rationals q;
  try {
    smith(q, PM(q, {{{0, 1}, {0, 1}}, {{0, 1}, {0, 1}}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularMatrix);
  }
}

TEST(Smith, Random) {
  Rng rng(5);
  PrimeField f(5);
  Rationals q;
  for (int it = 0; it < 40; ++it) {
    std::size_t n = 1 + it % 4;
    PolyMatrix<PrimeField> a(n, std::vector<Poly<PrimeField>>(n));
    PolyMatrix<Rationals> b(n, std::vector<Poly<Rationals>>(n));
    for (auto& row : a)
      for (auto& e : row) e = poly::make(f, {f.random(rng), f.random(rng), f.random(rng), f.random(rng)});
    for (auto& row : b)
      for (auto& e : row) e = poly::make(q, {rnd(q, rng, 3), rnd(q, rng, 3), rnd(q, rng, 3), rnd(q, rng, 3)});
    if (!pmat::det(f, a).is_zero()) check_smith(f, a, smith(f, a));
    if (!pmat::det(q, b).is_zero()) check_smith(q, b, smith(q, b));
  }
}

TEST(ModuleType, Diagonal) {
  Rationals q;
  auto m = make_pencil(q, mat::identity(q, 3), mat::from_ints(q, {{1, 0, 0}, {0, 2, 0}, {0, 0, 5}}));
  auto t = module_type(q, m);
  ASSERT_EQ(t.entries.size(), 3u);
  for (const auto& e : t.entries) EXPECT_EQ(e.partition, std::vector<unsigned>{1});
  EXPECT_EQ(segre_symbol(q, m).to_string(), "[1, 1, 1]");
}

TEST(ModuleType, TwoBlocksSamePoint) {
  PrimeField f(5);
  auto a = delta_lambda_block(f, 2, f.zero(), f.one());
  auto b = delta_lambda_block(f, 1, f.zero(), f.one());
  auto m = make_pencil(f, mat::block_diag(f, std::vector{a.m0, b.m0}), mat::block_diag(f, std::vector{a.m1, b.m1}));
  auto t = module_type(f, m);
  ASSERT_EQ(t.entries.size(), 1u);
  EXPECT_EQ(t.entries[0].multiplicity, 3u);
  EXPECT_EQ(t.entries[0].partition, (std::vector<unsigned>{2, 1}));
  EXPECT_FALSE(is_free(f, m));
  EXPECT_EQ(segre_symbol(f, m).to_string(), "[(2,1)]");
}

TEST(ModuleType, InfinityChart) {
  PrimeField f(3);
  // (u, v) = (1, 0): disc is a multiple of X1^e
  auto m = delta_lambda_block(f, 3, f.one(), f.zero());
  auto t = module_type(f, m);
  ASSERT_EQ(t.entries.size(), 1u);
  EXPECT_TRUE(t.entries[0].point.infinity);
  EXPECT_EQ(t.entries[0].partition, std::vector<unsigned>{3});
}

TEST(ModuleType, DegreeTwoPoint) {
  PrimeField f(3);
  // disc = (X0^2 + X1^2) X1 up to a unit
  auto a = lemma_a2_pair(f, form::scale(f, B(f, {0, 1, 0, 1}), hankel_sign(f, 3)));
  auto s = segre_symbol(f, a);
  ASSERT_EQ(s.entries.size(), 2u);
  EXPECT_EQ(s.to_string(), "[1, 1, 1]");
  auto t = module_type(f, a);
  EXPECT_EQ(t.entries[0].point.degree(), 1u);
  EXPECT_EQ(t.entries[1].point.degree(), 2u);
}

TEST(ModuleType, Invariance) {
  Rng rng(17);
  PrimeField f(3);
  for (int it = 0; it < 60; ++it) {
    auto m = random_regular(f, rng, 1 + it % 4, it % 2 == 0);
    auto t = module_type(f, m);
    unsigned total = 0;
    for (const auto& e : t.entries) {
      unsigned s = 0;
      for (auto p : e.partition) s += p;
      EXPECT_EQ(s, e.multiplicity);
      total += s * e.point.degree();
    }
    EXPECT_EQ(total, m.size());
    EXPECT_TRUE(equal(f, t, module_type(f, act(f, m, random_invertible(f, rng, m.size())))));
    EXPECT_TRUE(equal(f, t, module_type(f, transpose(f, m))));
  }
}

TEST(ModuleType, NonSymmetricJordan) {
  Rationals q;
  // M0 = I, M1 = J_2(0): disc = X0^2, one point with partition [2]
  auto m = make_pencil(q, mat::identity(q, 2), mat::from_ints(q, {{0, 1}, {0, 0}}));
  auto t = module_type(q, m);
  ASSERT_EQ(t.entries.size(), 1u);
  EXPECT_EQ(t.entries[0].partition, std::vector<unsigned>{2});
}
