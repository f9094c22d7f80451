#include <gtest/gtest.h>

#include "pencilform/construct.hpp"
#include "test_util.hpp"

using namespace pencilform;
using namespace testutil;

namespace {

// Closed-form r = 4 matrices for f = X^4 + a X^3 + b X^2 + c X + d.
template <Field F>
Pencil<F> closed_form_r4(const F& f, long long a, long long b, long long c, long long d) {
  auto m0 = mat::from_ints(f, {{0, 0, 0, 1},
                               {0, 0, 1, -a},
                               {0, 1, -a, a * a - b},
                               {1, -a, a * a - b, -a * a * a + 2 * a * b - c}});
  long long e = a * a * a - 2 * a * b + c;
  auto m1 = mat::from_ints(f, {{0, 0, -1, a},
                               {0, -1, a, -a * a + b},
                               {-1, a, -a * a + b, e},
                               {a, -a * a + b, e, -a * a * a * a + 3 * a * a * b - 2 * a * c - b * b + d}});
  return make_pencil(f, m0, m1);
}

template <Field F>
void check_a1(const F& f, const Poly<F>& g) {
  auto m = lemma_a1_pair(f, g);
  EXPECT_TRUE(m.symmetric);
  EXPECT_TRUE(poly::equal(f, pmat::det(f, affine_matrix(f, m.m0, m.m1)), g));
  auto n = mat::scale(f, mat::mul(f, mat::inverse(f, m.m0), m.m1), f.from_int(-1));
  auto monic = poly::scale(f, g, hankel_sign(f, g.degree()));
  EXPECT_TRUE(mat::equal(f, n, companion(f, monic)));
}

}  // namespace

TEST(HankelPair, QuarticClosedForm) {
  Rationals q;
  Rng rng(1);
  std::uniform_int_distribution<int> d(-10, 10);
  for (int it = 0; it < 20; ++it) {
    long long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
    auto g = P(q, {e, c, b, a, 1});
    EXPECT_TRUE(equal(q, lemma_a1_pair(q, g), closed_form_r4(q, a, b, c, e)));
    check_a1(q, g);
  }
  auto m = lemma_a1_pair(q, P(q, {1, 1, 1, 1, 1}));
  EXPECT_TRUE(form::equal(q, disc(q, m), B(q, {1, 1, 1, 1, 1})));
}

TEST(HankelPair, SmallDegrees) {
  Rationals q;
  auto m = lemma_a1_pair(q, P(q, {7, 1}));
  EXPECT_TRUE(mat::equal(q, m.m0, mat::from_ints(q, {{1}})));
  EXPECT_TRUE(mat::equal(q, m.m1, mat::from_ints(q, {{7}})));
  check_a1(q, P(q, {-3, -2, -1}));
  check_a1(q, P(q, {5, 0, 0, 0, 0, 1, -1}));
  try {
    lemma_a1_pair(q, P(q, {1, 1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LeadingCoefficientMismatch);
  }
}

TEST(HankelPair, ExhaustiveF3) {
  PrimeField f(3);
  for (long r = 1; r <= 4; ++r) {
    std::uint64_t total = 1;
    for (long i = 0; i < r; ++i) total *= 3;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::vector<std::uint64_t> c;
      for (std::uint64_t t = idx, i = 0; i < static_cast<std::uint64_t>(r); ++i, t /= 3) c.push_back(t % 3);
      c.push_back(hankel_sign(f, r));
      check_a1(f, poly::make(f, c));
    }
  }
}

TEST(HomogeneousHankelPair, Examples) {
  PrimeField f(5);
  // s = r: pure (N0, N1)
  for (long r = 1; r <= 5; ++r) {
    BinaryForm<PrimeField> x1r = form::zero(f, r);
    x1r.c[0] = hankel_sign(f, r);
    auto m = lemma_a2_pair(f, x1r);
    EXPECT_TRUE(form::equal(f, disc(f, m), x1r));
    EXPECT_TRUE(is_free(f, m));
  }
  // s = 0 agrees with the homogenized A.1 pair
  auto g = B(f, {2, 3, 1});
  g = form::scale(f, g, hankel_sign(f, 2));
  auto a2 = lemma_a2_pair(f, g);
  EXPECT_TRUE(equal(f, a2, lemma_a1_pair(f, form::dehomogenize(f, g))));
  try {
    lemma_a2_pair(f, B(f, {0, 1, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CoefficientConventionViolated);
  }
}

TEST(HomogeneousHankelPair, CharacteristicTwo) {
  PrimeField f(2);
  // X1 (X0^2 + X0 X1 + X1^2)
  auto fm = B(f, {0, 1, 1, 1});
  auto m = lemma_a2_pair(f, fm);
  EXPECT_TRUE(form::equal(f, disc(f, m), fm));
  EXPECT_TRUE(is_free(f, m));
  EXPECT_TRUE(m.symmetric);
}

TEST(DeltaLambda, SignLaw) {
  PrimeField f(5);
  for (unsigned e = 1; e <= 6; ++e)
    for (std::uint64_t u = 0; u < 5; ++u)
      for (std::uint64_t v = 0; v < 5; ++v) {
        if (!u && !v) continue;
        auto m = delta_lambda_block(f, e, u, v);
        auto want = form::scale(f, form::pow(f, form::linear(f, u, v), e), hankel_sign(f, e));
        EXPECT_TRUE(form::equal(f, disc(f, m), want));
        EXPECT_TRUE(is_free(f, m));
        auto t = module_type(f, m);
        ASSERT_EQ(t.entries.size(), 1u);
        EXPECT_EQ(t.entries[0].partition, std::vector<unsigned>{e});
      }
  Rationals q;
  EXPECT_TRUE(form::equal(q, disc(q, delta_lambda_block(q, 1, q.zero(), q.one())), B(q, {0, 1})));
  EXPECT_TRUE(form::equal(q, disc(q, delta_lambda_block(q, 2, q.one(), q.one())), B(q, {-1, 2, -1})));
  try {
    delta_lambda_block(q, 2, q.zero(), q.zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroPoint);
  }
}

TEST(SegrePair, RoundTrip) {
  PrimeField f(3);
  using Spec = SegreSpec<PrimeField>;
  auto pt = [&](int u, int v) { return point::rational(f, f.from_int(u), f.from_int(v)); };
  Spec three{{pt(0, 1), {1}}, {pt(1, 1), {1}}, {pt(1, 0), {1}}};
  auto m = segre_pair(f, three);
  EXPECT_EQ(segre_symbol(f, m).to_string(), "[1, 1, 1]");
  Spec one{{pt(2, 1), {2, 1}}};
  auto t = module_type(f, segre_pair(f, one));
  ASSERT_EQ(t.entries.size(), 1u);
  EXPECT_EQ(t.entries[0].partition, (std::vector<unsigned>{2, 1}));
  // every spec with n + 1 <= 4 over P^1(F_3) and at most two points
  std::vector<std::vector<unsigned>> parts{{1}, {2}, {1, 1}, {3}, {2, 1}, {1, 1, 1}, {4}, {3, 1}, {2, 2}, {2, 1, 1}};
  auto size = [](const std::vector<unsigned>& p) { unsigned s = 0; for (auto x : p) s += x; return s; };
  std::vector<PointOnP1<PrimeField>> pts{pt(0, 1), pt(1, 1), pt(2, 1), pt(1, 0)};
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a; b < pts.size(); ++b)
      for (const auto& pa : parts)
        for (const auto& pb : parts) {
          Spec s{{pts[a], pa}};
          if (b != a) s.push_back({pts[b], pb});
          unsigned total = size(pa) + (b != a ? size(pb) : 0);
          if (total > 4 || (b == a && &pb != &parts[0])) continue;
          auto r = module_type(f, segre_pair(f, s));
          ASSERT_EQ(r.entries.size(), s.size());
          for (const auto& e : r.entries)
            for (const auto& x : s)
              if (point::equal(f, e.point, x.point)) {
                EXPECT_EQ(e.partition, x.partition);
              }
        }
  Spec bad{{point::finite(f, P(f, {1, 0, 1})), {1}}};
  try {
    segre_pair(f, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonRationalPoint);
  }
}

TEST(RealizePair, RoundTrip) {
  PrimeField f(3);
  auto deg2 = point::finite(f, P(f, {1, 0, 1}));
  auto inf = point::infinity(f);
  auto zero = point::rational(f, f.zero(), f.one());
  std::vector<ModuleType<PrimeField>> types{
      {{{zero, 1, {1}}, {inf, 1, {1}}}},
      {{{deg2, 1, {1}}}},
      {{{deg2, 2, {2}}}},
      {{{deg2, 2, {1, 1}}}},
      {{{zero, 3, {2, 1}}, {deg2, 1, {1}}}},
      {{{inf, 3, {3}}}},
      {{{zero, 2, {1, 1}}, {inf, 2, {2}}}},
  };
  for (const auto& t : types) {
    auto m = realize_pair(f, t);
    EXPECT_TRUE(m.symmetric);
    EXPECT_TRUE(equal(f, module_type(f, m), t));
    bool single = true;
    for (const auto& e : t.entries) single = single && e.partition.size() == 1;
    EXPECT_EQ(is_free(f, m), single);
  }
}

TEST(HankelPair, RandomRationals) {
  Rationals q;
  Rng rng(21);
  std::uniform_int_distribution<int> deg(1, 6), h(-10, 10);
  for (int it = 0; it < 200; ++it) {
    const int r = deg(rng);
    std::vector<long long> c;
    for (int i = 0; i < r; ++i) c.push_back(h(rng));
    c.push_back(hankel_sign(q, r) > 0 ? 1 : -1);
    check_a1(q, P(q, c));
  }
}

TEST(HomogeneousHankelPair, RandomRationals) {
  Rationals q;
  Rng rng(22);
  std::uniform_int_distribution<int> deg(1, 6), h(-10, 10);
  for (int it = 0; it < 200; ++it) {
    const int r = deg(rng);
    const int s = std::uniform_int_distribution<int>(0, r)(rng);
    // f = X1^s g with g of degree r - s in X0 and X0-leading coefficient fixed
    std::vector<long long> c(static_cast<std::size_t>(r + 1), 0);
    for (int i = 0; i < r - s; ++i) c[static_cast<std::size_t>(i)] = h(rng);
    c[static_cast<std::size_t>(r - s)] = hankel_sign(q, r) > 0 ? 1 : -1;
    auto fm = B(q, c);
    auto m = lemma_a2_pair(q, fm);
    EXPECT_TRUE(m.symmetric);
    EXPECT_TRUE(form::equal(q, disc(q, m), fm)) << form::to_string(q, fm);
    EXPECT_TRUE(is_free(q, m)) << form::to_string(q, fm);
  }
}
