#include <gtest/gtest.h>

#include "pencilform/binary_form.hpp"
#include "pencilform/field_ctx.hpp"

using namespace pencilform;

namespace {

template <Field F>
Poly<F> P(const F& f, std::vector<long long> c) {
  std::vector<typename F::Elem> v;
  for (auto x : c) v.push_back(f.from_int(x));
  return poly::make(f, v);
}

template <Field F>
BinaryForm<F> B(const F& f, std::vector<long long> c) {
  BinaryForm<F> r{static_cast<unsigned>(c.size() - 1), {}};
  for (auto x : c) r.c.push_back(f.from_int(x));
  return r;
}

// Brute-force root/irreducible-divisor test over a small prime field: f has
// no factor of degree < deg f iff no monic polynomial of degree in
// [1, deg f / 2] divides it.
bool brute_irreducible(const PrimeField& f, const Poly<PrimeField>& a) {
  const long d = a.degree();
  const std::uint64_t q = f.p();
  for (long k = 1; 2 * k <= d; ++k) {
    std::uint64_t total = 1;
    for (long i = 0; i < k; ++i) total *= q;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::vector<std::uint64_t> c(k + 1);
      std::uint64_t t = idx;
      for (long i = 0; i < k; ++i) { c[i] = t % q; t /= q; }
      c[k] = 1;
      if (poly::divides(f, poly::make(f, c), a)) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Poly, DivmodAndGcd) {
  Rationals q;
  auto a = P(q, {-1, 0, 1});
  auto b = P(q, {1, 1});
  auto [qq, r] = poly::divmod(q, a, b);
  EXPECT_TRUE(poly::equal(q, qq, P(q, {-1, 1})));
  EXPECT_TRUE(r.is_zero());
  EXPECT_TRUE(poly::equal(q, poly::gcd(q, a, P(q, {2, 2})), P(q, {1, 1})));
  auto x = poly::xgcd(q, P(q, {1, 0, 1}), P(q, {0, 1}));
  EXPECT_TRUE(poly::equal(q, poly::add(q, poly::mul(q, x.s, P(q, {1, 0, 1})), poly::mul(q, x.t, P(q, {0, 1}))),
                          poly::one(q)));
}

TEST(Squarefree, Examples) {
  Rationals q;
  auto sq = squarefree_decompose(q, P(q, {0, 0, 1, 1}));  // X^2 (X+1)
  ASSERT_EQ(sq.factors.size(), 2u);
  EXPECT_TRUE(poly::equal(q, sq.factors[0].first, P(q, {0, 1})));
  EXPECT_EQ(sq.factors[0].second, 2u);
  EXPECT_TRUE(poly::equal(q, sq.factors[1].first, P(q, {1, 1})));
  EXPECT_EQ(sq.factors[1].second, 1u);

  auto sf = squarefree_decompose(q, P(q, {1, 0, 1}));
  ASSERT_EQ(sf.factors.size(), 1u);
  EXPECT_EQ(sf.factors[0].second, 1u);

  PrimeField f2(2);
  auto s2 = squarefree_decompose(f2, P(f2, {0, 0, 0, 0, 1, 0, 1}));  // X^6 + X^4
  ASSERT_EQ(s2.factors.size(), 2u);
  EXPECT_TRUE(poly::equal(f2, s2.factors[0].first, P(f2, {0, 1})));
  EXPECT_EQ(s2.factors[0].second, 4u);
  EXPECT_TRUE(poly::equal(f2, s2.factors[1].first, P(f2, {1, 1})));
  EXPECT_EQ(s2.factors[1].second, 2u);
  // verify the expansion independently: X^4 (X+1)^2 = X^6 + X^4 over F_2
  EXPECT_TRUE(poly::equal(f2, expand(f2, s2), P(f2, {0, 0, 0, 0, 1, 0, 1})));

  EXPECT_THROW(squarefree_decompose(q, Poly<Rationals>{}), Error);
}

TEST(Squarefree, CharacteristicPPowers) {
  PrimeField f3(3);
  // (X+1)^3 (X^2+1)^4 X over F_3
  auto a = poly::mul(f3, poly::pow(f3, P(f3, {1, 1}), 3),
                     poly::mul(f3, poly::pow(f3, P(f3, {1, 0, 1}), 4), P(f3, {0, 1})));
  auto sq = squarefree_decompose(f3, a);
  EXPECT_TRUE(poly::equal(f3, expand(f3, sq), a));
  std::set<unsigned> mults;
  for (const auto& [g, m] : sq.factors) {
    mults.insert(m);
    EXPECT_TRUE(poly::gcd(f3, g, poly::derivative(f3, g)).degree() == 0);
  }
  EXPECT_EQ(mults, (std::set<unsigned>{1, 3, 4}));
}

TEST(Factor, Examples) {
  PrimeField f3(3), f2(2);
  Rationals q;
  // X^2 + 1 over F_3 has no roots among 0, 1, 2
  for (std::uint64_t x = 0; x < 3; ++x) EXPECT_NE((x * x + 1) % 3, 0u);
  EXPECT_TRUE(is_irreducible(f3, P(f3, {1, 0, 1})));

  auto fq = factor(q, P(q, {-1, 0, 1}));
  ASSERT_EQ(fq.factors.size(), 2u);
  EXPECT_TRUE(poly::equal(q, fq.factors[0].first, P(q, {-1, 1})));
  EXPECT_TRUE(poly::equal(q, fq.factors[1].first, P(q, {1, 1})));

  auto quintic = P(f2, {1, 1, 1, 1, 1});
  EXPECT_NE(poly::eval(f2, quintic, std::uint64_t{0}), 0u);
  EXPECT_NE(poly::eval(f2, quintic, std::uint64_t{1}), 0u);
  EXPECT_FALSE(poly::divides(f2, P(f2, {1, 1, 1}), quintic));
  EXPECT_TRUE(is_irreducible(f2, quintic));
}

TEST(Factor, RefactoringReproducesInputFiniteFields) {
  Rng rng(11);
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    PrimeField f(p);
    for (int it = 0; it < 60; ++it) {
      std::vector<std::uint64_t> c(1 + rng() % 12);
      for (auto& v : c) v = rng() % p;
      c.push_back(1 + rng() % (p - 1));
      auto a = poly::make(f, c);
      auto fa = factor(f, a);
      EXPECT_TRUE(poly::equal(f, expand(f, fa), a));
      for (const auto& [g, m] : fa.factors) {
        EXPECT_EQ(g.lead(), 1u);
        if (g.degree() <= 4 && p <= 5) {
          EXPECT_TRUE(brute_irreducible(f, g));
        }
      }
    }
  }
  auto f9 = make_galois_field(3, 2);
  for (int it = 0; it < 30; ++it) {
    std::vector<GaloisField::Elem> c(2 + rng() % 6);
    for (auto& v : c) v = f9.random(rng);
    c.push_back(f9.one());
    auto a = poly::make(f9, c);
    EXPECT_TRUE(poly::equal(f9, expand(f9, factor(f9, a)), a));
  }
}

TEST(Factor, RationalRefactoring) {
  Rationals q;
  Rng rng(5);
  for (int it = 0; it < 40; ++it) {
    // product of random small factors
    mpq_class lead(static_cast<long>(rng() % 5) + 1, 3);
    lead.canonicalize();
    Poly<Rationals> a = poly::constant(q, lead);
    int nf = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < nf; ++k) {
      std::vector<long long> c(2 + rng() % 3);
      for (auto& v : c) v = static_cast<long long>(rng() % 11) - 5;
      c.back() = 1 + static_cast<long long>(rng() % 3);
      a = poly::mul(q, a, P(q, c));
    }
    if (a.is_zero()) continue;
    auto fa = factor(q, a);
    EXPECT_TRUE(poly::equal(q, expand(q, fa), a)) << poly::to_string(q, a);
  }
  // Swinnerton-Dyer style: X^4 - 10 X^2 + 1 is irreducible over Q but splits mod every prime
  EXPECT_TRUE(is_irreducible(q, P(q, {1, 0, -10, 0, 1})));
  auto cyc = factor(q, P(q, {-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));  // X^12 - 1
  EXPECT_EQ(cyc.factors.size(), 6u);
  EXPECT_THROW(factor(q, poly::monomial(q, q.one(), 25)), Error);
}

TEST(Form, SplitExamples) {
  Rationals q;
  auto s1 = form::split(q, B(q, {0, 1, 1}));  // X0^2 + X0 X1
  EXPECT_EQ(s1.s, 0u);
  EXPECT_EQ(s1.c_f, 1);
  auto s2 = form::split(q, B(q, {1, 0, 0, 0}));  // X1^3
  EXPECT_EQ(s2.s, 3u);
  EXPECT_EQ(s2.g.degree, 0u);
  EXPECT_EQ(s2.c_f, 1);
  PrimeField f5(5);
  auto s3 = form::split(f5, B(f5, {-1, 2, 0, 0}));  // 2 X0 X1^2 - X1^3
  EXPECT_EQ(s3.s, 2u);
  EXPECT_TRUE(form::equal(f5, s3.g, B(f5, {-1, 2})));
  EXPECT_EQ(s3.c_f, 2u);
  EXPECT_THROW(form::split(f5, B(f5, {0, 0})), Error);
}

TEST(Form, SchemeExamples) {
  Rationals q;
  // (X0 - X1)^2 X1 = X0^2 X1 - 2 X0 X1^2 + X1^3
  auto s = scheme_of(q, B(q, {1, -2, 1, 0}));
  ASSERT_EQ(s.points.size(), 2u);
  EXPECT_FALSE(s.points[0].first.infinity);
  EXPECT_TRUE(poly::equal(q, s.points[0].first.pi, P(q, {-1, 1})));
  EXPECT_EQ(s.points[0].second, 2u);
  EXPECT_TRUE(s.points[1].first.infinity);
  EXPECT_EQ(s.points[1].second, 1u);

  PrimeField f3(3);
  auto s3 = scheme_of(f3, B(f3, {1, 0, 1}));
  ASSERT_EQ(s3.points.size(), 1u);
  EXPECT_EQ(s3.points[0].first.degree(), 2u);
  EXPECT_EQ(s3.points[0].second, 1u);

  PrimeField f2(2);
  auto s2 = scheme_of(f2, B(f2, {0, 0, 0, 1}));  // X0^3
  ASSERT_EQ(s2.points.size(), 1u);
  EXPECT_TRUE(poly::equal(f2, s2.points[0].first.pi, P(f2, {0, 1})));
  EXPECT_EQ(s2.points[0].second, 3u);
}

TEST(Form, SchemeRoundTrip) {
  Rng rng(3);
  PrimeField f5(5);
  for (int it = 0; it < 100; ++it) {
    unsigned D = 1 + rng() % 6;
    BinaryForm<PrimeField> a{D, {}};
    for (unsigned i = 0; i <= D; ++i) a.c.push_back(rng() % 5);
    if (a.is_zero(f5)) continue;
    auto s = scheme_of(f5, a);
    EXPECT_EQ(s.total_degree(), D);
    EXPECT_TRUE(form::equal(f5, form_of(f5, s), a));
    auto s2 = scheme_of(f5, form_of(f5, s));
    EXPECT_TRUE(same_scheme(f5, s, s2));
  }
}
