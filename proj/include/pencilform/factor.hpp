#pragma once

// Squarefree decomposition and factorization into irreducibles.
// Finite fields: distinct-degree + equal-degree splitting (Cantor-Zassenhaus,
// trace variant in characteristic two). Rationals: see factor_rational.hpp.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "pencilform/poly.hpp"

namespace pencilform {

template <Field F>
struct Factorization {
  typename F::Elem unit;
  std::vector<std::pair<Poly<F>, unsigned>> factors;  // monic, sorted
};

/// Default seed for the random choices in equal-degree splitting.
inline constexpr std::uint64_t kDefaultFactorSeed = 0x5eed;

/// Process-wide seed used by factor(f, a); factorizations are sorted, so the
/// seed changes only the running time, never the result.
inline std::uint64_t& factor_seed() {
  static std::uint64_t seed = kDefaultFactorSeed;
  return seed;
}

namespace detail {

template <FiniteField F>
Poly<F> pth_root(const F& f, const Poly<F>& a) {
  const std::uint64_t p = f.characteristic();
  const std::uint64_t e = f.size() / p;  // a^(q/p) is the p-th root
  std::vector<typename F::Elem> r;
  for (std::size_t i = 0; i < a.c.size(); i += p) r.push_back(power(f, a.c[i], e));
  return poly::make(f, std::move(r));
}

template <Field F>
void squarefree_rec(const F& f, const Poly<F>& monic_f, std::vector<std::pair<Poly<F>, unsigned>>& out,
                    unsigned mult) {
  using namespace poly;
  Poly<F> c = gcd(f, monic_f, derivative(f, monic_f));
  Poly<F> w = quo(f, monic_f, c);
  unsigned i = 1;
  while (w.degree() > 0) {
    Poly<F> y = gcd(f, w, c);
    Poly<F> fac = quo(f, w, y);
    if (fac.degree() > 0) out.emplace_back(fac, i * mult);
    w = y;
    c = quo(f, c, y);
    ++i;
  }
  if (c.degree() > 0) {
    if constexpr (F::is_finite_field) {
      squarefree_rec(f, monic(f, pth_root(f, c)), out,
                     mult * static_cast<unsigned>(f.characteristic()));
    } else {
      fail(ErrorKind::Unsupported, "inseparable factor over an infinite field of positive characteristic");
    }
  }
}

template <Field F>
void sort_factors(const F& f, std::vector<std::pair<Poly<F>, unsigned>>& v) {
  std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
    int r = poly::compare(f, a.first, b.first);
    return r != 0 ? r < 0 : a.second < b.second;
  });
}

}  // namespace detail

/// f = unit * prod g_i^{m_i} with g_i monic squarefree, pairwise coprime.
template <Field F>
Factorization<F> squarefree_decompose(const F& f, const Poly<F>& a) {
  if (a.is_zero()) fail(ErrorKind::ZeroPolynomial, "squarefree decomposition of zero");
  Factorization<F> r{a.lead(), {}};
  if (a.degree() > 0) detail::squarefree_rec(f, poly::monic(f, a), r.factors, 1);
  detail::sort_factors(f, r.factors);
  return r;
}

/// Distinct-degree factorization of a monic squarefree polynomial.
template <FiniteField F>
std::vector<std::pair<Poly<F>, unsigned>> distinct_degree(const F& f, Poly<F> a) {
  using namespace poly;
  std::vector<std::pair<Poly<F>, unsigned>> out;
  const mpz_class q(static_cast<unsigned long>(f.size()));
  Poly<F> h = rem(f, x(f), a);
  unsigned i = 1;
  while (a.degree() >= 2 * static_cast<long>(i)) {
    h = powmod(f, h, q, a);
    Poly<F> g = gcd(f, a, sub(f, h, x(f)));
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      a = quo(f, a, g);
      h = rem(f, h, a);
    }
    ++i;
  }
  if (a.degree() > 0) out.emplace_back(a, static_cast<unsigned>(a.degree()));
  return out;
}

/// Splits a monic squarefree product of irreducibles of degree d.
template <FiniteField F>
void equal_degree(const F& f, const Poly<F>& a, unsigned d, Rng& rng, std::vector<Poly<F>>& out) {
  using namespace poly;
  if (a.degree() == static_cast<long>(d)) { out.push_back(a); return; }
  const std::uint64_t q = f.size();
  mpz_class qd = 1;
  for (unsigned i = 0; i < d; ++i) qd *= static_cast<unsigned long>(q);
  while (true) {
    std::vector<typename F::Elem> rc(static_cast<std::size_t>(a.degree()));
    for (auto& v : rc) v = f.random(rng);
    Poly<F> r = make(f, std::move(rc));
    if (r.degree() < 1) continue;
    Poly<F> b;
    if (f.characteristic() == 2) {
      // trace map down to F_2: r + r^2 + ... + r^(2^(k d - 1))
      unsigned kd = 0;
      for (std::uint64_t t = q; t > 1; t >>= 1) ++kd;
      kd *= d;
      Poly<F> t = rem(f, r, a);
      b = t;
      for (unsigned i = 1; i < kd; ++i) {
        t = mulmod(f, t, t, a);
        b = add(f, b, t);
      }
    } else {
      b = sub(f, powmod(f, r, mpz_class((qd - 1) / 2), a), one(f));
    }
    Poly<F> g = gcd(f, a, b);
    if (g.degree() > 0 && g.degree() < a.degree()) {
      equal_degree(f, g, d, rng, out);
      equal_degree(f, quo(f, a, g), d, rng, out);
      return;
    }
  }
}

/// Complete factorization over a finite field.
template <FiniteField F>
Factorization<F> factor(const F& f, const Poly<F>& a, Rng& rng) {
  auto sq = squarefree_decompose(f, a);
  Factorization<F> r{sq.unit, {}};
  for (const auto& [g, m] : sq.factors) {
    for (const auto& [h, d] : distinct_degree(f, g)) {
      std::vector<Poly<F>> parts;
      equal_degree(f, h, d, rng, parts);
      for (auto& p : parts) r.factors.emplace_back(std::move(p), m);
    }
  }
  detail::sort_factors(f, r.factors);
  return r;
}

template <FiniteField F>
Factorization<F> factor(const F& f, const Poly<F>& a) {
  Rng rng(factor_seed());
  return factor(f, a, rng);
}

template <FiniteField F>
bool is_irreducible(const F& f, const Poly<F>& a) {
  if (a.degree() < 1) return false;
  auto fa = factor(f, a);
  return fa.factors.size() == 1 && fa.factors[0].second == 1;
}

/// Lexicographically smallest monic irreducible of degree d, comparing
/// coefficient vectors from the constant term up.
template <FiniteField F>
Poly<F> smallest_irreducible(const F& f, unsigned d) {
  const std::uint64_t q = f.size();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < d; ++i) total *= q;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    // idx enumerates (c_0, ..., c_{d-1}) with c_0 most significant
    std::vector<typename F::Elem> c(d + 1, f.zero());
    std::uint64_t t = idx;
    for (unsigned j = d; j-- > 0;) { c[j] = f.element(t % q); t /= q; }
    c[d] = f.one();
    auto p = poly::make(f, std::move(c));
    if (is_irreducible(f, p)) return p;
  }
  fail(ErrorKind::InvalidInput, "no irreducible polynomial found");
}

template <Field F>
Poly<F> expand(const F& f, const Factorization<F>& fa) {
  Poly<F> r = poly::constant(f, fa.unit);
  for (const auto& [g, m] : fa.factors) r = poly::mul(f, r, poly::pow(f, g, m));
  return r;
}

}  // namespace pencilform
