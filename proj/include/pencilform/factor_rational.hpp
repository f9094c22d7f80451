#pragma once

// Factorization over Q: squarefree decomposition, factorization modulo a good
// prime, quadratic Hensel lifting, and subset recombination (Zassenhaus).

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "pencilform/factor.hpp"

namespace pencilform {

inline constexpr long kRationalFactorDegreeBound = 24;

namespace zx {

using ZPoly = std::vector<mpz_class>;  // constant first, no trailing zeros

inline void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline mpz_class mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r = a % m;
  if (r < 0) r += m;
  return r;
}

inline ZPoly reduce(ZPoly a, const mpz_class& m) {
  for (auto& v : a) v = mod(v, m);
  trim(a);
  return a;
}

inline ZPoly symmetric(ZPoly a, const mpz_class& m) {
  mpz_class half = m / 2;
  for (auto& v : a) {
    v = mod(v, m);
    if (v > half) v -= m;
  }
  trim(a);
  return a;
}

inline ZPoly add(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return reduce(std::move(r), m);
}

inline ZPoly sub(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return reduce(std::move(r), m);
}

inline ZPoly mul(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return reduce(std::move(r), m);
}

/// Division by a monic b modulo m.
inline std::pair<ZPoly, ZPoly> divmod_monic(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  if (a.size() < b.size()) return {{}, reduce(a, m)};
  ZPoly r = a, q(a.size() - b.size() + 1, 0);
  const std::size_t db = b.size() - 1;
  for (std::size_t i = r.size(); i-- > db;) {
    mpz_class t = mod(r[i], m);
    if (t == 0) continue;
    q[i - db] = t;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = mod(r[i - db + j] - t * b[j], m);
  }
  r.resize(db);
  return {reduce(std::move(q), m), reduce(std::move(r), m)};
}

inline mpz_class content(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& v : a) g = gcd(g, v);
  return g;
}

inline ZPoly primitive(ZPoly a) {
  mpz_class g = content(a);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& v : a) v /= g;
  return a;
}

inline ZPoly from_rational(const Poly<Rationals>& a) {
  mpz_class l = 1;
  for (const auto& v : a.c) l = lcm(l, v.get_den());
  ZPoly r;
  for (const auto& v : a.c) r.push_back(v.get_num() * (l / v.get_den()));
  return primitive(r);
}

inline Poly<Rationals> to_rational(const ZPoly& a) {
  Poly<Rationals> r;
  for (const auto& v : a) r.c.emplace_back(v);
  return r;
}

inline Poly<PrimeField> to_fp(const PrimeField& f, const ZPoly& a) {
  std::vector<std::uint64_t> c;
  const mpz_class p(static_cast<unsigned long>(f.p()));
  for (const auto& v : a) c.push_back(mod(v, p).get_ui());
  return poly::make(f, std::move(c));
}

inline ZPoly from_fp(const Poly<PrimeField>& a) {
  ZPoly r;
  for (auto v : a.c) r.emplace_back(static_cast<unsigned long>(v));
  return r;
}

/// One quadratic Hensel step: f = g h mod m, s g + t h = 1 mod m, h monic.
/// Lifts all four to modulus m^2.
inline void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const mpz_class& m) {
  const mpz_class m2 = m * m;
  ZPoly e = sub(f, mul(g, h, m2), m2);
  auto [q, r] = divmod_monic(mul(s, e, m2), h, m2);
  ZPoly g2 = add(g, add(mul(t, e, m2), mul(q, g, m2), m2), m2);
  ZPoly h2 = add(h, r, m2);
  ZPoly b = sub(add(mul(s, g2, m2), mul(t, h2, m2), m2), ZPoly{1}, m2);
  auto [c, d] = divmod_monic(mul(s, b, m2), h2, m2);
  s = sub(s, d, m2);
  t = sub(t, add(mul(t, b, m2), mul(c, g2, m2), m2), m2);
  g = std::move(g2);
  h = std::move(h2);
}

/// Lifts f = lc * prod(monic factors) from mod p to mod p^(2^k) >= bound.
inline std::vector<ZPoly> hensel_lift(const ZPoly& f, std::vector<ZPoly> factors, const PrimeField& fp,
                                      const mpz_class& bound, mpz_class& modulus) {
  const mpz_class p(static_cast<unsigned long>(fp.p()));
  modulus = p;
  std::vector<unsigned> steps_needed;
  mpz_class m = p;
  unsigned steps = 0;
  while (m < bound) { m *= m; ++steps; }
  modulus = m;
  std::vector<ZPoly> lifted;
  ZPoly rest = f;  // carries the leading coefficient
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    ZPoly h = factors[i];
    Poly<PrimeField> hp = to_fp(fp, h);
    Poly<PrimeField> gp = poly::make(fp, {fp.one()});
    for (std::size_t j = i + 1; j < factors.size(); ++j) gp = poly::mul(fp, gp, to_fp(fp, factors[j]));
    gp = poly::scale(fp, gp, to_fp(fp, rest).lead());
    auto xg = poly::xgcd(fp, gp, hp);
    ZPoly g = from_fp(gp), s = from_fp(xg.s), t = from_fp(xg.t);
    mpz_class cur = p;
    for (unsigned k = 0; k < steps; ++k) {
      hensel_step(reduce(rest, cur * cur), g, h, s, t, cur);
      cur *= cur;
    }
    lifted.push_back(reduce(h, m));
    rest = g;
  }
  // last factor: rest / lc, made monic modulo m
  mpz_class lc = mod(rest.back(), m), inv;
  mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), m.get_mpz_t());
  ZPoly last = rest;
  for (auto& v : last) v = mod(v * inv, m);
  lifted.push_back(reduce(last, m));
  return lifted;
}

/// Factors a primitive squarefree integer polynomial into primitive
/// irreducibles over Z (positive leading coefficients).
inline std::vector<ZPoly> factor_squarefree(ZPoly g) {
  const long n = static_cast<long>(g.size()) - 1;
  if (n <= 1) return {primitive(g)};
  // choose a good prime with few modular factors
  std::uint64_t best_p = 0;
  std::vector<ZPoly> best;
  int tried = 0;
  for (std::uint64_t p = 3; tried < 6 && p < 100000; p += 2) {
    if (!is_prime_u64(p)) continue;
    const mpz_class pz(static_cast<unsigned long>(p));
    if (mod(g.back(), pz) == 0) continue;
    PrimeField fp(p);
    auto gp = to_fp(fp, g);
    if (poly::gcd(fp, gp, poly::derivative(fp, gp)).degree() != 0) continue;
    auto fa = factor(fp, gp);
    ++tried;
    if (best_p == 0 || fa.factors.size() < best.size()) {
      best_p = p;
      best.clear();
      for (const auto& [h, m] : fa.factors) best.push_back(from_fp(h));
    }
    if (best.size() == 1) break;
  }
  if (best.size() == 1) return {primitive(g)};
  PrimeField fp(best_p);
  // Mignotte-style bound on factor coefficients, times the leading coefficient
  mpz_class norm2 = 0;
  for (const auto& v : g) norm2 += v * v;
  mpz_class nrm = sqrt(norm2) + 1;
  mpz_class bound = 2 * nrm * abs(g.back());
  mpz_class two_n = 1;
  for (long i = 0; i < n; ++i) two_n *= 2;
  bound *= two_n;
  mpz_class modulus;
  auto lifted = hensel_lift(g, best, fp, 2 * bound + 1, modulus);

  std::vector<ZPoly> result;
  std::vector<ZPoly> remaining = lifted;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    const std::size_t r = remaining.size();
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      ZPoly cand{g.back()};
      for (auto i : idx) cand = mul(cand, remaining[i], modulus);
      cand = primitive(symmetric(cand, modulus));
      auto [q, rm] = poly::divmod(Rationals{}, to_rational(g), to_rational(cand));
      bool integral = rm.is_zero();
      for (const auto& v : q.c)
        if (v.get_den() != 1) integral = false;
      if (integral) {
        result.push_back(cand);
        g = primitive(from_rational(q));
        std::vector<ZPoly> rest;
        for (std::size_t i = 0; i < r; ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(remaining[i]);
        remaining = std::move(rest);
        found = true;
        break;
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == r - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (g.size() > 1) result.push_back(primitive(g));
  return result;
}

}  // namespace zx

inline Factorization<Rationals> factor(const Rationals& q, const Poly<Rationals>& a) {
  if (a.is_zero()) fail(ErrorKind::ZeroPolynomial, "factorization of zero");
  if (a.degree() > kRationalFactorDegreeBound)
    fail(ErrorKind::DegreeBoundExceeded, "degree exceeds the rational factorization bound");
  auto sq = squarefree_decompose(q, a);
  Factorization<Rationals> r{sq.unit, {}};
  for (const auto& [g, m] : sq.factors)
    for (const auto& h : zx::factor_squarefree(zx::from_rational(g)))
      r.factors.emplace_back(poly::monic(q, zx::to_rational(h)), m);
  detail::sort_factors(q, r.factors);
  return r;
}

inline bool is_irreducible(const Rationals& q, const Poly<Rationals>& a) {
  if (a.degree() < 1) return false;
  auto fa = factor(q, a);
  return fa.factors.size() == 1 && fa.factors[0].second == 1;
}

/// Factorization dispatch for any supported context field.
template <Field F>
Factorization<F> factor_any(const F& f, const Poly<F>& a) {
  if constexpr (std::is_same_v<F, Rationals>) {
    return factor(f, a);
  } else if constexpr (F::is_finite_field) {
    return factor(f, a);
  } else {
    fail(ErrorKind::Unsupported, "factorization over this field is not supported");
  }
}

}  // namespace pencilform
