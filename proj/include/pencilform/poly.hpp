#pragma once

// Dense univariate polynomials over a Field, constant term first.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pencilform/field.hpp"

namespace pencilform {

template <Field F>
struct Poly {
  using Elem = typename F::Elem;
  std::vector<Elem> c;  // c[i] is the coefficient of X^i; no trailing zeros

  bool is_zero() const { return c.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c.size()) - 1; }
  const Elem& lead() const { return c.back(); }
};

namespace poly {

template <Field F>
void normalize(const F& f, Poly<F>& a) {
  while (!a.c.empty() && f.is_zero(a.c.back())) a.c.pop_back();
}

template <Field F>
Poly<F> make(const F& f, std::vector<typename F::Elem> coeffs) {
  Poly<F> a{std::move(coeffs)};
  normalize(f, a);
  return a;
}

template <Field F>
Poly<F> constant(const F& f, const typename F::Elem& v) {
  return make(f, {v});
}

template <Field F>
Poly<F> one(const F& f) { return constant(f, f.one()); }

/// The monomial v X^k.
template <Field F>
Poly<F> monomial(const F& f, const typename F::Elem& v, std::size_t k) {
  std::vector<typename F::Elem> c(k + 1, f.zero());
  c[k] = v;
  return make(f, std::move(c));
}

template <Field F>
Poly<F> x(const F& f) { return monomial(f, f.one(), 1); }

template <Field F>
typename F::Elem coeff(const F& f, const Poly<F>& a, std::size_t i) {
  return i < a.c.size() ? a.c[i] : f.zero();
}

template <Field F>
bool equal(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.c.size() != b.c.size()) return false;
  for (std::size_t i = 0; i < a.c.size(); ++i)
    if (!f.equal(a.c[i], b.c[i])) return false;
  return true;
}

/// Total order: degree first, then coefficients from the constant term up.
template <Field F>
int compare(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.c.size() != b.c.size()) return a.c.size() < b.c.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    int r = f.compare(a.c[i], b.c[i]);
    if (r != 0) return r;
  }
  return 0;
}

template <Field F>
Poly<F> add(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r;
  r.c.resize(std::max(a.c.size(), b.c.size()), f.zero());
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = f.add(coeff(f, a, i), coeff(f, b, i));
  normalize(f, r);
  return r;
}

template <Field F>
Poly<F> sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r;
  r.c.resize(std::max(a.c.size(), b.c.size()), f.zero());
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = f.sub(coeff(f, a, i), coeff(f, b, i));
  normalize(f, r);
  return r;
}

template <Field F>
Poly<F> neg(const F& f, const Poly<F>& a) {
  Poly<F> r = a;
  for (auto& v : r.c) v = f.neg(v);
  return r;
}

template <Field F>
Poly<F> scale(const F& f, const Poly<F>& a, const typename F::Elem& s) {
  if (f.is_zero(s)) return {};
  Poly<F> r = a;
  for (auto& v : r.c) v = f.mul(v, s);
  normalize(f, r);
  return r;
}

template <Field F>
Poly<F> mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Poly<F> r;
  r.c.assign(a.c.size() + b.c.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (f.is_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = f.add(r.c[i + j], f.mul(a.c[i], b.c[j]));
  }
  normalize(f, r);
  return r;
}

template <Field F>
Poly<F> shift(const F& f, const Poly<F>& a, std::size_t k) {
  if (a.is_zero()) return {};
  Poly<F> r;
  r.c.assign(k, f.zero());
  r.c.insert(r.c.end(), a.c.begin(), a.c.end());
  return r;
}

template <Field F>
Poly<F> pow(const F& f, const Poly<F>& a, std::uint64_t e) {
  Poly<F> r = one(f), b = a;
  while (e > 0) {
    if (e & 1) r = mul(f, r, b);
    e >>= 1;
    if (e) b = mul(f, b, b);
  }
  return r;
}

/// Quotient and remainder; throws ZeroPolynomial on division by zero.
template <Field F>
std::pair<Poly<F>, Poly<F>> divmod(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) fail(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {Poly<F>{}, a};
  auto li = f.inv(b.lead());
  std::vector<typename F::Elem> r = a.c;
  std::vector<typename F::Elem> q(a.c.size() - b.c.size() + 1, f.zero());
  const std::size_t db = b.c.size() - 1;
  for (std::size_t i = r.size(); i-- > db;) {
    if (f.is_zero(r[i])) continue;
    auto t = f.mul(r[i], li);
    q[i - db] = t;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(t, b.c[j]));
  }
  r.resize(db);
  return {make(f, std::move(q)), make(f, std::move(r))};
}

template <Field F>
Poly<F> rem(const F& f, const Poly<F>& a, const Poly<F>& b) { return divmod(f, a, b).second; }

template <Field F>
Poly<F> quo(const F& f, const Poly<F>& a, const Poly<F>& b) { return divmod(f, a, b).first; }

template <Field F>
bool divides(const F& f, const Poly<F>& d, const Poly<F>& a) { return rem(f, a, d).is_zero(); }

template <Field F>
Poly<F> monic(const F& f, const Poly<F>& a) {
  if (a.is_zero()) return a;
  return scale(f, a, f.inv(a.lead()));
}

/// Monic gcd (zero if both inputs are zero).
template <Field F>
Poly<F> gcd(const F& f, Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    auto r = rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

/// Returns g = gcd(a, b) monic together with s, t such that s a + t b = g.
template <Field F>
struct XGcd {
  Poly<F> g, s, t;
};

template <Field F>
XGcd<F> xgcd(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r0 = a, r1 = b, s0 = one(f), s1{}, t0{}, t1 = one(f);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(f, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = sub(f, s0, mul(f, q, s1));
    auto t2 = sub(f, t0, mul(f, q, t1));
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  auto li = f.inv(r0.lead());
  return {scale(f, r0, li), scale(f, s0, li), scale(f, t0, li)};
}

template <Field F>
Poly<F> derivative(const F& f, const Poly<F>& a) {
  if (a.c.size() <= 1) return {};
  std::vector<typename F::Elem> d(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i) d[i - 1] = f.mul(f.from_int(static_cast<long long>(i)), a.c[i]);
  return make(f, std::move(d));
}

template <Field F>
typename F::Elem eval(const F& f, const Poly<F>& a, const typename F::Elem& x) {
  typename F::Elem r = f.zero();
  for (std::size_t i = a.c.size(); i-- > 0;) r = f.add(f.mul(r, x), a.c[i]);
  return r;
}

/// a(b(X)).
template <Field F>
Poly<F> compose(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r;
  for (std::size_t i = a.c.size(); i-- > 0;) r = add(f, mul(f, r, b), constant(f, a.c[i]));
  return r;
}

template <Field F>
Poly<F> mulmod(const F& f, const Poly<F>& a, const Poly<F>& b, const Poly<F>& m) {
  return rem(f, mul(f, a, b), m);
}

template <Field F>
Poly<F> powmod(const F& f, Poly<F> a, const mpz_class& e, const Poly<F>& m) {
  Poly<F> r = rem(f, one(f), m);
  a = rem(f, a, m);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (sgn(e) == 0) return r;
  for (std::size_t i = bits; i-- > 0;) {
    r = mulmod(f, r, r, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(f, r, a, m);
  }
  return r;
}

/// Inverse of a modulo m; throws NonUnit if gcd(a, m) != 1.
template <Field F>
Poly<F> invmod(const F& f, const Poly<F>& a, const Poly<F>& m) {
  auto x = xgcd(f, rem(f, a, m), m);
  if (x.g.degree() != 0) fail(ErrorKind::NonUnit, "polynomial is not invertible modulo m");
  return rem(f, x.s, m);
}

template <Field F>
std::string to_string(const F& f, const Poly<F>& a, const std::string& var = "X") {
  if (a.is_zero()) return "0";
  std::string s;
  for (std::size_t i = a.c.size(); i-- > 0;) {
    if (f.is_zero(a.c[i])) continue;
    if (!s.empty()) s += " + ";
    std::string cs = f.to_string(a.c[i]);
    bool unit = f.equal(a.c[i], f.one());
    if (i == 0) s += cs;
    else {
      if (!unit) s += "(" + cs + ")*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace poly
}  // namespace pencilform
