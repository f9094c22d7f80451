#pragma once

// Binary forms sum_i c_i X0^i X1^(D-i), closed points of P^1 and the
// discriminant subscheme as a list of (point, multiplicity).

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "pencilform/factor_rational.hpp"

namespace pencilform {

template <Field F>
struct BinaryForm {
  using Elem = typename F::Elem;
  unsigned degree = 0;
  std::vector<Elem> c;  // c[i] multiplies X0^i X1^(degree - i); size degree + 1

  bool is_zero(const F& f) const {
    return std::all_of(c.begin(), c.end(), [&](const Elem& v) { return f.is_zero(v); });
  }
};

namespace form {

template <Field F>
BinaryForm<F> zero(const F& f, unsigned degree) {
  return {degree, std::vector<typename F::Elem>(degree + 1, f.zero())};
}

/// Homogenizes a polynomial in X = X0/X1 to the given degree.
template <Field F>
BinaryForm<F> from_poly(const F& f, const Poly<F>& a, unsigned degree) {
  if (a.degree() > static_cast<long>(degree)) fail(ErrorKind::SizeMismatch, "polynomial degree exceeds form degree");
  auto r = zero(f, degree);
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  return r;
}

/// f(X, 1).
template <Field F>
Poly<F> dehomogenize(const F& f, const BinaryForm<F>& a) {
  return poly::make(f, a.c);
}

/// f(1, Y): coefficients reversed.
template <Field F>
Poly<F> dehomogenize_at_infinity(const F& f, const BinaryForm<F>& a) {
  std::vector<typename F::Elem> r(a.c.rbegin(), a.c.rend());
  return poly::make(f, std::move(r));
}

template <Field F>
bool equal(const F& f, const BinaryForm<F>& a, const BinaryForm<F>& b) {
  if (a.degree != b.degree) return false;
  for (std::size_t i = 0; i < a.c.size(); ++i)
    if (!f.equal(a.c[i], b.c[i])) return false;
  return true;
}

template <Field F>
BinaryForm<F> mul(const F& f, const BinaryForm<F>& a, const BinaryForm<F>& b) {
  auto r = zero(f, a.degree + b.degree);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = f.add(r.c[i + j], f.mul(a.c[i], b.c[j]));
  return r;
}

template <Field F>
BinaryForm<F> scale(const F& f, const BinaryForm<F>& a, const typename F::Elem& s) {
  auto r = a;
  for (auto& v : r.c) v = f.mul(v, s);
  return r;
}

template <Field F>
BinaryForm<F> pow(const F& f, const BinaryForm<F>& a, unsigned e) {
  BinaryForm<F> r{0, {f.one()}};
  for (unsigned i = 0; i < e; ++i) r = mul(f, r, a);
  return r;
}

template <Field F>
typename F::Elem eval(const F& f, const BinaryForm<F>& a, const typename F::Elem& x0, const typename F::Elem& x1) {
  typename F::Elem r = f.zero();
  for (std::size_t i = 0; i < a.c.size(); ++i)
    r = f.add(r, f.mul(a.c[i], f.mul(power(f, x0, static_cast<std::uint64_t>(i)),
                                      power(f, x1, static_cast<std::uint64_t>(a.degree - i)))));
  return r;
}

/// The linear form v X0 - u X1 vanishing at (u : v).
template <Field F>
BinaryForm<F> linear(const F& f, const typename F::Elem& u, const typename F::Elem& v) {
  return {1, {f.neg(u), v}};
}

template <Field F>
std::string to_string(const F& f, const BinaryForm<F>& a) {
  std::string s;
  for (std::size_t i = a.c.size(); i-- > 0;) {
    if (f.is_zero(a.c[i])) continue;
    if (!s.empty()) s += " + ";
    std::string mono;
    const std::size_t e0 = i, e1 = a.degree - i;
    if (e0) mono += "X0" + (e0 > 1 ? "^" + std::to_string(e0) : std::string());
    if (e1) mono += (mono.empty() ? "" : "*") + ("X1" + (e1 > 1 ? "^" + std::to_string(e1) : std::string()));
    if (mono.empty()) s += f.to_string(a.c[i]);
    else if (f.equal(a.c[i], f.one())) s += mono;
    else s += "(" + f.to_string(a.c[i]) + ")*" + mono;
  }
  return s.empty() ? "0" : s;
}

/// f = X1^s g with g not divisible by X1; C_f is the X0-leading coefficient of g.
template <Field F>
struct Split {
  unsigned s;
  BinaryForm<F> g;
  typename F::Elem c_f;
};

template <Field F>
Split<F> split(const F& f, const BinaryForm<F>& a) {
  if (a.is_zero(f)) fail(ErrorKind::ZeroForm, "form_split of the zero form");
  unsigned top = a.degree;
  while (f.is_zero(a.c[top])) --top;
  BinaryForm<F> g{top, std::vector<typename F::Elem>(a.c.begin(), a.c.begin() + top + 1)};
  return {a.degree - top, g, a.c[top]};
}

}  // namespace form

/// A closed point of P^1: either the point X1 = 0, or the zero set of a monic
/// irreducible pi(X0/X1).
template <Field F>
struct PointOnP1 {
  bool infinity = false;
  Poly<F> pi;  // monic irreducible in X = X0/X1; equals X for the infinity point's chart

  unsigned degree() const { return infinity ? 1u : static_cast<unsigned>(pi.degree()); }
};

namespace point {

template <Field F>
PointOnP1<F> infinity(const F& f) { return {true, poly::x(f)}; }

template <Field F>
PointOnP1<F> finite(const F& f, const Poly<F>& pi) { return {false, poly::monic(f, pi)}; }

/// The point (u : v) with (u, v) != (0, 0).
template <Field F>
PointOnP1<F> rational(const F& f, const typename F::Elem& u, const typename F::Elem& v) {
  if (f.is_zero(v)) {
    if (f.is_zero(u)) fail(ErrorKind::ZeroPoint, "(0, 0) is not a point of P^1");
    return infinity(f);
  }
  return finite(f, poly::make(f, {f.neg(f.div(u, v)), f.one()}));
}

template <Field F>
BinaryForm<F> to_form(const F& f, const PointOnP1<F>& p) {
  if (p.infinity) return {1, {f.one(), f.zero()}};
  return form::from_poly(f, p.pi, static_cast<unsigned>(p.pi.degree()));
}

template <Field F>
bool equal(const F& f, const PointOnP1<F>& a, const PointOnP1<F>& b) {
  return a.infinity == b.infinity && poly::equal(f, a.pi, b.pi);
}

/// Canonical order: degree, then the coefficient vector of the form.
template <Field F>
int compare(const F& f, const PointOnP1<F>& a, const PointOnP1<F>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  auto fa = to_form(f, a), fb = to_form(f, b);
  for (std::size_t i = 0; i < fa.c.size(); ++i) {
    int r = f.compare(fa.c[i], fb.c[i]);
    if (r) return r;
  }
  return 0;
}

template <Field F>
std::string to_string(const F& f, const PointOnP1<F>& p) {
  return form::to_string(f, to_form(f, p));
}

}  // namespace point

template <Field F>
struct SchemeS {
  std::vector<std::pair<PointOnP1<F>, unsigned>> points;  // canonical order
  typename F::Elem unit;                                   // f = unit * prod form(point)^m

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [p, m] : points) d += p.degree() * m;
    return d;
  }
  bool reduced() const {
    return std::all_of(points.begin(), points.end(), [](const auto& pm) { return pm.second == 1; });
  }
};

template <Field F>
SchemeS<F> scheme_of(const F& f, const BinaryForm<F>& a) {
  auto sp = form::split(f, a);
  SchemeS<F> s;
  auto g = form::dehomogenize(f, sp.g);
  if (g.degree() > 0) {
    auto fa = factor_any(f, g);
    s.unit = fa.unit;
    for (const auto& [pi, m] : fa.factors) s.points.emplace_back(point::finite(f, pi), m);
  } else {
    s.unit = sp.c_f;
  }
  if (sp.s > 0) s.points.emplace_back(point::infinity(f), sp.s);
  std::sort(s.points.begin(), s.points.end(),
            [&](const auto& x, const auto& y) { return point::compare(f, x.first, y.first) < 0; });
  return s;
}

/// Equality of the underlying subschemes (ignores the unit).
template <Field F>
bool same_scheme(const F& f, const SchemeS<F>& a, const SchemeS<F>& b) {
  if (a.points.size() != b.points.size()) return false;
  for (std::size_t i = 0; i < a.points.size(); ++i)
    if (a.points[i].second != b.points[i].second || !point::equal(f, a.points[i].first, b.points[i].first))
      return false;
  return true;
}

template <Field F>
BinaryForm<F> form_of(const F& f, const SchemeS<F>& s) {
  BinaryForm<F> r{0, {s.unit}};
  for (const auto& [p, m] : s.points) r = form::mul(f, r, form::pow(f, point::to_form(f, p), m));
  return r;
}

}  // namespace pencilform
