#pragma once

// Truncated power series a_0 + a_1 s + ... + a_{N-1} s^{N-1} over a field,
// stored as a vector of exactly N coefficients.

#include <vector>

#include "pencilform/field.hpp"

namespace pencilform::series {

template <Field F>
using Series = std::vector<typename F::Elem>;

template <Field F>
Series<F> zero(const F& f, std::size_t prec) { return Series<F>(prec, f.zero()); }

template <Field F>
Series<F> constant(const F& f, const typename F::Elem& c, std::size_t prec) {
  auto r = zero(f, prec);
  if (prec) r[0] = c;
  return r;
}

/// Index of the first nonzero coefficient, or the precision if all vanish.
template <Field F>
std::size_t valuation(const F& f, const Series<F>& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!f.is_zero(a[i])) return i;
  return a.size();
}

template <Field F>
bool is_zero(const F& f, const Series<F>& a) { return valuation(f, a) == a.size(); }

template <Field F>
bool equal(const F& f, const Series<F>& a, const Series<F>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!f.equal(a[i], b[i])) return false;
  return true;
}

template <Field F>
Series<F> add(const F& f, const Series<F>& a, const Series<F>& b) {
  Series<F> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

template <Field F>
Series<F> sub(const F& f, const Series<F>& a, const Series<F>& b) {
  Series<F> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

template <Field F>
Series<F> scale(const F& f, const Series<F>& a, const typename F::Elem& c) {
  Series<F> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
  return r;
}

template <Field F>
Series<F> mul(const F& f, const Series<F>& a, const Series<F>& b) {
  const std::size_t n = a.size();
  auto r = zero(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; i + j < n; ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  return r;
}

/// a / s^v, padding the unknown top coefficients with zeros.
template <Field F>
Series<F> shift_down(const F& f, const Series<F>& a, std::size_t v) {
  auto r = zero(f, a.size());
  for (std::size_t i = v; i < a.size(); ++i) r[i - v] = a[i];
  return r;
}

/// Inverse of a series with nonzero constant term.
template <Field F>
Series<F> inverse(const F& f, const Series<F>& a) {
  const std::size_t n = a.size();
  if (f.is_zero(a[0])) fail(ErrorKind::NonUnit, "series with zero constant term is not invertible");
  auto r = zero(f, n);
  auto i0 = f.inv(a[0]);
  r[0] = i0;
  for (std::size_t k = 1; k < n; ++k) {
    typename F::Elem acc = f.zero();
    for (std::size_t j = 1; j <= k; ++j) acc = f.add(acc, f.mul(a[j], r[k - j]));
    r[k] = f.neg(f.mul(acc, i0));
  }
  return r;
}

/// c_0 + c_1 (x0 + s) + c_2 (x0 + s)^2 + ...: a polynomial over the base
/// expanded at x0, with coefficients embedded by `lift`.
template <Field R, class Coeffs, class Lift>
Series<R> expand_at(const R& r, const Coeffs& c, const typename R::Elem& x0, std::size_t prec, Lift lift) {
  // Horner in the series ring
  auto res = zero(r, prec);
  auto lin = zero(r, prec);
  if (prec) lin[0] = x0;
  if (prec > 1) lin[1] = r.one();
  for (std::size_t i = c.size(); i-- > 0;) {
    res = mul(r, res, lin);
    res[0] = r.add(res[0], lift(c[i]));
  }
  return res;
}

}  // namespace pencilform::series
