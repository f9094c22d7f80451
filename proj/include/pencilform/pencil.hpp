#pragma once

// Pairs (M0, M1) of square matrices, their discriminant det(X0 M0 + X1 M1),
// the congruence action M.P = (P^t M0 P, P^t M1 P), and the freeness test.

#include <string>
#include <vector>

#include "pencilform/binary_form.hpp"
#include "pencilform/extension.hpp"
#include "pencilform/matrix.hpp"
#include "pencilform/smith.hpp"

namespace pencilform {

template <Field F>
struct Pencil {
  Matrix<F> m0, m1;
  bool symmetric = false;

  std::size_t size() const { return m0.rows; }
};

template <Field F>
Pencil<F> make_pencil(const F& f, Matrix<F> m0, Matrix<F> m1) {
  if (!m0.square() || !m1.square() || m0.rows != m1.rows || m0.rows == 0)
    fail(ErrorKind::SizeMismatch, "pencil matrices must be square of equal positive size");
  bool sym = mat::is_symmetric(f, m0) && mat::is_symmetric(f, m1);
  return {std::move(m0), std::move(m1), sym};
}

template <Field F>
bool equal(const F& f, const Pencil<F>& a, const Pencil<F>& b) {
  return mat::equal(f, a.m0, b.m0) && mat::equal(f, a.m1, b.m1);
}

/// Replaces (X0, X1) by (a X0 + c X1, b X0 + d X1): the new pair is
/// (a M0 + b M1, c M0 + d M1).
template <Field F>
Pencil<F> reparametrize(const F& f, const Pencil<F>& m, const typename F::Elem& a, const typename F::Elem& b,
                        const typename F::Elem& c, const typename F::Elem& d) {
  return make_pencil(f, mat::combine(f, a, m.m0, b, m.m1), mat::combine(f, c, m.m0, d, m.m1));
}

template <Field F>
Pencil<F> transpose(const F& f, const Pencil<F>& m) {
  return make_pencil(f, mat::transpose(m.m0), mat::transpose(m.m1));
}

/// The polynomial matrix X M0 + M1 (chart X1 = 1).
template <Field F>
PolyMatrix<F> affine_matrix(const F& f, const Matrix<F>& lin, const Matrix<F>& cst) {
  PolyMatrix<F> a(lin.rows, std::vector<Poly<F>>(lin.cols));
  for (std::size_t i = 0; i < lin.rows; ++i)
    for (std::size_t j = 0; j < lin.cols; ++j) a[i][j] = poly::make(f, {cst(i, j), lin(i, j)});
  return a;
}

/// det(X0 M0 + X1 M1) by fraction-free elimination on X M0 + M1.
template <Field F>
BinaryForm<F> disc_eliminate(const F& f, const Pencil<F>& m) {
  auto d = pmat::det(f, affine_matrix(f, m.m0, m.m1));
  return form::from_poly(f, d, static_cast<unsigned>(m.size()));
}

/// True when the field has at least `count` elements.
template <Field F>
bool has_elements(const F& f, std::uint64_t count) {
  if constexpr (F::is_finite_field) return f.size() >= count;
  else return true;
}

template <Field F>
typename F::Elem sample_point(const F& f, std::uint64_t i) {
  if constexpr (F::is_finite_field) return f.element(i);
  else return f.from_int(static_cast<long long>(i));
}

/// det(X0 M0 + X1 M1) by evaluation at n+2 points and Lagrange interpolation.
/// Requires |k| >= n + 2.
template <Field F>
BinaryForm<F> disc_interpolate(const F& f, const Pencil<F>& m) {
  const std::size_t D = m.size();
  if (!has_elements(f, D + 1)) fail(ErrorKind::Unsupported, "field too small for interpolation");
  std::vector<typename F::Elem> xs, ys;
  for (std::size_t i = 0; i <= D; ++i) {
    xs.push_back(sample_point(f, i));
    ys.push_back(mat::det(f, mat::combine(f, xs.back(), m.m0, f.one(), m.m1)));
  }
  Poly<F> r;
  for (std::size_t i = 0; i <= D; ++i) {
    Poly<F> basis = poly::one(f);
    typename F::Elem denom = f.one();
    for (std::size_t j = 0; j <= D; ++j) {
      if (i == j) continue;
      basis = poly::mul(f, basis, poly::make(f, {f.neg(xs[j]), f.one()}));
      denom = f.mul(denom, f.sub(xs[i], xs[j]));
    }
    r = poly::add(f, r, poly::scale(f, basis, f.div(ys[i], denom)));
  }
  return form::from_poly(f, r, static_cast<unsigned>(D));
}

/// The discriminant polynomial (possibly the zero form).
template <Field F>
BinaryForm<F> disc(const F& f, const Pencil<F>& m) {
  if (has_elements(f, m.size() + 1)) return disc_interpolate(f, m);
  return disc_eliminate(f, m);
}

template <Field F>
BinaryForm<F> nonzero_disc(const F& f, const Pencil<F>& m) {
  auto d = disc(f, m);
  if (d.is_zero(f)) fail(ErrorKind::VanishingDiscriminant, "the discriminant vanishes identically");
  return d;
}

/// M.P = (P^t M0 P, P^t M1 P).
template <Field F>
Pencil<F> act(const F& f, const Pencil<F>& m, const Matrix<F>& p) {
  if (!p.square() || p.rows != m.size()) fail(ErrorKind::SizeMismatch, "P has the wrong size");
  if (f.is_zero(mat::det(f, p))) fail(ErrorKind::SingularP, "P is singular");
  auto pt = mat::transpose(p);
  Pencil<F> r{mat::mul(f, pt, mat::mul(f, m.m0, p)), mat::mul(f, pt, mat::mul(f, m.m1, p)), m.symmetric};
  return r;
}

/// rank(a M0 + b M1) at a closed point, computed over its residue field.
template <Field F>
std::size_t rank_at(const F& f, const Pencil<F>& m, const PointOnP1<F>& pt) {
  if (pt.infinity) return mat::rank(f, m.m0);
  if (pt.pi.degree() == 1) {
    auto theta = f.neg(pt.pi.c[0]);
    return mat::rank(f, mat::combine(f, theta, m.m0, f.one(), m.m1));
  }
  ExtensionField<F> r(f, pt.pi);
  auto lift = [&](const typename F::Elem& v) { return r.embed(v); };
  auto a0 = mat::map<ExtensionField<F>>(m.m0, lift);
  auto a1 = mat::map<ExtensionField<F>>(m.m1, lift);
  return mat::rank(r, mat::combine(r, r.generator(), a0, r.one(), a1));
}

template <Field F>
SchemeS<F> scheme_of(const F& f, const Pencil<F>& m) {
  return scheme_of(f, nonzero_disc(f, m));
}

/// The associated module is free of rank one iff rank(a M0 + b M1) = n at
/// every point of the discriminant subscheme.
template <Field F>
bool is_free(const F& f, const Pencil<F>& m) {
  auto s = scheme_of(f, m);
  const std::size_t n = m.size() - 1;
  for (const auto& [pt, mult] : s.points)
    if (rank_at(f, m, pt) != n) return false;
  return true;
}

template <Field F>
bool scheme_is_reduced(const F& f, const Pencil<F>& m) {
  return scheme_of(f, m).reduced();
}

}  // namespace pencilform
