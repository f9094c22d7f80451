#pragma once

// Explicit symmetric pairs: the Hankel-type pair with det(X M0 + M1) = f, its
// homogeneous variant, the Delta/Lambda Segre blocks, and realizations of a
// prescribed module type.

#include <vector>

#include "pencilform/module_type.hpp"

namespace pencilform {

/// (-1)^{(r-1)r/2}.
template <Field F>
typename F::Elem hankel_sign(const F& f, long r) {
  return sign_power(f, (r - 1) * r / 2);
}

/// Delta_r: ones on the antidiagonal i + j = r - 1.
template <Field F>
Matrix<F> delta_matrix(const F& f, std::size_t r) {
  auto m = mat::zero(f, r, r);
  for (std::size_t i = 0; i < r; ++i) m(i, r - 1 - i) = f.one();
  return m;
}

/// Lambda_r: ones on the shifted antidiagonal i + j = r.
template <Field F>
Matrix<F> lambda_matrix(const F& f, std::size_t r) {
  auto m = mat::zero(f, r, r);
  for (std::size_t i = 1; i < r; ++i) m(i, r - i) = f.one();
  return m;
}

/// For f of degree r with X^r-coefficient (-1)^{(r-1)r/2}: symmetric M0, M1
/// with det(X M0 + M1) = f, built from t_k = coefficient of X^{r-1} in
/// X^k mod f as (M0)_{ij} = t_{i+j}, (M1)_{ij} = -t_{i+j+1}.
template <Field F>
Pencil<F> lemma_a1_pair(const F& f, const Poly<F>& g) {
  const long r = g.degree();
  if (r < 1) fail(ErrorKind::InvalidInput, "need a polynomial of positive degree");
  if (!f.equal(g.lead(), hankel_sign(f, r)))
    fail(ErrorKind::LeadingCoefficientMismatch, "leading coefficient must be (-1)^((r-1)r/2)");
  std::vector<typename F::Elem> t;
  Poly<F> pw = poly::one(f);
  const auto x = poly::x(f);
  for (long k = 0; k < 2 * r; ++k) {
    t.push_back(poly::coeff(f, pw, static_cast<std::size_t>(r - 1)));
    pw = poly::mulmod(f, pw, x, g);
  }
  auto m0 = mat::zero(f, r, r), m1 = mat::zero(f, r, r);
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < r; ++j) {
      m0(i, j) = t[i + j];
      m1(i, j) = f.neg(t[i + j + 1]);
    }
  return make_pencil(f, std::move(m0), std::move(m1));
}

/// Companion matrix of a monic polynomial (subdiagonal ones, last column
/// -c_0, ..., -c_{r-1}).
template <Field F>
Matrix<F> companion(const F& f, const Poly<F>& monic_g) {
  const std::size_t r = static_cast<std::size_t>(monic_g.degree());
  auto c = mat::zero(f, r, r);
  for (std::size_t i = 1; i < r; ++i) c(i, i - 1) = f.one();
  for (std::size_t i = 0; i < r; ++i) c(i, r - 1) = f.neg(monic_g.c[i]);
  return c;
}

/// Homogeneous variant: f = X1^s g where the X0-leading coefficient of g is
/// (-1)^{(r-1)r/2}. Output is (N0 + A0, N1 + A1) block-diagonally with
/// N0 = Lambda_s, N1 = (-1)^{r-s} Delta_s and (A0, A1) the Hankel pair of a
/// signed g(X, 1); det(X0 M0 + X1 M1) = f and the pair is free.
template <Field F>
Pencil<F> lemma_a2_pair(const F& f, const BinaryForm<F>& fm) {
  const long r = fm.degree;
  if (r < 1) fail(ErrorKind::InvalidInput, "need a form of positive degree");
  auto sp = form::split(f, fm);
  const long s = sp.s;
  if (!f.equal(sp.c_f, hankel_sign(f, r)))
    fail(ErrorKind::CoefficientConventionViolated, "X0-leading coefficient of g must be (-1)^((r-1)r/2)");
  std::vector<Matrix<F>> b0, b1;
  if (s > 0) {
    b0.push_back(lambda_matrix(f, s));
    b1.push_back(mat::scale(f, delta_matrix(f, s), sign_power(f, r - s)));
  }
  if (r - s > 0) {
    auto eps = sign_power(f, (r - s - 1) * (r - s) / 2 + (r - 1) * r / 2);
    auto a = lemma_a1_pair(f, poly::scale(f, form::dehomogenize(f, sp.g), eps));
    b0.push_back(a.m0);
    b1.push_back(a.m1);
  }
  return make_pencil(f, mat::block_diag(f, b0), mat::block_diag(f, b1));
}

/// Segre block at (u : v) of size e, with discriminant
/// (-1)^{(e-1)e/2} (v X0 - u X1)^e. The pencil is (v X0 - u X1) Delta_e +
/// mu Lambda_e for a linear form mu not vanishing at the point:
/// (v Delta_e + Lambda_e, -u Delta_e) when u != 0, else (v Delta_e, Lambda_e).
/// The first form alone is not free at (0 : 1) once e >= 2.
template <Field F>
Pencil<F> delta_lambda_block(const F& f, std::size_t e, const typename F::Elem& u, const typename F::Elem& v) {
  if (f.is_zero(u) && f.is_zero(v)) fail(ErrorKind::ZeroPoint, "(0, 0) is not a point of P^1");
  if (e == 0) fail(ErrorKind::InvalidInput, "block size must be positive");
  auto d = delta_matrix(f, e), l = lambda_matrix(f, e);
  if (f.is_zero(u)) return make_pencil(f, mat::scale(f, d, v), l);
  return make_pencil(f, mat::add(f, mat::scale(f, d, v), l), mat::scale(f, d, f.neg(u)));
}

/// Rational coordinates (u : v) of a degree-one point.
template <Field F>
std::pair<typename F::Elem, typename F::Elem> coordinates(const F& f, const PointOnP1<F>& p) {
  if (p.infinity) return {f.one(), f.zero()};
  if (p.pi.degree() != 1) fail(ErrorKind::NonRationalPoint, "point is not rational");
  return {f.neg(p.pi.c[0]), f.one()};
}

template <Field F>
struct SegreSpecEntry {
  PointOnP1<F> point;
  std::vector<unsigned> partition;
};

template <Field F>
using SegreSpec = std::vector<SegreSpecEntry<F>>;

/// Block sum of Delta/Lambda blocks, one per part.
template <Field F>
Pencil<F> segre_pair(const F& f, const SegreSpec<F>& spec) {
  std::vector<Matrix<F>> b0, b1;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (point::equal(f, spec[i].point, spec[j].point)) fail(ErrorKind::InvalidInput, "points must be distinct");
    auto [u, v] = coordinates(f, spec[i].point);
    for (unsigned e : spec[i].partition) {
      auto blk = delta_lambda_block(f, e, u, v);
      b0.push_back(blk.m0);
      b1.push_back(blk.m1);
    }
  }
  if (b0.empty()) fail(ErrorKind::InvalidInput, "empty Segre specification");
  return make_pencil(f, mat::block_diag(f, b0), mat::block_diag(f, b1));
}

/// One symmetric pair realizing a given module type: for each point and each
/// part e, the homogeneous Hankel pair of a unit multiple of form(point)^e.
/// Only the GL-orbit of the output is canonical.
template <Field F>
Pencil<F> realize_pair(const F& f, const ModuleType<F>& t) {
  std::vector<Matrix<F>> b0, b1;
  for (const auto& entry : t.entries) {
    for (unsigned e : entry.partition) {
      auto fm = form::pow(f, point::to_form(f, entry.point), e);
      auto c_f = form::split(f, fm).c_f;
      fm = form::scale(f, fm, f.div(hankel_sign(f, static_cast<long>(fm.degree)), c_f));
      auto blk = lemma_a2_pair(f, fm);
      b0.push_back(blk.m0);
      b1.push_back(blk.m1);
    }
  }
  if (b0.empty()) fail(ErrorKind::InvalidInput, "empty module type");
  return make_pencil(f, mat::block_diag(f, b0), mat::block_diag(f, b1));
}

}  // namespace pencilform
