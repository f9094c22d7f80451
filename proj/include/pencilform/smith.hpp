#pragma once

// Smith normal form over K[X] with unimodular transforms: U A V = diag(d_i),
// d_1 | d_2 | ... monic.

#include <utility>
#include <vector>

#include "pencilform/poly.hpp"

namespace pencilform {

template <Field F>
using PolyMatrix = std::vector<std::vector<Poly<F>>>;

template <Field F>
struct SmithForm {
  PolyMatrix<F> u, v;
  std::vector<Poly<F>> d;
};

namespace pmat {

template <Field F>
PolyMatrix<F> identity(const F& f, std::size_t n) {
  PolyMatrix<F> m(n, std::vector<Poly<F>>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = poly::one(f);
  return m;
}

template <Field F>
PolyMatrix<F> mul(const F& f, const PolyMatrix<F>& a, const PolyMatrix<F>& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  PolyMatrix<F> r(n, std::vector<Poly<F>>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] = poly::add(f, r[i][j], poly::mul(f, a[i][l], b[l][j]));
    }
  return r;
}

/// Determinant by cofactor-free elimination over K(X), returned in K[X].
template <Field F>
Poly<F> det(const F& f, PolyMatrix<F> a);

}  // namespace pmat

/// Smith normal form. Pivots on a nonzero entry of minimal degree, ties broken
/// by the smallest (row, column). Throws SingularMatrix if det A = 0.
template <Field F>
SmithForm<F> smith(const F& f, PolyMatrix<F> a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) fail(ErrorKind::SizeMismatch, "smith needs a square matrix");
  auto u = pmat::identity(f, n), v = pmat::identity(f, n);
  auto swap_rows = [&](std::size_t i, std::size_t j) { std::swap(a[i], a[j]); std::swap(u[i], u[j]); };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < n; ++r) { std::swap(a[r][i], a[r][j]); std::swap(v[r][i], v[r][j]); }
  };
  // row_i -= q row_t
  auto row_sub = [&](std::size_t i, std::size_t t, const Poly<F>& q) {
    for (std::size_t c = 0; c < n; ++c) {
      if (!a[t][c].is_zero()) a[i][c] = poly::sub(f, a[i][c], poly::mul(f, q, a[t][c]));
      if (!u[t][c].is_zero()) u[i][c] = poly::sub(f, u[i][c], poly::mul(f, q, u[t][c]));
    }
  };
  auto col_sub = [&](std::size_t j, std::size_t t, const Poly<F>& q) {
    for (std::size_t r = 0; r < n; ++r) {
      if (!a[r][t].is_zero()) a[r][j] = poly::sub(f, a[r][j], poly::mul(f, q, a[r][t]));
      if (!v[r][t].is_zero()) v[r][j] = poly::sub(f, v[r][j], poly::mul(f, q, v[r][t]));
    }
  };

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      long best = -1;
      std::size_t bi = 0, bj = 0;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (!a[i][j].is_zero() && (best < 0 || a[i][j].degree() < best)) {
            best = a[i][j].degree();
            bi = i;
            bj = j;
          }
      if (best < 0) fail(ErrorKind::SingularMatrix, "polynomial matrix is singular");
      if (bi != t) swap_rows(bi, t);
      if (bj != t) swap_cols(bj, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a[i][t].is_zero()) continue;
        row_sub(i, t, poly::quo(f, a[i][t], a[t][t]));
        if (!a[i][t].is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j].is_zero()) continue;
        col_sub(j, t, poly::quo(f, a[t][j], a[t][t]));
        if (!a[t][j].is_zero()) clean = false;
      }
      if (!clean) continue;
      // pivot must divide the remaining block
      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!poly::divides(f, a[t][t], a[i][j])) { bad = i; break; }
      if (bad == n) break;
      for (std::size_t c = 0; c < n; ++c) {
        a[t][c] = poly::add(f, a[t][c], a[bad][c]);
        u[t][c] = poly::add(f, u[t][c], u[bad][c]);
      }
    }
    auto li = f.inv(a[t][t].lead());
    for (std::size_t c = 0; c < n; ++c) {
      a[t][c] = poly::scale(f, a[t][c], li);
      u[t][c] = poly::scale(f, u[t][c], li);
    }
  }
  SmithForm<F> r{std::move(u), std::move(v), {}};
  for (std::size_t i = 0; i < n; ++i) r.d.push_back(a[i][i]);
  return r;
}

namespace pmat {

template <Field F>
Poly<F> det(const F& f, PolyMatrix<F> a) {
  const std::size_t n = a.size();
  Poly<F> prev = poly::one(f);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = poly::quo(f, poly::sub(f, poly::mul(f, a[k][k], a[i][j]), poly::mul(f, a[i][k], a[k][j])), prev);
    prev = a[k][k];
  }
  if (n == 0) return poly::one(f);
  return negate ? poly::neg(f, a[n - 1][n - 1]) : a[n - 1][n - 1];
}

}  // namespace pmat

/// Multiplicity of the irreducible pi in a (a != 0).
template <Field F>
unsigned valuation(const F& f, Poly<F> a, const Poly<F>& pi) {
  unsigned v = 0;
  while (true) {
    auto [q, r] = poly::divmod(f, a, pi);
    if (!r.is_zero()) return v;
    a = std::move(q);
    ++v;
  }
}

}  // namespace pencilform
