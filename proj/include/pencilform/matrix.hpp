#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pencilform/field.hpp"

namespace pencilform {

/// Dense row-major matrix over a Field.
template <Field F>
struct Matrix {
  using Elem = typename F::Elem;
  std::size_t rows = 0, cols = 0;
  std::vector<Elem> a;

  Elem& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  bool square() const { return rows == cols; }
};

namespace mat {

template <Field F>
Matrix<F> zero(const F& f, std::size_t r, std::size_t c) {
  return Matrix<F>{r, c, std::vector<typename F::Elem>(r * c, f.zero())};
}

template <Field F>
Matrix<F> identity(const F& f, std::size_t n) {
  auto m = zero(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

template <Field F>
Matrix<F> from_rows(const F& f, const std::vector<std::vector<typename F::Elem>>& rows) {
  Matrix<F> m = zero(f, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols) fail(ErrorKind::SizeMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

template <Field F>
Matrix<F> from_ints(const F& f, const std::vector<std::vector<long long>>& rows) {
  Matrix<F> m = zero(f, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = f.from_int(rows[i][j]);
  return m;
}

template <Field F>
bool equal(const F& f, const Matrix<F>& x, const Matrix<F>& y) {
  if (x.rows != y.rows || x.cols != y.cols) return false;
  for (std::size_t i = 0; i < x.a.size(); ++i)
    if (!f.equal(x.a[i], y.a[i])) return false;
  return true;
}

template <Field F>
bool is_zero(const F& f, const Matrix<F>& x) {
  for (const auto& v : x.a)
    if (!f.is_zero(v)) return false;
  return true;
}

template <Field F>
Matrix<F> transpose(const Matrix<F>& x) {
  Matrix<F> t{x.cols, x.rows, std::vector<typename F::Elem>(x.a.size())};
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) t(j, i) = x(i, j);
  return t;
}

template <Field F>
bool is_symmetric(const F& f, const Matrix<F>& x) {
  if (!x.square()) return false;
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = i + 1; j < x.cols; ++j)
      if (!f.equal(x(i, j), x(j, i))) return false;
  return true;
}

template <Field F>
Matrix<F> add(const F& f, const Matrix<F>& x, const Matrix<F>& y) {
  if (x.rows != y.rows || x.cols != y.cols) fail(ErrorKind::SizeMismatch, "matrix add");
  Matrix<F> r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = f.add(x.a[i], y.a[i]);
  return r;
}

template <Field F>
Matrix<F> sub(const F& f, const Matrix<F>& x, const Matrix<F>& y) {
  if (x.rows != y.rows || x.cols != y.cols) fail(ErrorKind::SizeMismatch, "matrix sub");
  Matrix<F> r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = f.sub(x.a[i], y.a[i]);
  return r;
}

template <Field F>
Matrix<F> scale(const F& f, const Matrix<F>& x, const typename F::Elem& s) {
  Matrix<F> r = x;
  for (auto& v : r.a) v = f.mul(v, s);
  return r;
}

template <Field F>
Matrix<F> mul(const F& f, const Matrix<F>& x, const Matrix<F>& y) {
  if (x.cols != y.rows) fail(ErrorKind::SizeMismatch, "matrix mul");
  auto r = zero(f, x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const auto& xik = x(i, k);
      if (f.is_zero(xik)) continue;
      for (std::size_t j = 0; j < y.cols; ++j) r(i, j) = f.add(r(i, j), f.mul(xik, y(k, j)));
    }
  return r;
}

/// a X + b Y.
template <Field F>
Matrix<F> combine(const F& f, const typename F::Elem& a, const Matrix<F>& x,
                  const typename F::Elem& b, const Matrix<F>& y) {
  return add(f, scale(f, x, a), scale(f, y, b));
}

template <Field F>
Matrix<F> block_diag(const F& f, const std::vector<Matrix<F>>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows;
  auto r = zero(f, n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows; ++i)
      for (std::size_t j = 0; j < b.cols; ++j) r(off + i, off + j) = b(i, j);
    off += b.rows;
  }
  return r;
}

/// Row echelon form in place; returns rank and the determinant factor
/// (product of pivots with row-swap signs) for square inputs.
template <Field F>
std::size_t eliminate(const F& f, Matrix<F>& m, typename F::Elem* det = nullptr) {
  std::size_t rank = 0;
  typename F::Elem d = f.one();
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t piv = rank;
    while (piv < m.rows && f.is_zero(m(piv, col))) ++piv;
    if (piv == m.rows) { d = f.zero(); continue; }
    if (piv != rank) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(rank, j));
      d = f.neg(d);
    }
    d = f.mul(d, m(rank, col));
    auto inv = f.inv(m(rank, col));
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      if (f.is_zero(m(i, col))) continue;
      auto t = f.mul(m(i, col), inv);
      for (std::size_t j = col; j < m.cols; ++j) m(i, j) = f.sub(m(i, j), f.mul(t, m(rank, j)));
    }
    ++rank;
  }
  if (det) *det = (rank == m.rows && m.rows == m.cols) ? d : f.zero();
  return rank;
}

template <Field F>
typename F::Elem det(const F& f, Matrix<F> m) {
  if (!m.square()) fail(ErrorKind::SizeMismatch, "determinant of a non-square matrix");
  if (m.rows == 0) return f.one();
  typename F::Elem d;
  eliminate(f, m, &d);
  return d;
}

template <Field F>
std::size_t rank(const F& f, Matrix<F> m) { return eliminate(f, m); }

/// Inverse by Gauss-Jordan; throws SingularMatrix.
template <Field F>
Matrix<F> inverse(const F& f, const Matrix<F>& x) {
  if (!x.square()) fail(ErrorKind::SizeMismatch, "inverse of a non-square matrix");
  const std::size_t n = x.rows;
  Matrix<F> m = x, r = identity(f, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && f.is_zero(m(piv, col))) ++piv;
    if (piv == n) fail(ErrorKind::SingularMatrix, "matrix is singular");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) { std::swap(m(piv, j), m(col, j)); std::swap(r(piv, j), r(col, j)); }
    auto inv = f.inv(m(col, col));
    for (std::size_t j = 0; j < n; ++j) { m(col, j) = f.mul(m(col, j), inv); r(col, j) = f.mul(r(col, j), inv); }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || f.is_zero(m(i, col))) continue;
      auto t = m(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = f.sub(m(i, j), f.mul(t, m(col, j)));
        r(i, j) = f.sub(r(i, j), f.mul(t, r(col, j)));
      }
    }
  }
  return r;
}

/// Maps every entry through `g`, which converts elements of F into G.
template <Field G, Field F, class Fn>
Matrix<G> map(const Matrix<F>& x, Fn&& g) {
  Matrix<G> r{x.rows, x.cols, {}};
  r.a.reserve(x.a.size());
  for (const auto& v : x.a) r.a.push_back(g(v));
  return r;
}

template <Field F>
std::string to_string(const F& f, const Matrix<F>& x) {
  std::string s = "[";
  for (std::size_t i = 0; i < x.rows; ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < x.cols; ++j) s += (j ? ", " : "") + f.to_string(x(i, j));
    s += "]";
  }
  return s + "]";
}

}  // namespace mat
}  // namespace pencilform
