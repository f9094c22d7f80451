#pragma once

// The algebra L = H^0(S, O_S) of a discriminant subscheme, presented by its
// local factors k_i[T]/(T^{m_i}), and the group
//   G_S = (k^x * L^x) / {(N(b)^{-1}, b^2)}
// acting simply transitively on SL-orbits of free symmetric pairs with
// scheme S; (u, a) multiplies the discriminant by u^2 N(a).
//
// Coordinates: the factor at a finite point with residue field k[X]/(pi)
// uses T = X - theta, theta the class of X; at the point X1 = 0 it uses
// T = X1/X0. A polynomial a(X') in a sheared chart X' = X0 / (X1 - c X0)
// is sent to each factor by substituting the local expansion of X'.

#include <optional>
#include <string>
#include <vector>

#include "pencilform/construct.hpp"
#include "pencilform/series.hpp"
#include "pencilform/symclass.hpp"

namespace pencilform {

template <Field F>
struct AlgebraFactor {
  PointOnP1<F> point;
  ResidueField<F> residue;
  unsigned m;
};

template <Field F>
struct FiniteAlgebra {
  F base;
  std::vector<AlgebraFactor<F>> factors;

  std::size_t dim() const {
    std::size_t d = 0;
    for (const auto& x : factors) d += x.residue.degree() * x.m;
    return d;
  }
};

/// One series (length m_i) per factor.
template <Field F>
using AlgebraElem = std::vector<series::Series<ResidueField<F>>>;

template <Field F>
FiniteAlgebra<F> algebra_of(const F& f, const SchemeS<F>& s) {
  FiniteAlgebra<F> l{f, {}};
  for (const auto& [pt, m] : s.points) l.factors.push_back({pt, residue_field(f, pt), m});
  return l;
}

namespace alg {

template <Field F>
AlgebraElem<F> one(const FiniteAlgebra<F>& l) {
  AlgebraElem<F> r;
  for (const auto& x : l.factors) r.push_back(series::constant(x.residue, x.residue.one(), x.m));
  return r;
}

/// Embeds a base-field constant.
template <Field F>
AlgebraElem<F> constant(const FiniteAlgebra<F>& l, const typename F::Elem& c) {
  AlgebraElem<F> r;
  for (const auto& x : l.factors) r.push_back(series::constant(x.residue, x.residue.embed(c), x.m));
  return r;
}

template <Field F>
bool is_unit(const FiniteAlgebra<F>& l, const AlgebraElem<F>& a) {
  for (std::size_t i = 0; i < l.factors.size(); ++i)
    if (l.factors[i].residue.is_zero(a[i][0])) return false;
  return true;
}

template <Field F>
bool equal(const FiniteAlgebra<F>& l, const AlgebraElem<F>& a, const AlgebraElem<F>& b) {
  for (std::size_t i = 0; i < l.factors.size(); ++i)
    if (!series::equal(l.factors[i].residue, a[i], b[i])) return false;
  return true;
}

template <Field F>
AlgebraElem<F> mul(const FiniteAlgebra<F>& l, const AlgebraElem<F>& a, const AlgebraElem<F>& b) {
  AlgebraElem<F> r;
  for (std::size_t i = 0; i < l.factors.size(); ++i) r.push_back(series::mul(l.factors[i].residue, a[i], b[i]));
  return r;
}

template <Field F>
AlgebraElem<F> inv(const FiniteAlgebra<F>& l, const AlgebraElem<F>& a) {
  if (!is_unit(l, a)) fail(ErrorKind::NonUnit, "algebra element is not a unit");
  AlgebraElem<F> r;
  for (std::size_t i = 0; i < l.factors.size(); ++i) r.push_back(series::inverse(l.factors[i].residue, a[i]));
  return r;
}

/// Coordinates over k: factor by factor, series coefficient by coefficient,
/// residue coordinate by coordinate.
template <Field F>
std::vector<typename F::Elem> flatten(const FiniteAlgebra<F>& l, const AlgebraElem<F>& a) {
  std::vector<typename F::Elem> v;
  for (std::size_t i = 0; i < l.factors.size(); ++i)
    for (const auto& c : a[i])
      for (const auto& x : c) v.push_back(x);
  return v;
}

template <Field F>
AlgebraElem<F> unflatten(const FiniteAlgebra<F>& l, const std::vector<typename F::Elem>& v) {
  AlgebraElem<F> r;
  std::size_t k = 0;
  for (const auto& x : l.factors) {
    series::Series<ResidueField<F>> s;
    for (unsigned j = 0; j < x.m; ++j) {
      typename ResidueField<F>::Elem e(x.residue.degree());
      for (auto& c : e) c = v[k++];
      s.push_back(std::move(e));
    }
    r.push_back(std::move(s));
  }
  return r;
}

/// |L| for a finite base field.
template <FiniteField F>
std::uint64_t size(const FiniteAlgebra<F>& l) {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    if (s > (std::uint64_t{1} << 40) / l.base.size()) fail(ErrorKind::InstanceTooLarge, "algebra too large to enumerate");
    s *= l.base.size();
  }
  return s;
}

/// The idx-th element in the enumeration order (flattened coordinates, first
/// coordinate least significant).
template <FiniteField F>
AlgebraElem<F> element(const FiniteAlgebra<F>& l, std::uint64_t idx) {
  std::vector<typename F::Elem> v;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    v.push_back(l.base.element(idx % l.base.size()));
    idx /= l.base.size();
  }
  return unflatten(l, v);
}

template <FiniteField F, class Fn>
void for_each_unit(const FiniteAlgebra<F>& l, Fn fn) {
  const auto n = size(l);
  for (std::uint64_t i = 0; i < n; ++i) {
    auto a = element(l, i);
    if (is_unit(l, a)) fn(a);
  }
}

template <Field F>
std::string to_string(const FiniteAlgebra<F>& l, const AlgebraElem<F>& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < l.factors.size(); ++i) {
    if (i) s += ", ";
    s += "[";
    for (std::size_t j = 0; j < a[i].size(); ++j) s += (j ? ", " : "") + l.factors[i].residue.to_string(a[i][j]);
    s += "]";
  }
  return s + ")";
}

}  // namespace alg

/// Determinant of multiplication by a on L over k: prod N_{k_i/k}(a_i(0))^{m_i}.
template <Field F>
typename F::Elem norm(const FiniteAlgebra<F>& l, const AlgebraElem<F>& a) {
  const F& f = l.base;
  auto r = f.one();
  for (std::size_t i = 0; i < l.factors.size(); ++i) {
    auto n0 = ext_norm(l.factors[i].residue, a[i][0]);
    r = f.mul(r, power(f, n0, static_cast<std::uint64_t>(l.factors[i].m)));
  }
  return r;
}

/// A coordinate change on P^1 making the pencil's first matrix invertible:
/// M' = (a M0 + b M1, c M0 + d M1). A point x' of S' corresponds to the point
/// (a x0' + c x1' : b x0' + d x1') of S.
template <Field F>
struct Chart {
  typename F::Elem a, b, c, d;
};

/// The first of (1, c; 0, 1) for c in element order (0 first), then the swap
/// (0, 1; 1, 0), with a M0 + b M1 invertible.
template <Field F>
Chart<F> chart_of(const F& f, const Pencil<F>& m) {
  std::uint64_t limit = 64;
  if constexpr (F::is_finite_field) limit = f.size();
  for (std::uint64_t i = 0; i < limit; ++i) {
    auto c = sample_point(f, i);
    if (!f.is_zero(mat::det(f, mat::combine(f, f.one(), m.m0, c, m.m1)))) return {f.one(), c, f.zero(), f.one()};
  }
  if (!f.is_zero(mat::det(f, m.m1))) return {f.zero(), f.one(), f.one(), f.zero()};
  fail(ErrorKind::PreconditionViolated, "every rational point lies on S; no affine chart");
}

template <Field F>
bool has_chart(const F& f, const Pencil<F>& m) {
  try {
    chart_of(f, m);
    return true;
  } catch (const Error&) {
    return false;
  }
}

template <Field F>
Pencil<F> to_chart(const F& f, const Pencil<F>& m, const Chart<F>& ch) {
  return reparametrize(f, m, ch.a, ch.b, ch.c, ch.d);
}

template <Field F>
Pencil<F> from_chart(const F& f, const Pencil<F>& m, const Chart<F>& ch) {
  auto det = f.sub(f.mul(ch.a, ch.d), f.mul(ch.b, ch.c));
  auto i = f.inv(det);
  return reparametrize(f, m, f.mul(ch.d, i), f.neg(f.mul(ch.b, i)), f.neg(f.mul(ch.c, i)), f.mul(ch.a, i));
}

/// Local expansion of the chart coordinate X' = x0'/x1' at each factor:
/// X' = (d y - c) / (a - b y) at a finite point y = theta + T, and
/// X' = (d - c T) / (a T - b) at the point X1 = 0.
template <Field F>
AlgebraElem<F> chart_coordinate(const FiniteAlgebra<F>& l, const Chart<F>& ch) {
  AlgebraElem<F> r;
  for (const auto& x : l.factors) {
    const auto& rf = x.residue;
    auto a = rf.embed(ch.a), b = rf.embed(ch.b), c = rf.embed(ch.c), d = rf.embed(ch.d);
    auto y = series::zero(rf, x.m);
    y[0] = x.point.infinity ? rf.zero() : rf.generator();
    if (x.m > 1) y[1] = rf.one();
    auto one = series::constant(rf, rf.one(), x.m);
    series::Series<ResidueField<F>> num, den;
    if (x.point.infinity) {
      num = series::sub(rf, series::scale(rf, one, d), series::scale(rf, y, c));
      den = series::sub(rf, series::scale(rf, y, a), series::scale(rf, one, b));
    } else {
      num = series::sub(rf, series::scale(rf, y, d), series::scale(rf, one, c));
      den = series::sub(rf, series::scale(rf, one, a), series::scale(rf, y, b));
    }
    if (rf.is_zero(den[0])) fail(ErrorKind::PreconditionViolated, "chart coordinate has a pole on S");
    r.push_back(series::mul(rf, num, series::inverse(rf, den)));
  }
  return r;
}

/// The function a(X') on S.
template <Field F>
AlgebraElem<F> from_chart_poly(const FiniteAlgebra<F>& l, const Poly<F>& a, const Chart<F>& c) {
  auto x = chart_coordinate(l, c);
  AlgebraElem<F> r = alg::constant(l, l.base.zero());
  for (std::size_t i = a.c.size(); i-- > 0;) {
    r = alg::mul(l, r, x);
    auto k = alg::constant(l, a.c[i]);
    for (std::size_t j = 0; j < l.factors.size(); ++j) r[j] = series::add(l.factors[j].residue, r[j], k[j]);
  }
  return r;
}

/// The polynomial of degree < dim L in X' representing a.
template <Field F>
Poly<F> to_chart_poly(const FiniteAlgebra<F>& l, const AlgebraElem<F>& a, const Chart<F>& c) {
  const F& f = l.base;
  const std::size_t d = l.dim();
  auto x = chart_coordinate(l, c);
  auto basis = mat::zero(f, d, d);
  auto pw = alg::one(l);
  for (std::size_t j = 0; j < d; ++j) {
    auto v = alg::flatten(l, pw);
    for (std::size_t i = 0; i < d; ++i) basis(i, j) = v[i];
    pw = alg::mul(l, pw, x);
  }
  auto target = alg::flatten(l, a);
  auto rhs = mat::zero(f, d, 1);
  for (std::size_t i = 0; i < d; ++i) rhs(i, 0) = target[i];
  auto sol = mat::mul(f, mat::inverse(f, basis), rhs);
  std::vector<typename F::Elem> cs;
  for (std::size_t i = 0; i < d; ++i) cs.push_back(sol(i, 0));
  return poly::make(f, cs);
}

namespace detail {

/// A square root of a unit of k_i[T]/(T^m) over a finite field, if any.
template <FiniteField R>
std::optional<series::Series<R>> series_sqrt(const R& r, const series::Series<R>& g) {
  const std::size_t m = g.size();
  auto b = series::zero(r, m);
  if (r.characteristic() == 2) {
    for (std::size_t j = 1; j < m; j += 2)
      if (!r.is_zero(g[j])) return std::nullopt;
    for (std::size_t j = 0; 2 * j < m; ++j) sqrt_finite(r, g[2 * j], b[j]);
    return b;
  }
  if (!sqrt_finite(r, g[0], b[0])) return std::nullopt;
  auto inv2b = r.inv(r.add(b[0], b[0]));
  for (std::size_t j = 1; j < m; ++j) {
    auto acc = g[j];
    for (std::size_t l = 1; l < j; ++l) acc = r.sub(acc, r.mul(b[l], b[j - l]));
    b[j] = r.mul(acc, inv2b);
  }
  return b;
}

}  // namespace detail

/// Equality in G_S: (u, a) ~ (u', a') iff a = b^2 a' and u N(b) = u' for
/// some unit b. Square roots of a/a' differ by square roots of 1: +-1 per
/// factor in odd characteristic (norm (-1)^{deg_i m_i}), and elements of
/// norm one in characteristic two.
template <Field F>
bool gs_equal(const FiniteAlgebra<F>& l, const typename F::Elem& u, const AlgebraElem<F>& a,
              const typename F::Elem& u2, const AlgebraElem<F>& a2) {
  const F& f = l.base;
  if (f.is_zero(u) || f.is_zero(u2) || !alg::is_unit(l, a) || !alg::is_unit(l, a2))
    fail(ErrorKind::NonUnit, "G_S elements need u != 0 and a unit");
  if constexpr (!F::is_finite_field) {
    fail(ErrorKind::Unsupported, "G_S equality is decided over finite fields only");
  } else {
    auto g = alg::mul(l, a, alg::inv(l, a2));
    AlgebraElem<F> b;
    bool odd_sign = false;
    for (std::size_t i = 0; i < l.factors.size(); ++i) {
      auto s = detail::series_sqrt(l.factors[i].residue, g[i]);
      if (!s) return false;
      b.push_back(std::move(*s));
      if ((l.factors[i].residue.degree() * l.factors[i].m) % 2 == 1) odd_sign = true;
    }
    auto lhs = f.mul(u, norm(l, b));
    if (f.equal(lhs, u2)) return true;
    return f.characteristic() != 2 && odd_sign && f.equal(f.neg(lhs), u2);
  }
}

/// Size of {b in L^x : b^2 = 1, N(b) = 1}: 2^r or 2^{r-1} in odd
/// characteristic (r factors; 2^r iff every deg_i m_i is even), and
/// prod |k_i|^{floor(m_i/2)} in characteristic two.
template <FiniteField F>
std::uint64_t stabilizer_size(const FiniteAlgebra<F>& l) {
  std::uint64_t s = 1;
  if (l.base.characteristic() == 2) {
    for (const auto& x : l.factors)
      for (unsigned j = 0; j < x.m / 2; ++j) s *= x.residue.size();
    return s;
  }
  bool all_even = true;
  for (const auto& x : l.factors) {
    s *= 2;
    if ((x.residue.degree() * x.m) % 2 == 1) all_even = false;
  }
  return all_even ? s : s / 2;
}

/// The same group by enumeration of L^x.
template <FiniteField F>
std::vector<AlgebraElem<F>> stabilizer_elements(const FiniteAlgebra<F>& l) {
  std::vector<AlgebraElem<F>> r;
  auto one = alg::one(l);
  alg::for_each_unit(l, [&](const AlgebraElem<F>& b) {
    if (alg::equal(l, alg::mul(l, b, b), one) && l.base.equal(norm(l, b), l.base.one())) r.push_back(b);
  });
  return r;
}

template <Field F>
struct GSClass {
  typename F::Elem u;
  AlgebraElem<F> alpha;
};

template <Field F>
void check_scheme(const F& f, const SchemeS<F>& s, const BinaryForm<F>& fm) {
  if (!same_scheme(f, s, scheme_of(f, fm))) fail(ErrorKind::SchemeMismatch, "the form does not define the scheme S");
}

/// C_f (-1)^{n(n+1)/2}: the value u^2 N(a) must take.
template <Field F>
typename F::Elem norm_target(const F& f, const BinaryForm<F>& fm) {
  const long n = static_cast<long>(fm.degree) - 1;
  return f.mul(form::split(f, fm).c_f, sign_power(f, n * (n + 1) / 2));
}

template <FiniteField F>
struct SLCount {
  std::uint64_t count = 0;
  std::vector<GSClass<F>> labels;  // least representative of each class
  std::uint64_t predicted = 0;     // (q - 1) |stab| / |im| or 0
};

/// Number of SL-orbits of free symmetric pairs with discriminant exactly f:
/// classes of (u, a) in G_S with C_f = (-1)^{n(n+1)/2} u^2 N(a).
template <FiniteField F>
SLCount<F> sl_orbit_count(const F& f, const SchemeS<F>& s, const BinaryForm<F>& fm) {
  check_scheme(f, s, fm);
  auto l = algebra_of(f, s);
  const auto t = norm_target(f, fm);
  SLCount<F> r;
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    auto u = f.element(i);
    if (f.is_zero(u)) continue;
    alg::for_each_unit(l, [&](const AlgebraElem<F>& a) {
      if (!f.equal(f.mul(f.mul(u, u), norm(l, a)), t)) return;
      for (const auto& c : r.labels)
        if (gs_equal(l, u, a, c.u, c.alpha)) return;
      r.labels.push_back({u, a});
    });
  }
  r.count = r.labels.size();
  // image of (u, a) -> u^2 N(a): all of k^x if some m_i is odd or q is even
  bool full = f.characteristic() == 2;
  for (const auto& x : l.factors) full = full || x.m % 2 == 1;
  bool in_image = full || square_class(f, t) == SquareClass::Square;
  const std::uint64_t image = full ? f.size() - 1 : (f.size() - 1) / 2;
  r.predicted = in_image ? (f.size() - 1) * stabilizer_size(l) / image : 0;
  return r;
}

template <Field F>
struct ExistenceResult {
  bool found = false;
  bool decided = false;  // false: no witness within the bound, question open
  std::optional<GSClass<F>> witness;
};

namespace detail {

inline bool rational_sqrt(const mpq_class& a, mpq_class& out) {
  if (sgn(a) < 0) return false;
  if (!mpz_perfect_square_p(a.get_num_mpz_t()) || !mpz_perfect_square_p(a.get_den_mpz_t())) return false;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), a.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), a.get_den_mpz_t());
  out = mpq_class(n, d);
  out.canonicalize();
  return true;
}

}  // namespace detail

/// Solves C_f = (-1)^{n(n+1)/2} u^2 N(a). Finite fields: exact (the first
/// solution in enumeration order, or a proof of absence). Rationals: search
/// over a with integer coordinates in [-bound, bound].
template <Field F>
ExistenceResult<F> existence_search(const F& f, const SchemeS<F>& s, const BinaryForm<F>& fm, unsigned bound = 3) {
  check_scheme(f, s, fm);
  auto l = algebra_of(f, s);
  const auto t = norm_target(f, fm);
  ExistenceResult<F> r;
  if constexpr (F::is_finite_field) {
    r.decided = true;
    for (std::uint64_t i = 0; i < f.size() && !r.found; ++i) {
      auto u = f.element(i);
      if (f.is_zero(u)) continue;
      const auto n = alg::size(l);
      for (std::uint64_t j = 0; j < n; ++j) {
        auto a = alg::element(l, j);
        if (!alg::is_unit(l, a)) continue;
        if (f.equal(f.mul(f.mul(u, u), norm(l, a)), t)) {
          r.found = true;
          r.witness = GSClass<F>{u, a};
          break;
        }
      }
    }
    return r;
  } else {
    const std::size_t d = l.dim();
    // enumerate by increasing max-norm so small witnesses come first
    for (long h = 0; h <= static_cast<long>(bound); ++h) {
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < d; ++i) total *= static_cast<std::uint64_t>(2 * h + 1);
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t x = idx;
        long mx = 0;
        std::vector<typename F::Elem> v;
        for (std::size_t i = 0; i < d; ++i) {
          long c = static_cast<long>(x % static_cast<std::uint64_t>(2 * h + 1)) - h;
          x /= static_cast<std::uint64_t>(2 * h + 1);
          mx = std::max(mx, std::labs(c));
          v.push_back(f.from_int(c));
        }
        if (mx != h) continue;
        auto a = alg::unflatten(l, v);
        if (!alg::is_unit(l, a)) continue;
        typename F::Elem u;
        if (detail::rational_sqrt(f.div(t, norm(l, a)), u)) {
          r.found = r.decided = true;
          r.witness = GSClass<F>{u, a};
          return r;
        }
      }
    }
    return r;
  }
}

/// p(N) for a square matrix N.
template <Field F>
Matrix<F> eval_matrix(const F& f, const Poly<F>& p, const Matrix<F>& n) {
  auto r = mat::zero(f, n.rows, n.cols);
  for (std::size_t i = p.c.size(); i-- > 0;) {
    r = mat::mul(f, r, n);
    for (std::size_t k = 0; k < n.rows; ++k) r(k, k) = f.add(r(k, k), p.c[i]);
  }
  return r;
}

template <Field F>
struct GSActResult {
  Pencil<F> pencil;
  Chart<F> chart;
  bool transposed;  // which convention produced symmetric output
};

/// Action of (u, a) on a free symmetric pencil. a is a polynomial in the
/// chart coordinate X' of chart_of(M) (X0/X1 itself when M0 is invertible).
/// With M' the pencil in that chart, N = -M0'^{-1} M1' and Q = a(N), the
/// result is (P^t M0' Q P, P^t M1' Q P) mapped back, P = diag(u, 1, ..., 1).
/// M0' Q is symmetric since N^t M0' = M0' N; Q^t is tried as a fallback.
template <Field F>
GSActResult<F> gs_act(const F& f, const Pencil<F>& m, const typename F::Elem& u, const Poly<F>& a) {
  if (!m.symmetric) fail(ErrorKind::PreconditionViolated, "gs_act needs a symmetric pencil");
  auto d = nonzero_disc(f, m);
  if (!is_free(f, m)) fail(ErrorKind::PreconditionViolated, "gs_act needs a free pencil");
  if (f.is_zero(u)) fail(ErrorKind::NonUnit, "u must be nonzero");
  const std::size_t n = m.size();
  auto ch = chart_of(f, m);
  auto mc = to_chart(f, m, ch);
  auto nn = mat::scale(f, mat::mul(f, mat::inverse(f, mc.m0), mc.m1), f.from_int(-1));
  auto q = eval_matrix(f, a, nn);
  auto det_q = mat::det(f, q);
  if (f.is_zero(det_q)) fail(ErrorKind::NonUnit, "alpha is not a unit of L");
  auto p = mat::identity(f, n);
  p(0, 0) = u;
  auto pt = mat::transpose(p);
  for (bool transposed : {false, true}) {
    auto qq = transposed ? mat::transpose(q) : q;
    auto o0 = mat::mul(f, pt, mat::mul(f, mat::mul(f, mc.m0, qq), p));
    auto o1 = mat::mul(f, pt, mat::mul(f, mat::mul(f, mc.m1, qq), p));
    if (!mat::is_symmetric(f, o0) || !mat::is_symmetric(f, o1)) continue;
    auto out = from_chart(f, make_pencil(f, o0, o1), ch);
    auto want = form::scale(f, d, f.mul(f.mul(u, u), det_q));
    if (!form::equal(f, disc(f, out), want)) fail(ErrorKind::ConventionFailure, "discriminant scaling law failed");
    return {std::move(out), ch, transposed};
  }
  fail(ErrorKind::ConventionFailure, "neither Q nor Q^t gives a symmetric pencil");
}

/// Same, with a given as an element of L.
template <Field F>
GSActResult<F> gs_act(const F& f, const Pencil<F>& m, const typename F::Elem& u, const AlgebraElem<F>& a) {
  auto l = algebra_of(f, scheme_of(f, m));
  return gs_act(f, m, u, to_chart_poly(l, a, chart_of(f, m)));
}

/// Base point of the SL-orbits with discriminant f: the homogeneous Hankel
/// pair of a form with C = (-1)^{n(n+1)/2}, scaled from f.
template <Field F>
Pencil<F> base_pencil(const F& f, const BinaryForm<F>& fm) {
  auto c = form::split(f, fm).c_f;
  auto g = form::scale(f, fm, f.div(hankel_sign(f, static_cast<long>(fm.degree)), c));
  return lemma_a2_pair(f, g);
}

}  // namespace pencilform
