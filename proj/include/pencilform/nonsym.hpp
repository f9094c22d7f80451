#pragma once

// Congruence classes of pairs that need not be symmetric. On the free locus
// the cokernel of X M0 + M1 is cyclic: identifying it with k^{n+1} through
// w = M0 v, X acts as N = -M1 M0^{-1}. In a cyclic basis B = [v, Nv, ...]
// (N B = B C, C the companion matrix of g = disc(X, 1) / lead), the pairing is
// Psi = B^{-1} M0 B^{-t}, and two pairs with the same scheme are congruent iff
// b(C) Psi b(C)^t = Psi' for some unit b of L = k[X]/(g).

#include <optional>

#include "pencilform/oracle.hpp"
#include "pencilform/slorbit.hpp"

namespace pencilform {

template <Field F>
ModuleType<F> nonsym_module_type(const F& f, const Pencil<F>& m) {
  return module_type(f, m);
}

template <Field F>
struct PsiData {
  ModuleType<F> type;
  std::optional<Matrix<F>> psi;  // free case only, in the chart of `shift`
  Chart<F> chart;
  Poly<F> g;                     // monic chart discriminant
};

namespace detail {

/// Cyclic basis [v, N v, ..., N^n v] for the first standard vector v that
/// generates; N must be cyclic.
template <Field F>
Matrix<F> cyclic_basis(const F& f, const Matrix<F>& n) {
  const std::size_t d = n.rows;
  for (std::size_t k = 0; k < d; ++k) {
    auto b = mat::zero(f, d, d);
    auto v = mat::zero(f, d, 1);
    v(k, 0) = f.one();
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t i = 0; i < d; ++i) b(i, j) = v(i, 0);
      v = mat::mul(f, n, v);
    }
    if (!f.is_zero(mat::det(f, b))) return b;
  }
  // fall back to a search over small combinations of basis vectors
  if constexpr (F::is_finite_field) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d && total < 100000; ++i) total *= f.size();
    for (std::uint64_t idx = 1; idx < total; ++idx) {
      auto v = mat::zero(f, d, 1);
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < d; ++i, t /= f.size()) v(i, 0) = f.element(t % f.size());
      auto b = mat::zero(f, d, d);
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) b(i, j) = v(i, 0);
        v = mat::mul(f, n, v);
      }
      if (!f.is_zero(mat::det(f, b))) return b;
    }
  } else {
    for (long s = 1; s < 50; ++s) {
      auto v = mat::zero(f, d, 1);
      long t = s;
      for (std::size_t i = 0; i < d; ++i) { v(i, 0) = f.from_int(t % 3 - 1); t /= 3; }
      auto b = mat::zero(f, d, d);
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) b(i, j) = v(i, 0);
        v = mat::mul(f, n, v);
      }
      if (!f.is_zero(mat::det(f, b))) return b;
    }
  }
  fail(ErrorKind::NotFree, "no cyclic vector found");
}

}  // namespace detail

/// Psi relative to a chart in which the first matrix is invertible.
template <Field F>
PsiData<F> psi_data(const F& f, const Pencil<F>& m, const Chart<F>& c) {
  PsiData<F> r{module_type(f, m), std::nullopt, c, {}};
  auto mc = to_chart(f, m, c);
  const auto& m0 = mc.m0;
  if (f.is_zero(mat::det(f, m0))) fail(ErrorKind::PreconditionViolated, "chart matrix is singular");
  auto n = mat::scale(f, mat::mul(f, mc.m1, mat::inverse(f, m0)), f.from_int(-1));
  auto d = disc(f, mc);
  r.g = poly::monic(f, form::dehomogenize(f, d));
  if (!is_free(f, m)) return r;
  auto b = detail::cyclic_basis(f, n);
  auto bi = mat::inverse(f, b);
  r.psi = mat::mul(f, bi, mat::mul(f, m0, mat::transpose(bi)));
  return r;
}

/// Decision on the free locus over a finite field by enumeration of L^x.
template <Field F>
bool nonsym_equivalent_free(const F& f, const Pencil<F>& a, const Pencil<F>& b) {
  if constexpr (!F::is_finite_field) {
    fail(ErrorKind::Unsupported, "free-locus decision needs a finite field");
  } else {
    if (a.size() != b.size()) return false;
    if (!is_free(f, a) || !is_free(f, b)) fail(ErrorKind::NotFree, "both pencils must be free");
    if (!same_scheme(f, scheme_of(f, a), scheme_of(f, b))) return false;
    auto c = chart_of(f, a);
    auto pa = psi_data(f, a, c), pb = psi_data(f, b, c);
    const std::size_t d = a.size();
    auto comp = companion(f, pa.g);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) {
      if (total > (std::uint64_t{1} << 32) / f.size()) fail(ErrorKind::InstanceTooLarge, "L is too large to enumerate");
      total *= f.size();
    }
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::vector<typename F::Elem> cs;
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < d; ++i, t /= f.size()) cs.push_back(f.element(t % f.size()));
      auto beta = poly::make(f, cs);
      if (beta.is_zero() || poly::gcd(f, beta, pa.g).degree() > 0) continue;
      auto r = eval_matrix(f, beta, comp);
      if (mat::equal(f, mat::mul(f, r, mat::mul(f, *pa.psi, mat::transpose(r))), *pb.psi)) return true;
    }
    return false;
  }
}

struct EquivalenceResult {
  bool equivalent;
  const char* method;  // "invariant" or "oracle"
};

/// GL-congruence of arbitrary pairs: free locus by the Psi criterion,
/// otherwise brute force when the instance is small.
template <Field F>
EquivalenceResult nonsym_equivalent(const F& f, const Pencil<F>& a, const Pencil<F>& b,
                                    std::uint64_t budget = kDefaultOracleBudget) {
  if (a.size() != b.size()) return {false, "invariant"};
  if (!same_scheme(f, scheme_of(f, a), scheme_of(f, b))) return {false, "invariant"};
  if (!equal(f, module_type(f, a), module_type(f, b))) return {false, "invariant"};
  if constexpr (!F::is_finite_field) {
    fail(ErrorKind::Unsupported, "general congruence over the rationals is not decided");
  } else {
    if (is_free(f, a) && has_chart(f, a)) return {nonsym_equivalent_free(f, a, b), "invariant"};
    try {
      return {brute_equivalent(f, a, b, GroupKind::GL, budget), "oracle"};
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::BudgetExceeded || e.kind() == ErrorKind::InstanceTooLarge)
        fail(ErrorKind::InstanceTooLarge, "pair is outside the free locus and too large for brute force");
      throw;
    }
  }
}

}  // namespace pencilform
