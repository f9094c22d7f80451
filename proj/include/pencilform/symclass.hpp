#pragma once

// GL-congruence invariants of symmetric pencils. At each point x of the
// discriminant subscheme the pencil matrix is diagonalized by symmetric
// congruence over R[s]/(s^{m+1}), R the residue field of x and s a local
// parameter, giving diag(u_j s^{e_j}). Over a finite field of odd
// characteristic the counts h_e and the square class of prod u_j(0) per
// exponent e determine the Jordan constituents, and together with the module
// type they decide GL-congruence.

#include <map>
#include <optional>
#include <vector>

#include "pencilform/module_type.hpp"
#include "pencilform/series.hpp"

namespace pencilform {

template <Field F>
using ResidueField = ExtensionField<F>;

/// Residue field of a closed point with theta the image of the chart
/// coordinate (X0/X1 for finite points, X1/X0 = 0 at infinity).
template <Field F>
ResidueField<F> residue_field(const F& f, const PointOnP1<F>& pt) {
  return ResidueField<F>(f, pt.pi);
}

template <Field F>
struct LocalBlock {
  unsigned e;
  typename ResidueField<F>::Elem unit;  // u_j(0)
  std::optional<SquareClass> cls;       // finite fields of odd characteristic only
};

template <Field F>
struct LocalSymmetricForm {
  PointOnP1<F> point;
  std::vector<LocalBlock<F>> blocks;  // sorted by e descending, then by unit order
};

/// Symmetric Jordan splitting of the pencil at `pt`. `mult` is the
/// multiplicity of the point (0 means: look it up).
template <Field F>
LocalSymmetricForm<F> local_diagonalize(const F& f, const Pencil<F>& m, const PointOnP1<F>& pt, unsigned mult = 0) {
  if (f.characteristic() == 2) fail(ErrorKind::CharTwo, "symmetric diagonalization needs characteristic != 2");
  if (!m.symmetric) fail(ErrorKind::InvalidInput, "pencil is not symmetric");
  if (mult == 0) {
    for (const auto& [p, k] : scheme_of(f, m).points)
      if (point::equal(f, p, pt)) mult = k;
    if (mult == 0) fail(ErrorKind::InvalidInput, "point is not on the discriminant subscheme");
  }
  using RE = typename ResidueField<F>::Elem;
  const auto r = residue_field(f, pt);
  const std::size_t n = m.size(), prec = mult + 1;
  const auto& lin = pt.infinity ? m.m1 : m.m0;
  const auto& cst = pt.infinity ? m.m0 : m.m1;
  const RE theta = r.generator();

  // A(s) = (theta lin + cst) + s lin
  std::vector<std::vector<series::Series<ResidueField<F>>>> a(n, std::vector<series::Series<ResidueField<F>>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto s = series::zero(r, prec);
      s[0] = r.add(r.mul(theta, r.embed(lin(i, j))), r.embed(cst(i, j)));
      if (prec > 1) s[1] = r.embed(lin(i, j));
      a[i][j] = std::move(s);
    }

  LocalSymmetricForm<F> out{pt, {}};
  std::vector<bool> active(n, true);
  unsigned total = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = prec, bi = n, bj = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!active[j]) continue;
        auto v = series::valuation(r, a[i][j]);
        if (v < best) { best = v; bi = i; bj = j; }
      }
    }
    if (best >= prec) fail(ErrorKind::VanishingDiscriminant, "local matrix is degenerate");
    std::size_t piv = n;
    for (std::size_t i = 0; i < n && piv == n; ++i)
      if (active[i] && series::valuation(r, a[i][i]) == best) piv = i;
    if (piv == n) {
      // a_ii and a_jj have larger valuation: row/column j into i
      std::size_t i = bi, j = bj;
      for (std::size_t k = 0; k < n; ++k) a[i][k] = series::add(r, a[i][k], a[j][k]);
      for (std::size_t k = 0; k < n; ++k) a[k][i] = series::add(r, a[k][i], a[k][j]);
      piv = i;
    }
    const std::size_t v = best;
    auto unit = series::shift_down(r, a[piv][piv], v);
    auto uinv = series::inverse(r, unit);
    active[piv] = false;
    for (std::size_t k = 0; k < n; ++k) {
      if (!active[k]) continue;
      auto c = series::mul(r, series::shift_down(r, a[k][piv], v), uinv);
      for (std::size_t l = 0; l < n; ++l) {
        if (!active[l]) continue;
        a[k][l] = series::sub(r, a[k][l], series::mul(r, c, a[piv][l]));
      }
    }
    if (v > 0) {
      LocalBlock<F> b{static_cast<unsigned>(v), unit[0], std::nullopt};
      if constexpr (F::is_finite_field) b.cls = square_class(r, unit[0]);
      out.blocks.push_back(std::move(b));
      total += static_cast<unsigned>(v);
    }
  }
  if (total != mult) fail(ErrorKind::ConventionFailure, "local exponents do not add up to the multiplicity");
  std::stable_sort(out.blocks.begin(), out.blocks.end(), [](const auto& x, const auto& y) { return x.e > y.e; });
  return out;
}

template <Field F>
struct SymInvariantEntry {
  PointOnP1<F> point;
  unsigned e;
  unsigned h;
  SquareClass disc_class;
};

template <Field F>
struct SymOrbitInvariant {
  ModuleType<F> type;
  std::vector<SymInvariantEntry<F>> entries;  // point order, then e descending
};

template <Field F>
bool equal(const F& f, const SymOrbitInvariant<F>& a, const SymOrbitInvariant<F>& b) {
  if (!equal(f, a.type, b.type) || a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    const auto &x = a.entries[i], &y = b.entries[i];
    if (!point::equal(f, x.point, y.point) || x.e != y.e || x.h != y.h || x.disc_class != y.disc_class) return false;
  }
  return true;
}

/// Module type plus, per point and exponent e, the number h_e of Jordan
/// blocks s^e and the square class of the product of their units.
template <Field F>
SymOrbitInvariant<F> sym_invariant(const F& f, const Pencil<F>& m) {
  if (!m.symmetric) fail(ErrorKind::InvalidInput, "pencil is not symmetric");
  if constexpr (!F::is_finite_field) {
    fail(ErrorKind::Unsupported, "symmetric invariant is only available over finite fields");
  } else {
    if (f.characteristic() == 2) fail(ErrorKind::CharTwo, "symmetric invariant needs characteristic != 2");
    SymOrbitInvariant<F> inv{module_type(f, m), {}};
    for (const auto& te : inv.type.entries) {
      auto loc = local_diagonalize(f, m, te.point, te.multiplicity);
      std::map<unsigned, std::pair<unsigned, unsigned>, std::greater<>> by_e;
      for (const auto& b : loc.blocks) {
        auto& [h, cls] = by_e[b.e];
        ++h;
        cls ^= static_cast<unsigned>(*b.cls);
      }
      for (const auto& [e, hc] : by_e)
        inv.entries.push_back({te.point, e, hc.first, static_cast<SquareClass>(hc.second)});
    }
    return inv;
  }
}

/// GL-congruence of symmetric pencils over a finite field of odd
/// characteristic.
template <Field F>
bool sym_equivalent(const F& f, const Pencil<F>& a, const Pencil<F>& b) {
  if constexpr (!F::is_finite_field) {
    fail(ErrorKind::Unsupported, "invariant-based decision needs a finite field");
  } else {
    if (f.characteristic() == 2) fail(ErrorKind::Unsupported, "invariant-based decision needs odd characteristic");
    if (a.size() != b.size()) return false;
    if (!same_scheme(f, scheme_of(f, a), scheme_of(f, b))) return false;
    return equal(f, sym_invariant(f, a), sym_invariant(f, b));
  }
}

}  // namespace pencilform
