#pragma once

// Isomorphism class of the cokernel module of X0 M0 + X1 M1: for each closed
// point of the discriminant subscheme, the partition of its multiplicity given
// by the valuations of the Smith invariant factors. Two charts are used: the
// matrix X M0 + M1 for finite points and M0 + Y M1 for the point X1 = 0.

#include <algorithm>
#include <string>
#include <vector>

#include "pencilform/pencil.hpp"
#include "pencilform/smith.hpp"

namespace pencilform {

template <Field F>
struct ModuleTypeEntry {
  PointOnP1<F> point;
  unsigned multiplicity;
  std::vector<unsigned> partition;  // non-increasing, sums to multiplicity
};

template <Field F>
struct ModuleType {
  std::vector<ModuleTypeEntry<F>> entries;  // canonical point order
};

template <Field F>
bool equal(const F& f, const ModuleType<F>& a, const ModuleType<F>& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    const auto &x = a.entries[i], &y = b.entries[i];
    if (!point::equal(f, x.point, y.point) || x.multiplicity != y.multiplicity || x.partition != y.partition)
      return false;
  }
  return true;
}

template <Field F>
ModuleType<F> module_type(const F& f, const Pencil<F>& m) {
  auto s = scheme_of(f, m);
  ModuleType<F> r;
  std::vector<Poly<F>> finite_d, inf_d;
  for (const auto& [pt, mult] : s.points) {
    auto& ds = pt.infinity ? inf_d : finite_d;
    if (ds.empty()) {
      auto a = pt.infinity ? affine_matrix(f, m.m1, m.m0) : affine_matrix(f, m.m0, m.m1);
      ds = smith(f, std::move(a)).d;
    }
    ModuleTypeEntry<F> e{pt, mult, {}};
    for (const auto& d : ds) {
      unsigned v = valuation(f, d, pt.pi);
      if (v > 0) e.partition.push_back(v);
    }
    std::sort(e.partition.rbegin(), e.partition.rend());
    r.entries.push_back(std::move(e));
  }
  return r;
}

/// Segre symbol: one entry per closed point, carrying its residue degree; over
/// the algebraic closure a degree-d point stands for d conjugate points with
/// the same partition.
struct SegreSymbol {
  struct Entry {
    std::vector<unsigned> partition;
    unsigned degree;
    auto operator<=>(const Entry&) const = default;
  };
  std::vector<Entry> entries;  // sorted: larger partitions first

  bool operator==(const SegreSymbol&) const = default;

  /// Bracket notation over the algebraic closure, e.g. "[(2,1), 1, 1]".
  std::string to_string() const {
    std::vector<std::vector<unsigned>> parts;
    for (const auto& e : entries)
      for (unsigned k = 0; k < e.degree; ++k) parts.push_back(e.partition);
    std::sort(parts.rbegin(), parts.rend());
    std::string s = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ", ";
      if (parts[i].size() == 1) {
        s += std::to_string(parts[i][0]);
      } else {
        s += "(";
        for (std::size_t j = 0; j < parts[i].size(); ++j) s += (j ? "," : "") + std::to_string(parts[i][j]);
        s += ")";
      }
    }
    return s + "]";
  }
};

template <Field F>
SegreSymbol segre_of(const ModuleType<F>& t) {
  SegreSymbol s;
  for (const auto& e : t.entries) s.entries.push_back({e.partition, e.point.degree()});
  std::sort(s.entries.begin(), s.entries.end(), [](const auto& a, const auto& b) {
    if (a.partition != b.partition) return a.partition > b.partition;
    return a.degree < b.degree;
  });
  return s;
}

template <Field F>
SegreSymbol segre_symbol(const F& f, const Pencil<F>& m) {
  return segre_of(module_type(f, m));
}

}  // namespace pencilform
