#pragma once

// JSON encodings shared by the CLI and the tests.
//   element   rationals: "p/q" string; F_p: integer; F_{p^d}: coefficient
//             array in T (an integer is accepted as input)
//   form      {"degree": D, "coeffs": [c_0, ..., c_D]}, c_i of X0^i X1^{D-i}
//   pencil    {"field", "n", "M0", "M1", "symmetric"}
//   point     {"coeffs", "degree", "infinity"}

#include <json.hpp>
#include <string>

#include "pencilform/field_ctx.hpp"
#include "pencilform/nonsym.hpp"

namespace pencilform::json_io {

using nlohmann::json;

inline json elem_to_json(const Rationals&, const mpq_class& a) { return a.get_str(); }
inline json elem_to_json(const PrimeField&, std::uint64_t a) { return a; }
template <Field K>
json elem_to_json(const ExtensionField<K>& f, const typename ExtensionField<K>::Elem& a) {
  json r = json::array();
  for (const auto& c : a) r.push_back(elem_to_json(f.base(), c));
  return r;
}

inline mpq_class elem_from_json(const Rationals& q, const json& j) {
  if (j.is_number_integer()) return q.from_int(j.get<long long>());
  if (j.is_string()) return q.parse(j.get<std::string>());
  fail(ErrorKind::InvalidInput, "rational entries must be integers or \"p/q\" strings");
}

inline std::uint64_t elem_from_json(const PrimeField& f, const json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  if (j.is_string()) {
    try {
      std::size_t pos = 0;
      long long v = std::stoll(j.get<std::string>(), &pos);
      if (pos == j.get<std::string>().size()) return f.from_int(v);
    } catch (const std::exception&) {
    }
  }
  fail(ErrorKind::InvalidInput, "prime field entries must be integers");
}

template <Field K>
typename ExtensionField<K>::Elem elem_from_json(const ExtensionField<K>& f, const json& j) {
  if (j.is_array()) {
    std::vector<typename K::Elem> c;
    for (const auto& x : j) c.push_back(elem_from_json(f.base(), x));
    return f.from_poly(poly::make(f.base(), c));
  }
  return f.embed(elem_from_json(f.base(), j));
}

template <Field F>
json poly_to_json(const F& f, const Poly<F>& p) {
  json r = json::array();
  for (const auto& c : p.c) r.push_back(elem_to_json(f, c));
  return r;
}

template <Field F>
Poly<F> poly_from_json(const F& f, const json& j) {
  if (!j.is_array()) fail(ErrorKind::InvalidInput, "polynomials are coefficient arrays, constant term first");
  std::vector<typename F::Elem> c;
  for (const auto& x : j) c.push_back(elem_from_json(f, x));
  return poly::make(f, c);
}

template <Field F>
json form_to_json(const F& f, const BinaryForm<F>& b) {
  json c = json::array();
  for (const auto& x : b.c) c.push_back(elem_to_json(f, x));
  return {{"degree", b.degree}, {"coeffs", c}};
}

/// Accepts {"degree", "coeffs"} or a bare coefficient array.
template <Field F>
BinaryForm<F> form_from_json(const F& f, const json& jin) {
  const json& j = jin.is_object() && jin.contains("disc") ? jin.at("disc") : jin;
  const json& c = j.is_object() ? j.at("coeffs") : j;
  if (!c.is_array() || c.empty()) fail(ErrorKind::InvalidInput, "a form needs a nonempty coefficient array");
  BinaryForm<F> b{static_cast<unsigned>(c.size() - 1), {}};
  for (const auto& x : c) b.c.push_back(elem_from_json(f, x));
  if (j.is_object() && j.contains("degree") && j.at("degree").get<unsigned>() != b.degree)
    fail(ErrorKind::InvalidInput, "form degree does not match the coefficient count");
  return b;
}

template <Field F>
json matrix_to_json(const F& f, const Matrix<F>& m) {
  json r = json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(elem_to_json(f, m(i, j)));
    r.push_back(row);
  }
  return r;
}

template <Field F>
Matrix<F> matrix_from_json(const F& f, const json& j) {
  if (!j.is_array() || j.empty()) fail(ErrorKind::InvalidInput, "matrices are nonempty arrays of rows");
  std::vector<std::vector<typename F::Elem>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) fail(ErrorKind::InvalidInput, "matrix rows must be arrays");
    rows.emplace_back();
    for (const auto& x : row) rows.back().push_back(elem_from_json(f, x));
  }
  return mat::from_rows(f, rows);
}

template <Field F>
json pencil_to_json(const F& f, const Pencil<F>& m) {
  return {{"field", describe(f)},
          {"n", m.size() - 1},
          {"M0", matrix_to_json(f, m.m0)},
          {"M1", matrix_to_json(f, m.m1)},
          {"symmetric", m.symmetric}};
}

template <Field F>
Pencil<F> pencil_from_json(const F& f, const json& jin) {
  const json& j = jin.is_object() && jin.contains("pencil") ? jin.at("pencil") : jin;
  if (!j.is_object() || !j.contains("M0") || !j.contains("M1"))
    fail(ErrorKind::InvalidInput, "a pencil needs \"M0\" and \"M1\"");
  auto m = make_pencil(f, matrix_from_json(f, j.at("M0")), matrix_from_json(f, j.at("M1")));
  if (j.contains("n") && j.at("n").get<long long>() + 1 != static_cast<long long>(m.size()))
    fail(ErrorKind::SizeMismatch, "\"n\" does not match the matrix size");
  if (j.contains("symmetric") && j.at("symmetric").get<bool>() && !m.symmetric)
    fail(ErrorKind::InvalidInput, "pencil is flagged symmetric but is not");
  return m;
}

template <Field F>
json point_to_json(const F& f, const PointOnP1<F>& p) {
  return {{"coeffs", form_to_json(f, point::to_form(f, p)).at("coeffs")},
          {"degree", p.degree()},
          {"infinity", p.infinity}};
}

/// A closed point from an irreducible form, or from rational coordinates
/// [u, v].
template <Field F>
PointOnP1<F> point_from_json(const F& f, const json& j) {
  if (j.is_array() && j.size() == 2 && !j.at(0).is_array())
    return point::rational(f, elem_from_json(f, j.at(0)), elem_from_json(f, j.at(1)));
  auto b = form_from_json(f, j);
  auto s = scheme_of(f, b);
  if (s.points.size() != 1 || s.points[0].second != 1)
    fail(ErrorKind::InvalidInput, "a point must be given by an irreducible form");
  return s.points[0].first;
}

template <Field F>
json scheme_to_json(const F& f, const SchemeS<F>& s) {
  json pts = json::array();
  for (const auto& [p, m] : s.points) pts.push_back({{"point", point_to_json(f, p)}, {"multiplicity", m}});
  return {{"points", pts}, {"unit", elem_to_json(f, s.unit)}, {"reduced", s.reduced()}};
}

template <Field F>
json module_type_to_json(const F& f, const ModuleType<F>& t) {
  json r = json::array();
  for (const auto& e : t.entries)
    r.push_back({{"point", point_to_json(f, e.point).at("coeffs")},
                 {"degree", e.point.degree()},
                 {"multiplicity", e.multiplicity},
                 {"partition", e.partition}});
  return r;
}

template <Field F>
ModuleType<F> module_type_from_json(const F& f, const json& j) {
  if (!j.is_array()) fail(ErrorKind::InvalidInput, "a module type is an array of entries");
  ModuleType<F> t;
  for (const auto& e : j) {
    ModuleTypeEntry<F> x{point_from_json(f, e.at("point")), 0, e.at("partition").get<std::vector<unsigned>>()};
    std::sort(x.partition.rbegin(), x.partition.rend());
    for (auto p : x.partition) {
      if (p == 0) fail(ErrorKind::InvalidInput, "partition parts must be positive");
      x.multiplicity += p;
    }
    if (x.partition.empty()) fail(ErrorKind::InvalidInput, "empty partition");
    t.entries.push_back(std::move(x));
  }
  std::sort(t.entries.begin(), t.entries.end(),
            [&](const auto& a, const auto& b) { return point::compare(f, a.point, b.point) < 0; });
  for (std::size_t i = 1; i < t.entries.size(); ++i)
    if (point::equal(f, t.entries[i - 1].point, t.entries[i].point))
      fail(ErrorKind::InvalidInput, "points must be distinct");
  return t;
}

inline json segre_to_json(const SegreSymbol& s) {
  json e = json::array();
  for (const auto& x : s.entries) e.push_back({{"partition", x.partition}, {"degree", x.degree}});
  return {{"symbol", s.to_string()}, {"entries", e}};
}

template <Field F>
json invariant_to_json(const F& f, const SymOrbitInvariant<F>& inv) {
  json blocks = json::array();
  for (const auto& e : inv.entries)
    blocks.push_back({{"point", point_to_json(f, e.point).at("coeffs")},
                      {"e", e.e},
                      {"h", e.h},
                      {"disc_class", e.disc_class == SquareClass::Square ? "square" : "nonsquare"}});
  return {{"module_type", module_type_to_json(f, inv.type)}, {"blocks", blocks}};
}

template <Field F>
json algebra_elem_to_json(const FiniteAlgebra<F>& l, const AlgebraElem<F>& a) {
  json r = json::array();
  for (std::size_t i = 0; i < l.factors.size(); ++i) {
    json s = json::array();
    for (const auto& c : a[i]) s.push_back(elem_to_json(l.factors[i].residue, c));
    r.push_back(s);
  }
  return r;
}

template <Field F>
json chart_to_json(const F& f, const Chart<F>& c) {
  return json::array({elem_to_json(f, c.a), elem_to_json(f, c.b), elem_to_json(f, c.c), elem_to_json(f, c.d)});
}

inline json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace pencilform::json_io
