#pragma once

// Field descriptors used by the CLI and the JSON formats:
//   q                          the rationals
//   fp:<p>                     prime field
//   fq:<p>:<d>                 F_{p^d} with the default modulus
//   fq:<p>:<d>:<c0,c1,...,1>   F_{p^d} with an explicit modulus, constant first

#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "pencilform/extension.hpp"
#include "pencilform/factor.hpp"

namespace pencilform {

using GaloisField = ExtensionField<PrimeField>;
using AnyField = std::variant<Rationals, PrimeField, GaloisField>;

/// F_{p^d} presented by `modulus`; checks that the modulus is monic of degree
/// d and irreducible.
inline GaloisField make_galois_field(std::uint64_t p, unsigned d, const std::vector<std::uint64_t>& modulus) {
  PrimeField fp(p);
  std::vector<std::uint64_t> c;
  for (auto v : modulus) c.push_back(fp.from_int(static_cast<long long>(v % p)));
  auto m = poly::make(fp, c);
  if (m.degree() != static_cast<long>(d) || m.lead() != 1)
    fail(ErrorKind::InvalidInput, "extension modulus must be monic of degree " + std::to_string(d));
  if (!is_irreducible(fp, m)) fail(ErrorKind::InvalidInput, "extension modulus is reducible");
  return GaloisField(fp, m);
}

/// F_{p^d} with the lexicographically smallest monic irreducible modulus.
inline GaloisField make_galois_field(std::uint64_t p, unsigned d) {
  PrimeField fp(p);
  if (d == 0) fail(ErrorKind::InvalidInput, "extension degree must be positive");
  return GaloisField(fp, smallest_irreducible(fp, d));
}

namespace detail {
inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

inline std::uint64_t parse_u64(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    fail(ErrorKind::InvalidInput, "expected a non-negative integer, got '" + s + "'");
  return std::stoull(s);
}
}  // namespace detail

inline AnyField parse_field(const std::string& desc) {
  auto parts = detail::split(desc, ':');
  if (desc == "q") return Rationals{};
  if (parts.size() == 2 && parts[0] == "fp") return PrimeField(detail::parse_u64(parts[1]));
  if ((parts.size() == 3 || parts.size() == 4) && parts[0] == "fq") {
    auto p = detail::parse_u64(parts[1]);
    auto d = static_cast<unsigned>(detail::parse_u64(parts[2]));
    if (parts.size() == 3) return make_galois_field(p, d);
    std::vector<std::uint64_t> c;
    for (const auto& s : detail::split(parts[3], ',')) c.push_back(detail::parse_u64(s));
    return make_galois_field(p, d, c);
  }
  fail(ErrorKind::InvalidInput, "unrecognized field descriptor '" + desc + "'");
}

inline std::string describe(const Rationals&) { return "q"; }
inline std::string describe(const PrimeField& f) { return "fp:" + std::to_string(f.p()); }
inline std::string describe(const GaloisField& f) {
  std::string s = "fq:" + std::to_string(f.base().p()) + ":" + std::to_string(f.degree()) + ":";
  const auto& m = f.modulus();
  for (std::size_t i = 0; i < m.c.size(); ++i) s += (i ? "," : "") + std::to_string(m.c[i]);
  return s;
}
inline std::string describe(const AnyField& f) {
  return std::visit([](const auto& g) { return describe(g); }, f);
}

}  // namespace pencilform
