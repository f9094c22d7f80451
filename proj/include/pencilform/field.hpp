#pragma once

// Exact coefficient fields. Elements are plain values; every operation goes
// through the field object so that runtime parameters (p, the modulus) stay
// in one place.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <random>
#include <string>

#include "pencilform/error.hpp"

namespace pencilform {

using Rng = std::mt19937_64;

template <class F>
concept Field = requires(const F& f, const typename F::Elem& a, long long n) {
  typename F::Elem;
  { f.zero() } -> std::same_as<typename F::Elem>;
  { f.one() } -> std::same_as<typename F::Elem>;
  { f.from_int(n) } -> std::same_as<typename F::Elem>;
  { f.add(a, a) } -> std::same_as<typename F::Elem>;
  { f.sub(a, a) } -> std::same_as<typename F::Elem>;
  { f.neg(a) } -> std::same_as<typename F::Elem>;
  { f.mul(a, a) } -> std::same_as<typename F::Elem>;
  { f.inv(a) } -> std::same_as<typename F::Elem>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.equal(a, a) } -> std::same_as<bool>;
  { f.compare(a, a) } -> std::same_as<int>;
  { f.characteristic() } -> std::same_as<std::uint64_t>;
  { f.to_string(a) } -> std::same_as<std::string>;
  { F::is_finite_field } -> std::convertible_to<bool>;
};

template <class F>
concept FiniteField = Field<F> && F::is_finite_field &&
    requires(const F& f, const typename F::Elem& a, std::uint64_t i, Rng& rng) {
      { f.size() } -> std::same_as<std::uint64_t>;
      { f.element(i) } -> std::same_as<typename F::Elem>;
      { f.index(a) } -> std::same_as<std::uint64_t>;
      { f.random(rng) } -> std::same_as<typename F::Elem>;
    };

/// The field of rational numbers, backed by GMP. Values are kept canonical.
class Rationals {
 public:
  using Elem = mpq_class;
  static constexpr bool is_finite_field = false;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long n) const { return Elem(static_cast<long>(n)); }
  Elem from_mpz(const mpz_class& n) const { return Elem(n); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) fail(ErrorKind::ZeroInversion, "inverse of zero");
    return Elem(1) / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  int compare(const Elem& a, const Elem& b) const { return cmp(a, b) < 0 ? -1 : (cmp(a, b) > 0 ? 1 : 0); }
  std::uint64_t characteristic() const { return 0; }
  std::string to_string(const Elem& a) const { return a.get_str(); }
  Elem parse(const std::string& s) const {
    Elem v;
    if (v.set_str(s, 10) != 0) fail(ErrorKind::InvalidInput, "bad rational: " + s);
    if (v.get_den() == 0) fail(ErrorKind::InvalidInput, "zero denominator: " + s);
    v.canonicalize();
    return v;
  }
  bool operator==(const Rationals&) const { return true; }
};

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// F_p for a prime p < 2^31; elements are residues in [0, p).
class PrimeField {
 public:
  using Elem = std::uint64_t;
  static constexpr bool is_finite_field = true;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (std::uint64_t{1} << 31)) fail(ErrorKind::InvalidInput, "prime too large: " + std::to_string(p));
    if (!is_prime_u64(p)) fail(ErrorKind::InvalidInput, std::to_string(p) + " is not prime");
  }

  std::uint64_t p() const { return p_; }
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    return static_cast<Elem>(r < 0 ? r + static_cast<long long>(p_) : r);
  }
  Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p_ ? s - p_ : s; }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem inv(Elem a) const {
    if (a == 0) fail(ErrorKind::ZeroInversion, "inverse of zero");
    // extended Euclid on signed values
    long long t = 0, nt = 1, r = static_cast<long long>(p_), nr = static_cast<long long>(a);
    while (nr != 0) {
      long long q = r / nr;
      long long tmp = t - q * nt; t = nt; nt = tmp;
      tmp = r - q * nr; r = nr; nr = tmp;
    }
    return from_int(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }
  int compare(Elem a, Elem b) const { return a < b ? -1 : (a > b ? 1 : 0); }
  std::uint64_t characteristic() const { return p_; }
  std::uint64_t size() const { return p_; }
  /// Degree over the prime field.
  unsigned degree() const { return 1; }
  Elem element(std::uint64_t i) const { return i % p_; }
  std::uint64_t index(Elem a) const { return a; }
  Elem random(Rng& rng) const { return std::uniform_int_distribution<std::uint64_t>(0, p_ - 1)(rng); }
  std::string to_string(Elem a) const { return std::to_string(a); }
  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint64_t p_;
};

template <Field F>
typename F::Elem power(const F& f, typename F::Elem a, const mpz_class& e) {
  typename F::Elem r = f.one();
  if (sgn(e) < 0) return power(f, f.inv(a), mpz_class(-e));
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = f.mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = f.mul(r, a);
  }
  return r;
}

template <Field F>
typename F::Elem power(const F& f, const typename F::Elem& a, std::uint64_t e) {
  typename F::Elem r = f.one(), b = a;
  while (e > 0) {
    if (e & 1) r = f.mul(r, b);
    b = f.mul(b, b);
    e >>= 1;
  }
  return r;
}

/// (-1)^k in the field.
template <Field F>
typename F::Elem sign_power(const F& f, long long k) {
  return (k % 2 == 0) ? f.one() : f.neg(f.one());
}

enum class SquareClass { Square = 0, NonSquare = 1 };

/// Square class of a nonzero element of a finite field of odd characteristic.
template <FiniteField F>
SquareClass square_class(const F& f, const typename F::Elem& a) {
  if (f.characteristic() == 2)
    fail(ErrorKind::WrongCharacteristic, "square_class needs odd characteristic");
  if (f.is_zero(a)) fail(ErrorKind::ZeroInput, "square_class of zero");
  auto r = power(f, a, (f.size() - 1) / 2);
  return f.equal(r, f.one()) ? SquareClass::Square : SquareClass::NonSquare;
}

/// Square root in a finite field, if one exists. Tonelli-Shanks in odd
/// characteristic, Frobenius inverse in characteristic two.
template <FiniteField F>
bool sqrt_finite(const F& f, const typename F::Elem& a, typename F::Elem& out) {
  using E = typename F::Elem;
  const std::uint64_t q = f.size();
  if (f.is_zero(a)) { out = f.zero(); return true; }
  if (f.characteristic() == 2) {
    out = power(f, a, q / 2);
    return true;
  }
  if (square_class(f, a) == SquareClass::NonSquare) return false;
  std::uint64_t s = 0, t = q - 1;
  while (t % 2 == 0) { t /= 2; ++s; }
  E z = f.one();
  for (std::uint64_t i = 1; i < q; ++i) {
    z = f.element(i);
    if (!f.is_zero(z) && square_class(f, z) == SquareClass::NonSquare) break;
  }
  E c = power(f, z, t);
  E x = power(f, a, (t + 1) / 2);
  E b = power(f, a, t);
  std::uint64_t m = s;
  while (!f.equal(b, f.one())) {
    std::uint64_t i = 0;
    E bb = b;
    while (!f.equal(bb, f.one())) { bb = f.mul(bb, bb); ++i; }
    E g = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) g = f.mul(g, g);
    x = f.mul(x, g);
    c = f.mul(g, g);
    b = f.mul(b, c);
    m = i;
  }
  out = x;
  return true;
}

}  // namespace pencilform
