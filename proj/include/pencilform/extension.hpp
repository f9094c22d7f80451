#pragma once

// Simple algebraic extensions K[T]/(m(T)) for an irreducible m. Used for
// F_{p^d} field contexts and for residue fields of closed points of P^1.

#include <cstdint>
#include <string>
#include <vector>

#include "pencilform/matrix.hpp"
#include "pencilform/poly.hpp"

namespace pencilform {

template <Field K>
class ExtensionField {
 public:
  using Base = K;
  using BaseElem = typename K::Elem;
  using Elem = std::vector<BaseElem>;  // exactly degree() coefficients, constant first
  static constexpr bool is_finite_field = K::is_finite_field;

  /// The modulus must be irreducible of degree >= 1; irreducibility is the
  /// caller's responsibility (see field_ctx.hpp for the checked factory).
  ExtensionField(K base, Poly<K> modulus) : base_(std::move(base)) {
    if (modulus.degree() < 1) fail(ErrorKind::InvalidInput, "extension modulus must have degree >= 1");
    modulus_ = poly::monic(base_, modulus);
    d_ = static_cast<std::size_t>(modulus_.degree());
    if constexpr (K::is_finite_field) {
      size_ = 1;
      for (std::size_t i = 0; i < d_; ++i) {
        if (size_ > (std::uint64_t{1} << 62) / base_.size())
          fail(ErrorKind::InstanceTooLarge, "extension field too large");
        size_ *= base_.size();
      }
    }
  }

  const K& base() const { return base_; }
  const Poly<K>& modulus() const { return modulus_; }
  unsigned degree() const { return static_cast<unsigned>(d_); }

  Elem zero() const { return Elem(d_, base_.zero()); }
  Elem one() const { return embed(base_.one()); }
  Elem embed(const BaseElem& a) const {
    Elem r(d_, base_.zero());
    r[0] = a;
    return r;
  }
  Elem from_int(long long n) const { return embed(base_.from_int(n)); }
  /// The class of T.
  Elem generator() const { return from_poly(poly::x(base_)); }

  Elem from_poly(const Poly<K>& a) const {
    auto r = poly::rem(base_, a, modulus_);
    Elem e(d_, base_.zero());
    for (std::size_t i = 0; i < r.c.size(); ++i) e[i] = r.c[i];
    return e;
  }
  Poly<K> to_poly(const Elem& a) const { return poly::make(base_, a); }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r(d_);
    for (std::size_t i = 0; i < d_; ++i) r[i] = base_.add(a[i], b[i]);
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r(d_);
    for (std::size_t i = 0; i < d_; ++i) r[i] = base_.sub(a[i], b[i]);
    return r;
  }
  Elem neg(const Elem& a) const {
    Elem r(d_);
    for (std::size_t i = 0; i < d_; ++i) r[i] = base_.neg(a[i]);
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    if (d_ == 1) return Elem{base_.mul(a[0], b[0])};
    std::vector<BaseElem> t(2 * d_ - 1, base_.zero());
    for (std::size_t i = 0; i < d_; ++i) {
      if (base_.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < d_; ++j) t[i + j] = base_.add(t[i + j], base_.mul(a[i], b[j]));
    }
    // reduce with the monic modulus
    for (std::size_t k = t.size(); k-- > d_;) {
      if (base_.is_zero(t[k])) continue;
      auto c = t[k];
      for (std::size_t j = 0; j < d_; ++j)
        t[k - d_ + j] = base_.sub(t[k - d_ + j], base_.mul(c, modulus_.c[j]));
    }
    t.resize(d_);
    return t;
  }
  Elem inv(const Elem& a) const {
    if (is_zero(a)) fail(ErrorKind::ZeroInversion, "inverse of zero");
    if (d_ == 1) return Elem{base_.inv(a[0])};
    return from_poly(poly::invmod(base_, to_poly(a), modulus_));
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elem& a) const {
    for (const auto& v : a)
      if (!base_.is_zero(v)) return false;
    return true;
  }
  bool equal(const Elem& a, const Elem& b) const {
    for (std::size_t i = 0; i < d_; ++i)
      if (!base_.equal(a[i], b[i])) return false;
    return true;
  }
  int compare(const Elem& a, const Elem& b) const {
    for (std::size_t i = 0; i < d_; ++i) {
      int r = base_.compare(a[i], b[i]);
      if (r) return r;
    }
    return 0;
  }
  std::uint64_t characteristic() const { return base_.characteristic(); }
  std::string to_string(const Elem& a) const {
    if (d_ == 1) return base_.to_string(a[0]);
    return "(" + poly::to_string(base_, to_poly(a), "T") + ")";
  }

  // Finite-field interface, available when K is finite.
  std::uint64_t size() const requires K::is_finite_field { return size_; }
  Elem element(std::uint64_t i) const requires K::is_finite_field {
    Elem r(d_);
    const std::uint64_t q = base_.size();
    for (std::size_t j = 0; j < d_; ++j) { r[j] = base_.element(i % q); i /= q; }
    return r;
  }
  std::uint64_t index(const Elem& a) const requires K::is_finite_field {
    std::uint64_t i = 0;
    const std::uint64_t q = base_.size();
    for (std::size_t j = d_; j-- > 0;) i = i * q + base_.index(a[j]);
    return i;
  }
  Elem random(Rng& rng) const requires K::is_finite_field {
    Elem r(d_);
    for (auto& v : r) v = base_.random(rng);
    return r;
  }

  bool operator==(const ExtensionField& o) const {
    return base_ == o.base_ && poly::equal(base_, modulus_, o.modulus_);
  }

 private:
  K base_;
  Poly<K> modulus_;
  std::size_t d_ = 1;
  std::uint64_t size_ = 0;
};

/// Matrix of multiplication by a on the basis 1, T, ..., T^{d-1} (columns
/// are images of basis vectors).
template <Field K>
Matrix<K> multiplication_matrix(const ExtensionField<K>& e, const typename ExtensionField<K>::Elem& a) {
  const K& k = e.base();
  const std::size_t d = e.degree();
  auto m = mat::zero(k, d, d);
  auto basis = e.one();
  const auto t = e.generator();
  for (std::size_t j = 0; j < d; ++j) {
    auto img = e.mul(a, basis);
    for (std::size_t i = 0; i < d; ++i) m(i, j) = img[i];
    basis = e.mul(basis, t);
  }
  return m;
}

/// Norm down to the base field: the determinant of multiplication-by-a.
template <Field K>
typename K::Elem ext_norm(const ExtensionField<K>& e, const typename ExtensionField<K>::Elem& a) {
  return mat::det(e.base(), multiplication_matrix(e, a));
}

}  // namespace pencilform
