#pragma once

// Brute-force ground truth over tiny finite fields. Field elements are
// replaced by their indices and arithmetic by lookup tables; pencils are
// encoded as integers (base q digits of the stored entries, first entry most
// significant, upper triangles only in symmetric mode). Orbits are closed
// under a generating set of the group (transvections, plus diag(a, 1, ...)
// for GL), which is exact because the group is finite.

#include <cstdint>
#include <deque>
#include <functional>
#include <unordered_set>
#include <vector>

#include "pencilform/pencil.hpp"

namespace pencilform {

enum class GroupKind { GL, SL };

inline const char* to_string(GroupKind g) { return g == GroupKind::GL ? "GL" : "SL"; }

inline constexpr std::uint64_t kDefaultOracleBudget = 4'000'000'000ULL;

/// Lookup-table copy of a finite field with at most 64 elements.
class SmallField {
 public:
  template <FiniteField F>
  explicit SmallField(const F& f) {
    if (f.size() > 64) fail(ErrorKind::InstanceTooLarge, "oracle fields have at most 64 elements");
    q_ = static_cast<unsigned>(f.size());
    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    neg_.assign(q_, 0);
    for (unsigned a = 0; a < q_; ++a) {
      auto ea = f.element(a);
      neg_[a] = static_cast<std::uint8_t>(f.index(f.neg(ea)));
      for (unsigned b = 0; b < q_; ++b) {
        auto eb = f.element(b);
        add_[a * q_ + b] = static_cast<std::uint8_t>(f.index(f.add(ea, eb)));
        mul_[a * q_ + b] = static_cast<std::uint8_t>(f.index(f.mul(ea, eb)));
      }
    }
    zero_ = static_cast<std::uint8_t>(f.index(f.zero()));
    one_ = static_cast<std::uint8_t>(f.index(f.one()));
  }

  unsigned size() const { return q_; }
  std::uint8_t zero() const { return zero_; }
  std::uint8_t one() const { return one_; }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + b]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a * q_ + b]; }
  std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add(a, neg(b)); }

 private:
  unsigned q_ = 0;
  std::vector<std::uint8_t> add_, mul_, neg_;
  std::uint8_t zero_ = 0, one_ = 1;
};

/// |GL_n(F_q)| or |SL_n(F_q)|.
inline std::uint64_t group_order(std::uint64_t q, std::size_t n, GroupKind g) {
  std::uint64_t qn = 1;
  for (std::size_t i = 0; i < n; ++i) qn *= q;
  std::uint64_t order = 1, qi = 1;
  for (std::size_t i = 0; i < n; ++i) {
    order *= qn - qi;
    qi *= q;
  }
  return g == GroupKind::GL ? order : order / (q - 1);
}

template <FiniteField F>
struct OracleOrbit {
  std::uint64_t code;      // least member
  Pencil<F> rep;
  std::uint64_t size;
  std::uint64_t stabilizer;
};

template <FiniteField F>
struct OrbitTable {
  std::size_t dim = 0;  // n + 1
  GroupKind group = GroupKind::GL;
  bool symmetric = true;
  std::uint64_t group_order = 0;
  std::vector<OracleOrbit<F>> orbits;  // only orbits passing the constraint
  std::vector<std::int32_t> orbit_id;  // per code: index into orbits, -1 if filtered out

  std::uint64_t pencil_count() const {
    std::uint64_t s = 0;
    for (const auto& o : orbits) s += o.size;
    return s;
  }
};

template <FiniteField F>
class Oracle {
 public:
  using Small = std::vector<std::uint8_t>;  // M0 then M1, row-major, full matrices

  Oracle(const F& f, std::size_t dim, bool symmetric, std::uint64_t budget = kDefaultOracleBudget)
      : f_(f), sf_(f), dim_(dim), symmetric_(symmetric), budget_(budget) {
    if (dim == 0) fail(ErrorKind::InvalidInput, "pencil size must be positive");
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = symmetric ? i : 0; j < dim; ++j) slots_.push_back(i * dim + j);
    const std::size_t digits = 2 * slots_.size();
    total_ = 1;
    for (std::size_t i = 0; i < digits; ++i) {
      if (total_ > (std::uint64_t{1} << 40) / sf_.size()) { total_ = 0; break; }
      total_ *= sf_.size();
    }
  }

  const F& field() const { return f_; }
  std::size_t dim() const { return dim_; }
  bool symmetric() const { return symmetric_; }
  /// Number of encodable pencils (0 if astronomically large).
  std::uint64_t total() const { return total_; }

  std::uint64_t encode(const Small& m) const {
    std::uint64_t c = 0;
    const std::size_t sq = dim_ * dim_;
    for (std::size_t part = 0; part < 2; ++part)
      for (auto s : slots_) c = c * sf_.size() + m[part * sq + s];
    return c;
  }

  Small decode(std::uint64_t c) const {
    const std::size_t sq = dim_ * dim_;
    Small m(2 * sq, sf_.zero());
    for (std::size_t part = 2; part-- > 0;)
      for (std::size_t k = slots_.size(); k-- > 0;) {
        auto s = slots_[k];
        auto d = static_cast<std::uint8_t>(c % sf_.size());
        c /= sf_.size();
        m[part * sq + s] = d;
        if (symmetric_) m[part * sq + (s % dim_) * dim_ + s / dim_] = d;
      }
    return m;
  }

  Small to_small(const Pencil<F>& p) const {
    if (p.size() != dim_) fail(ErrorKind::SizeMismatch, "pencil size does not match the oracle");
    if (symmetric_ && !p.symmetric) fail(ErrorKind::InvalidInput, "oracle is in symmetric mode");
    const std::size_t sq = dim_ * dim_;
    Small m(2 * sq);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        m[i * dim_ + j] = static_cast<std::uint8_t>(f_.index(p.m0(i, j)));
        m[sq + i * dim_ + j] = static_cast<std::uint8_t>(f_.index(p.m1(i, j)));
      }
    return m;
  }

  Pencil<F> to_pencil(const Small& m) const {
    const std::size_t sq = dim_ * dim_;
    auto a = mat::zero(f_, dim_, dim_), b = mat::zero(f_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        a(i, j) = f_.element(m[i * dim_ + j]);
        b(i, j) = f_.element(m[sq + i * dim_ + j]);
      }
    return make_pencil(f_, a, b);
  }

  std::uint64_t code(const Pencil<F>& p) const { return encode(to_small(p)); }
  Pencil<F> pencil(std::uint64_t c) const { return to_pencil(decode(c)); }

  Small small_matrix(const Matrix<F>& p) const {
    Small r(dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) r[i * dim_ + j] = static_cast<std::uint8_t>(f_.index(p(i, j)));
    return r;
  }

  /// (P^t M0 P, P^t M1 P) on table elements.
  Small act(const Small& m, const Small& p) const {
    const std::size_t n = dim_, sq = n * n;
    Small r(2 * sq), t(sq);
    for (std::size_t part = 0; part < 2; ++part) {
      const std::uint8_t* a = m.data() + part * sq;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          std::uint8_t acc = sf_.zero();
          for (std::size_t k = 0; k < n; ++k) acc = sf_.add(acc, sf_.mul(a[i * n + k], p[k * n + j]));
          t[i * n + j] = acc;
        }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          std::uint8_t acc = sf_.zero();
          for (std::size_t k = 0; k < n; ++k) acc = sf_.add(acc, sf_.mul(p[k * n + i], t[k * n + j]));
          r[part * sq + i * n + j] = acc;
        }
    }
    return r;
  }

  /// Transvections I + a E_ij (a != 0, i != j), plus diag(a, 1, ..., 1) for GL.
  std::vector<Small> generators(GroupKind g) const {
    std::vector<Small> gens;
    const std::size_t n = dim_;
    auto identity = [&] {
      Small p(n * n, sf_.zero());
      for (std::size_t i = 0; i < n; ++i) p[i * n + i] = sf_.one();
      return p;
    };
    for (unsigned a = 0; a < sf_.size(); ++a) {
      if (a == sf_.zero()) continue;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j) continue;
          auto p = identity();
          p[i * n + j] = static_cast<std::uint8_t>(a);
          gens.push_back(std::move(p));
        }
      if (g == GroupKind::GL && a != sf_.one()) {
        auto p = identity();
        p[0] = static_cast<std::uint8_t>(a);
        gens.push_back(std::move(p));
      }
    }
    return gens;
  }

  std::uint64_t order(GroupKind g) const { return group_order(sf_.size(), dim_, g); }

  /// Orbit partition of all encodable pencils; orbits whose least member
  /// fails `keep` are dropped from the table (the constraint must be
  /// orbit-invariant). The default keeps nonzero discriminants.
  OrbitTable<F> enumerate(GroupKind g, std::function<bool(const Pencil<F>&)> keep = {}) const {
    if (!keep) keep = [this](const Pencil<F>& p) { return !disc(f_, p).is_zero(f_); };
    auto gens = generators(g);
    if (total_ == 0 || total_ > (std::uint64_t{1} << 31) || total_ * gens.size() > budget_)
      fail(ErrorKind::BudgetExceeded, "orbit enumeration exceeds the work budget");
    OrbitTable<F> t;
    t.dim = dim_;
    t.group = g;
    t.symmetric = symmetric_;
    t.group_order = order(g);
    t.orbit_id.assign(total_, -2);
    std::vector<std::uint64_t> stack;
    for (std::uint64_t start = 0; start < total_; ++start) {
      if (t.orbit_id[start] != -2) continue;
      auto rep = pencil(start);
      const bool kept = keep(rep);
      const std::int32_t id = kept ? static_cast<std::int32_t>(t.orbits.size()) : -1;
      std::uint64_t size = 0;
      t.orbit_id[start] = id;
      stack.assign(1, start);
      while (!stack.empty()) {
        auto c = stack.back();
        stack.pop_back();
        ++size;
        auto m = decode(c);
        for (const auto& p : gens) {
          auto d = encode(act(m, p));
          if (t.orbit_id[d] == -2) {
            t.orbit_id[d] = id;
            stack.push_back(d);
          }
        }
      }
      if (t.group_order % size != 0) fail(ErrorKind::ConventionFailure, "orbit size does not divide the group order");
      if (kept) t.orbits.push_back({start, std::move(rep), size, t.group_order / size});
    }
    return t;
  }

  /// Orbit of a single pencil as a set of codes.
  std::unordered_set<std::uint64_t> orbit(const Pencil<F>& p, GroupKind g) const {
    auto gens = generators(g);
    if (order(g) * gens.size() > budget_) fail(ErrorKind::BudgetExceeded, "orbit exceeds the work budget");
    std::unordered_set<std::uint64_t> seen{code(p)};
    std::vector<std::uint64_t> stack{code(p)};
    while (!stack.empty()) {
      auto m = decode(stack.back());
      stack.pop_back();
      for (const auto& q : gens) {
        auto d = encode(act(m, q));
        if (seen.insert(d).second) stack.push_back(d);
      }
    }
    return seen;
  }

  /// True iff act(a, P) = b for some P in the group.
  bool equivalent(const Pencil<F>& a, const Pencil<F>& b, GroupKind g) const {
    if (a.size() != dim_ || b.size() != dim_) return false;
    return orbit(a, g).count(code(b)) > 0;
  }

  /// Calls `fn` on every element of the group, found by scanning all
  /// matrices.
  template <class Fn>
  void for_each_group_element(GroupKind g, Fn fn) const {
    const std::size_t sq = dim_ * dim_;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < sq; ++i) {
      if (count > budget_ / sf_.size()) fail(ErrorKind::BudgetExceeded, "group enumeration exceeds the work budget");
      count *= sf_.size();
    }
    Small p(sq, sf_.zero());
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t t = idx;
      for (std::size_t k = 0; k < sq; ++k) {
        p[k] = static_cast<std::uint8_t>(t % sf_.size());
        t /= sf_.size();
      }
      auto d = small_det(p);
      if (d == sf_.zero()) continue;
      if (g == GroupKind::SL && d != sf_.one()) continue;
      fn(p);
    }
  }

  /// All P in the group with act(m, P) = m.
  std::vector<Matrix<F>> stabilizer(const Pencil<F>& m, GroupKind g) const {
    auto sm = to_small(m);
    std::vector<Matrix<F>> r;
    for_each_group_element(g, [&](const Small& p) {
      if (act(sm, p) == sm) {
        auto x = mat::zero(f_, dim_, dim_);
        for (std::size_t i = 0; i < dim_; ++i)
          for (std::size_t j = 0; j < dim_; ++j) x(i, j) = f_.element(p[i * dim_ + j]);
        r.push_back(std::move(x));
      }
    });
    return r;
  }

 private:
  std::uint8_t small_det(Small a) const {
    const std::size_t n = dim_;
    std::uint8_t det = sf_.one();
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (piv < n && a[piv * n + c] == sf_.zero()) ++piv;
      if (piv == n) return sf_.zero();
      if (piv != c) {
        for (std::size_t k = 0; k < n; ++k) std::swap(a[piv * n + k], a[c * n + k]);
        det = sf_.neg(det);
      }
      det = sf_.mul(det, a[c * n + c]);
      // inverse by search; the field is tiny
      std::uint8_t inv = 0;
      for (unsigned x = 0; x < sf_.size(); ++x)
        if (sf_.mul(a[c * n + c], static_cast<std::uint8_t>(x)) == sf_.one()) inv = static_cast<std::uint8_t>(x);
      for (std::size_t r = c + 1; r < n; ++r) {
        auto factor = sf_.mul(a[r * n + c], inv);
        if (factor == sf_.zero()) continue;
        for (std::size_t k = c; k < n; ++k) a[r * n + k] = sf_.sub(a[r * n + k], sf_.mul(factor, a[c * n + k]));
      }
    }
    return det;
  }

  F f_;
  SmallField sf_;
  std::size_t dim_;
  bool symmetric_;
  std::uint64_t budget_;
  std::vector<std::size_t> slots_;
  std::uint64_t total_ = 0;
};

template <FiniteField F>
bool brute_equivalent(const F& f, const Pencil<F>& a, const Pencil<F>& b, GroupKind g,
                      std::uint64_t budget = kDefaultOracleBudget) {
  if (a.size() != b.size()) return false;
  Oracle<F> o(f, a.size(), a.symmetric && b.symmetric, budget);
  return o.equivalent(a, b, g);
}

template <FiniteField F>
std::vector<Matrix<F>> brute_stabilizer(const F& f, const Pencil<F>& m, GroupKind g,
                                        std::uint64_t budget = kDefaultOracleBudget) {
  Oracle<F> o(f, m.size(), m.symmetric, budget);
  return o.stabilizer(m, g);
}

}  // namespace pencilform
