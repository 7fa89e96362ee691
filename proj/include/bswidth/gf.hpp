#pragma once

// Exact arithmetic in GF(p^k).
//
// Elements are encoded as integers: the coefficient vector (c_0, ..., c_{k-1})
// of the residue polynomial maps to sum c_i p^i. That integer order is the
// "field enumeration order" used by every deterministic search in the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "bswidth/error.hpp"
#include "bswidth/numtheory.hpp"

namespace bsw::gf {

using Code = std::uint32_t;

inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t{1} << 16;
/// Fields up to this order get full q*q addition and multiplication tables.
inline constexpr std::uint64_t kTableLimit = 1024;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Polynomial over GF(p), coefficients low degree first.
using Poly = std::vector<Code>;

namespace detail {

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a modulo a monic b over GF(p).
inline Poly poly_mod(Poly a, const Poly& b, Code p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const Code lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<Code>((a[shift + i] + (p - lead) * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

inline Poly poly_from_code(std::uint64_t c, Code p, unsigned len) {
  Poly out(len, 0);
  for (unsigned i = 0; i < len; ++i) {
    out[i] = static_cast<Code>(c % p);
    c /= p;
  }
  return out;
}

inline bool is_irreducible(const Poly& f, Code p) {
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  if (deg <= 1) return true;
  // trial division by every monic polynomial of degree 1..deg/2
  for (unsigned d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g = poly_from_code(c, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

/// GF(p^k) with a fixed modulus. Immutable once built; obtain through make_field.
class Field {
 public:
  Code p() const noexcept { return p_; }
  unsigned k() const noexcept { return k_; }
  Code q() const noexcept { return q_; }
  /// Monic modulus, low degree first, size k+1.
  const Poly& modulus() const noexcept { return modulus_; }
  std::string name() const {
    return k_ == 1 ? "GF(" + std::to_string(p_) + ")"
                   : "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
  }
  bool has_tables() const noexcept { return !add_.empty(); }
  /// Row-major q*q tables, or nullptr when the field is too large for them.
  const std::uint16_t* add_table() const noexcept { return add_.empty() ? nullptr : add_.data(); }
  const std::uint16_t* mul_table() const noexcept { return mul_.empty() ? nullptr : mul_.data(); }

  Code zero() const noexcept { return 0; }
  Code one() const noexcept { return 1; }
  /// Least generator of the multiplicative group in enumeration order.
  Code primitive() const noexcept { return exp_.empty() ? 1 : exp_[q_ == 2 ? 0 : 1]; }

  Code add(Code a, Code b) const noexcept {
    if (!add_.empty()) return add_[a * q_ + b];
    return add_digits(a, b);
  }
  Code sub(Code a, Code b) const noexcept { return add(a, neg_[b]); }
  Code neg(Code a) const noexcept { return neg_[a]; }
  Code mul(Code a, Code b) const noexcept {
    if (!mul_.empty()) return mul_[a * q_ + b];
    if (a == 0 || b == 0) return 0;
    Code s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  Code inv(Code a) const {
    if (a == 0) throw MathError("division by zero in " + name());
    return inv_[a];
  }
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::uint64_t e) const noexcept {
    Code r = 1;
    Code b = a;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  /// a^(p^m); the identity when m is a multiple of k.
  Code frobenius(Code a, unsigned m) const noexcept {
    m %= k_;
    for (unsigned i = 0; i < m; ++i) a = frob_[a];
    return a;
  }
  /// a^(sqrt q) for a quadratic extension; requires even k.
  Code conj(Code a) const {
    if (k_ % 2 != 0) throw SpecError("conj requires a field of even degree, got " + name());
    return frobenius(a, k_ / 2);
  }
  bool is_square(Code a) const noexcept {
    if (a == 0 || p_ == 2) return true;
    return log_[a] % 2 == 0;
  }
  /// Multiplicative order of a nonzero element.
  std::uint64_t mult_order(Code a) const {
    if (a == 0) throw MathError("zero has no multiplicative order");
    const std::uint64_t n = q_ - 1;
    std::uint64_t ord = n;
    for (auto l : prime_divisors(n)) {
      while (ord % l == 0 && pow(a, ord / l) == 1) ord /= l;
    }
    return ord;
  }
  /// Order of the smallest subfield containing a.
  Code subfield_order(Code a) const noexcept {
    for (unsigned d = 1; d <= k_; ++d) {
      if (k_ % d == 0 && frobenius(a, d) == a) return static_cast<Code>(ipow(p_, d));
    }
    return q_;
  }
  /// Embed an integer from the prime field.
  Code from_int(long long v) const noexcept {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Code>(r);
  }

  /// Reference multiplication through polynomial reduction; the tables are built from it.
  Code mul_reference(Code a, Code b) const {
    const Poly pa = detail::poly_from_code(a, p_, k_);
    const Poly pb = detail::poly_from_code(b, p_, k_);
    Poly prod(2 * k_, 0);
    for (unsigned i = 0; i < k_; ++i)
      for (unsigned j = 0; j < k_; ++j)
        prod[i + j] = static_cast<Code>((prod[i + j] + pa[i] * pb[j]) % p_);
    return to_code(detail::poly_mod(prod, modulus_, p_));
  }
  Code add_reference(Code a, Code b) const noexcept { return add_digits(a, b); }

  static FieldPtr make(Code p, unsigned k, std::uint64_t cap = kDefaultFieldCap);

 private:
  Field() = default;

  Code to_code(const Poly& a) const noexcept {
    Code c = 0;
    for (std::size_t i = a.size(); i-- > 0;) c = c * p_ + a[i];
    return c;
  }

  Code add_digits(Code a, Code b) const noexcept {
    Code r = 0;
    Code place = 1;
    for (unsigned i = 0; i < k_; ++i) {
      r += ((a % p_ + b % p_) % p_) * place;
      a /= p_;
      b /= p_;
      place *= p_;
    }
    return r;
  }

  void build();

  Code p_ = 0;
  unsigned k_ = 0;
  Code q_ = 0;
  Poly modulus_;
  std::vector<Code> exp_, log_, neg_, inv_, frob_;
  std::vector<std::uint16_t> add_, mul_;
};

inline void Field::build() {
  neg_.resize(q_);
  for (Code a = 0; a < q_; ++a) {
    Code r = 0, place = 1, x = a;
    for (unsigned i = 0; i < k_; ++i) {
      r += ((p_ - x % p_) % p_) * place;
      x /= p_;
      place *= p_;
    }
    neg_[a] = r;
  }
  // primitive element: least code whose powers exhaust the multiplicative group
  const std::uint64_t n = q_ - 1;
  const auto ls = prime_divisors(n);
  auto slow_pow = [&](Code a, std::uint64_t e) {
    Code r = 1, b = a;
    while (e) {
      if (e & 1) r = mul_reference(r, b);
      b = mul_reference(b, b);
      e >>= 1;
    }
    return r;
  };
  Code g = 1;
  if (q_ > 2) {
    for (g = 2; g < q_; ++g) {
      bool ok = slow_pow(g, n) == 1;
      for (auto l : ls) ok = ok && slow_pow(g, n / l) != 1;
      if (ok) break;
    }
  }
  exp_.resize(n);
  log_.assign(q_, 0);
  Code x = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_[i] = x;
    log_[x] = static_cast<Code>(i);
    x = mul_reference(x, g);
  }
  inv_.assign(q_, 0);
  for (Code a = 1; a < q_; ++a) inv_[a] = exp_[(n - log_[a]) % n];
  frob_.resize(q_);
  for (Code a = 0; a < q_; ++a) frob_[a] = a == 0 ? 0 : exp_[(std::uint64_t{log_[a]} * p_) % n];
  if (q_ <= kTableLimit) {
    add_.resize(std::size_t{q_} * q_);
    mul_.resize(std::size_t{q_} * q_);
    for (Code a = 0; a < q_; ++a) {
      for (Code b = 0; b < q_; ++b) {
        add_[a * q_ + b] = static_cast<std::uint16_t>(add_digits(a, b));
        Code m = 0;
        if (a != 0 && b != 0) {
          Code s = log_[a] + log_[b];
          if (s >= n) s -= static_cast<Code>(n);
          m = exp_[s];
        }
        mul_[a * q_ + b] = static_cast<std::uint16_t>(m);
      }
    }
  }
}

inline FieldPtr Field::make(Code p, unsigned k, std::uint64_t cap) {
  if (!is_prime(p)) throw SpecError("field characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw SpecError("field degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > cap) throw CapExceeded("field order " + std::to_string(p) + "^" + std::to_string(k), cap);
  }
  static std::mutex mu;
  static std::map<std::pair<Code, unsigned>, FieldPtr> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find({p, k}); it != cache.end()) return it->second;

  std::shared_ptr<Field> f(new Field());
  f->p_ = p;
  f->k_ = k;
  f->q_ = static_cast<Code>(q);
  // smallest monic irreducible by integer value of its non-leading coefficients
  for (std::uint64_t c = 0; c < q; ++c) {
    Poly cand = detail::poly_from_code(c, p, k);
    cand.push_back(1);
    if (detail::is_irreducible(cand, p)) {
      f->modulus_ = std::move(cand);
      break;
    }
  }
  f->build();
  cache.emplace(std::make_pair(p, k), f);
  return f;
}

inline FieldPtr make_field(Code p, unsigned k, std::uint64_t cap = kDefaultFieldCap) {
  return Field::make(p, k, cap);
}

/// Field of order q (a prime power).
inline FieldPtr field_of_order(std::uint64_t q, std::uint64_t cap = kDefaultFieldCap) {
  auto [p, k] = prime_power(q);
  if (p == 0) throw SpecError(std::to_string(q) + " is not a prime power");
  return make_field(static_cast<Code>(p), k, cap);
}

/// Value-semantic element of a field.
class FieldElem {
 public:
  FieldElem(FieldPtr f, Code v) : f_(std::move(f)), v_(v) {
    if (v_ >= f_->q()) throw SpecError("code out of range for " + f_->name());
  }

  const FieldPtr& field() const noexcept { return f_; }
  Code code() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_ == 0; }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    check(a, b);
    return {a.f_, a.f_->add(a.v_, b.v_)};
  }
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    check(a, b);
    return {a.f_, a.f_->sub(a.v_, b.v_)};
  }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    check(a, b);
    return {a.f_, a.f_->mul(a.v_, b.v_)};
  }
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    check(a, b);
    return {a.f_, a.f_->div(a.v_, b.v_)};
  }
  FieldElem operator-() const { return {f_, f_->neg(v_)}; }
  FieldElem inverse() const { return {f_, f_->inv(v_)}; }
  FieldElem pow(std::uint64_t e) const { return {f_, f_->pow(v_, e)}; }
  FieldElem frobenius(unsigned m) const { return {f_, f_->frobenius(v_, m)}; }
  FieldElem conj() const { return {f_, f_->conj(v_)}; }

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.f_->p() == b.f_->p() && a.f_->k() == b.f_->k() && a.v_ == b.v_;
  }
  friend std::ostream& operator<<(std::ostream& os, const FieldElem& a) {
    return os << a.f_->name() << ":" << a.v_;
  }

 private:
  static void check(const FieldElem& a, const FieldElem& b) {
    if (a.f_ != b.f_ && (a.f_->p() != b.f_->p() || a.f_->k() != b.f_->k()))
      throw SpecError("field mismatch: " + a.f_->name() + " vs " + b.f_->name());
  }

  FieldPtr f_;
  Code v_;
};

enum class Special { trace_zero, trace_minus_one, norm_minus_one };

/// First element (in enumeration order) of F_{q^2} solving the requested
/// equation under the involution a -> a^q:
///   trace_zero:      b + conj(b) = 0, b != 0
///   trace_minus_one: g + conj(g) = -1
///   norm_minus_one:  m * conj(m) = -1
inline FieldElem solve_special(const FieldPtr& f, Special which) {
  if (f->k() % 2 != 0) throw SpecError("solve_special needs a quadratic extension, got " + f->name());
  const Code minus_one = f->neg(1);
  for (Code a = 0; a < f->q(); ++a) {
    const Code c = f->conj(a);
    bool hit = false;
    switch (which) {
      case Special::trace_zero: hit = a != 0 && f->add(a, c) == 0; break;
      case Special::trace_minus_one: hit = f->add(a, c) == minus_one; break;
      case Special::norm_minus_one: hit = f->mul(a, c) == minus_one; break;
    }
    if (hit) return {f, a};
  }
  throw MathError("no solution for special equation in " + f->name());
}

}  // namespace bsw::gf
