#pragma once

// Element types the generic algorithms run over.
//
// A domain bundles the ambient structure (field, dimension, number of points)
// with the group law. Elements are small trivially copyable values so that
// hash-set BFS stays cheap; the domain supplies identity, mul, inv, a hasher
// and a canonical text encoding.

#include <array>
#include <concepts>
#include <cstdint>
#include <cstring>
#include <numeric>
#include <string>
#include <vector>

#include "bswidth/error.hpp"
#include "bswidth/gf.hpp"
#include "bswidth/mat.hpp"

namespace bsw {

template <class D>
concept GroupDomain = requires(const D& d, const typename D::Element& a) {
  typename D::Hash;
  { d.identity() } -> std::same_as<typename D::Element>;
  { d.mul(a, a) } -> std::same_as<typename D::Element>;
  { d.inv(a) } -> std::same_as<typename D::Element>;
  { d.encode(a) } -> std::convertible_to<std::string>;
  { a == a } -> std::convertible_to<bool>;
};

namespace detail {
inline std::uint64_t fnv(const std::uint8_t* p, std::size_t n, std::uint64_t h = 1469598103934665603ull) {
  for (std::size_t i = 0; i < n; ++i) h = (h ^ p[i]) * 1099511628211ull;
  return h;
}
/// Final avalanche so that both halves of the hash are usable.
inline std::uint64_t mix(std::uint64_t h) {
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdull;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ull;
  return h ^ (h >> 33);
}
constexpr char kHex[] = "0123456789abcdef";
}  // namespace detail

/// Matrix part plus automorphism word phi^a tau^b.
struct ExtElem {
  mat::Mat m;
  std::uint8_t a = 0;
  std::uint8_t b = 0;

  bool inner() const noexcept { return a == 0 && b == 0; }
  friend bool operator==(const ExtElem& x, const ExtElem& y) noexcept {
    return x.a == y.a && x.b == y.b && x.m == y.m;
  }
};

struct ExtElemHash {
  std::size_t operator()(const ExtElem& x) const noexcept {
    std::uint64_t h = detail::fnv(x.m.e.data(), std::size_t{x.m.n} * x.m.n);
    h = (h ^ (std::uint64_t{x.a} << 8 | x.b)) * 1099511628211ull;
    return static_cast<std::size_t>(detail::mix(h));
  }
};

/// Matrices over a finite field, optionally modulo scalars, extended by the
/// automorphisms phi (entrywise Frobenius) and tau (inverse transpose).
///
/// (g, s)(h, r) = (g s(h), s r), where s(h) applies phi^a first, then tau^b.
class MatrixDomain {
 public:
  using Element = ExtElem;
  using Hash = ExtElemHash;

  MatrixDomain(gf::FieldPtr f, unsigned n, bool projective) : f_(std::move(f)), n_(n), projective_(projective) {
    mat::check_field(*f_);
    mat::zero(n);  // validates n
  }

  const gf::Field& field() const noexcept { return *f_; }
  const gf::FieldPtr& field_ptr() const noexcept { return f_; }
  unsigned dim() const noexcept { return n_; }
  bool projective() const noexcept { return projective_; }

  Element identity() const { return {mat::identity(n_), 0, 0}; }

  /// Wraps a matrix (and autword) as a canonical element.
  Element make(const mat::Mat& m, unsigned a = 0, unsigned b = 0) const {
    if (m.n != n_) throw SpecError("matrix of dimension " + std::to_string(m.n) + " in a domain of dimension " + std::to_string(n_));
    if (mat::det(*f_, m) == 0) throw MathError("singular matrix is not a group element");
    return {normalize(m), static_cast<std::uint8_t>(a % f_->k()), static_cast<std::uint8_t>(b % 2)};
  }

  /// The automorphism phi^a tau^b applied to a matrix.
  mat::Mat apply_aut(const mat::Mat& h, unsigned a, unsigned b) const {
    mat::Mat r = a ? mat::phi(*f_, h, a) : h;
    if (b) r = mat::tau(*f_, r);
    return r;
  }

  Element mul(const Element& x, const Element& y) const {
    if (x.inner()) {
      return {normalize(mat::mul(*f_, x.m, y.m)), y.a, y.b};
    }
    const mat::Mat h = apply_aut(y.m, x.a, x.b);
    return {normalize(mat::mul(*f_, x.m, h)), static_cast<std::uint8_t>((x.a + y.a) % f_->k()),
            static_cast<std::uint8_t>(x.b ^ y.b)};
  }

  Element inv(const Element& x) const {
    const mat::Mat gi = mat::inverse(*f_, x.m);
    if (x.inner()) return {normalize(gi), 0, 0};
    const unsigned ai = (f_->k() - x.a) % f_->k();
    return {normalize(apply_aut(gi, ai, x.b)), static_cast<std::uint8_t>(ai), x.b};
  }

  /// "a.b:" followed by the row-major entries as hex digit pairs.
  std::string encode(const Element& x) const {
    std::string s = std::to_string(x.a) + "." + std::to_string(x.b) + ":";
    for (unsigned i = 0; i < n_ * n_; ++i) {
      s += detail::kHex[x.m.e[i] >> 4];
      s += detail::kHex[x.m.e[i] & 15];
    }
    return s;
  }

  Element decode(const std::string& s) const {
    const auto dot = s.find('.');
    const auto colon = s.find(':');
    if (dot == std::string::npos || colon == std::string::npos || s.size() != colon + 1 + 2 * n_ * n_)
      throw SpecError("malformed element encoding: " + s);
    mat::Mat m = mat::zero(n_);
    for (unsigned i = 0; i < n_ * n_; ++i) {
      const unsigned v = static_cast<unsigned>(std::stoul(s.substr(colon + 1 + 2 * i, 2), nullptr, 16));
      if (v >= f_->q()) throw SpecError("entry out of range in encoding: " + s);
      m.e[i] = static_cast<std::uint8_t>(v);
    }
    return make(m, static_cast<unsigned>(std::stoul(s.substr(0, dot))),
                static_cast<unsigned>(std::stoul(s.substr(dot + 1, colon - dot - 1))));
  }

  mat::Mat normalize(const mat::Mat& m) const { return projective_ ? mat::canon(*f_, m) : m; }

 private:
  gf::FieldPtr f_;
  unsigned n_;
  bool projective_;
};

inline constexpr unsigned kMaxPoints = 16;

/// Permutation of {0..n-1}; img[i] is the image of i.
struct Perm {
  std::uint8_t n = 0;
  std::array<std::uint8_t, kMaxPoints> img{};

  friend bool operator==(const Perm& x, const Perm& y) noexcept { return x.n == y.n && x.img == y.img; }
};

struct PermHash {
  std::size_t operator()(const Perm& x) const noexcept {
    return static_cast<std::size_t>(detail::mix(detail::fnv(x.img.data(), x.n)));
  }
};

/// Permutations acting on the right: x*y means "apply x, then y".
class PermDomain {
 public:
  using Element = Perm;
  using Hash = PermHash;

  explicit PermDomain(unsigned n) : n_(n) {
    if (n == 0 || n > kMaxPoints) throw SpecError("permutation degree " + std::to_string(n) + " outside 1..16");
  }
  unsigned degree() const noexcept { return n_; }

  Element identity() const {
    Perm p;
    p.n = static_cast<std::uint8_t>(n_);
    std::iota(p.img.begin(), p.img.begin() + n_, std::uint8_t{0});
    return p;
  }
  Element mul(const Element& x, const Element& y) const {
    Perm r;
    r.n = x.n;
    for (unsigned i = 0; i < n_; ++i) r.img[i] = y.img[x.img[i]];
    return r;
  }
  Element inv(const Element& x) const {
    Perm r;
    r.n = x.n;
    for (unsigned i = 0; i < n_; ++i) r.img[x.img[i]] = static_cast<std::uint8_t>(i);
    return r;
  }

  /// From an image list (0-based).
  Element make(const std::vector<unsigned>& images) const {
    if (images.size() != n_) throw SpecError("permutation needs " + std::to_string(n_) + " images");
    Perm p;
    p.n = static_cast<std::uint8_t>(n_);
    std::array<bool, kMaxPoints> seen{};
    for (unsigned i = 0; i < n_; ++i) {
      if (images[i] >= n_ || seen[images[i]]) throw SpecError("not a permutation");
      seen[images[i]] = true;
      p.img[i] = static_cast<std::uint8_t>(images[i]);
    }
    return p;
  }

  /// From disjoint cycles given 1-based, e.g. {{1,2,3},{4,5}}.
  Element cycles(const std::vector<std::vector<unsigned>>& cs) const {
    Perm p = identity();
    for (const auto& c : cs) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        const unsigned from = c[i] - 1;
        const unsigned to = c[(i + 1) % c.size()] - 1;
        if (c[i] == 0 || from >= n_ || to >= n_) throw SpecError("cycle point out of range");
        p.img[from] = static_cast<std::uint8_t>(to);
      }
    }
    return make(std::vector<unsigned>(p.img.begin(), p.img.begin() + n_));
  }

  bool is_even(const Element& x) const {
    std::array<bool, kMaxPoints> seen{};
    unsigned transpositions = 0;
    for (unsigned i = 0; i < n_; ++i) {
      if (seen[i]) continue;
      unsigned len = 0;
      for (unsigned j = i; !seen[j]; j = x.img[j]) {
        seen[j] = true;
        ++len;
      }
      transpositions += len - 1;
    }
    return transpositions % 2 == 0;
  }

  std::string encode(const Element& x) const {
    std::string s;
    for (unsigned i = 0; i < n_; ++i) s += (i ? "," : "") + std::to_string(x.img[i] + 1);
    return s;
  }
  Element decode(const std::string& s) const {
    std::vector<unsigned> im;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      auto next = s.find(',', pos);
      if (next == std::string::npos) next = s.size();
      const unsigned v = static_cast<unsigned>(std::stoul(s.substr(pos, next - pos)));
      if (v == 0) throw SpecError("malformed permutation encoding: " + s);
      im.push_back(v - 1);
      pos = next + 1;
    }
    return make(im);
  }

 private:
  unsigned n_;
};

static_assert(GroupDomain<MatrixDomain>);
static_assert(GroupDomain<PermDomain>);

}  // namespace bsw
