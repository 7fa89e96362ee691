#pragma once

// Dense square matrices over a small finite field.
//
// Row vectors, right action: the image of v under A is vA, and AB means
// "apply A, then B". Entries are field codes; the field itself travels
// separately so that matrices stay trivially copyable and hashable.

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bswidth/error.hpp"
#include "bswidth/gf.hpp"

namespace bsw::mat {

using gf::Code;
using gf::Field;

inline constexpr unsigned kMaxDim = 8;
/// Matrix entries are stored in one byte.
inline constexpr std::uint64_t kMaxMatrixField = 256;

struct Mat {
  std::uint8_t n = 0;
  std::array<std::uint8_t, kMaxDim * kMaxDim> e{};

  Code at(unsigned i, unsigned j) const noexcept { return e[i * n + j]; }
  void set(unsigned i, unsigned j, Code v) noexcept { e[i * n + j] = static_cast<std::uint8_t>(v); }
  unsigned dim() const noexcept { return n; }

  friend bool operator==(const Mat& a, const Mat& b) noexcept {
    return a.n == b.n && std::memcmp(a.e.data(), b.e.data(), std::size_t{a.n} * a.n) == 0;
  }
};

inline void check_field(const Field& f) {
  if (f.q() > kMaxMatrixField)
    throw SpecError("matrix entries limited to fields of order <= 256, got " + f.name());
}

inline Mat zero(unsigned n) {
  if (n == 0 || n > kMaxDim) throw SpecError("matrix dimension " + std::to_string(n) + " outside 1..8");
  Mat m;
  m.n = static_cast<std::uint8_t>(n);
  return m;
}

inline Mat identity(unsigned n) {
  Mat m = zero(n);
  for (unsigned i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

inline Mat from_rows(std::initializer_list<std::initializer_list<Code>> rows) {
  Mat m = zero(static_cast<unsigned>(rows.size()));
  unsigned i = 0;
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw SpecError("from_rows: matrix must be square");
    unsigned j = 0;
    for (Code v : r) m.set(i, j++, v);
    ++i;
  }
  return m;
}

inline Mat from_rows(const std::vector<std::vector<Code>>& rows) {
  Mat m = zero(static_cast<unsigned>(rows.size()));
  for (unsigned i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw SpecError("from_rows: matrix must be square");
    for (unsigned j = 0; j < rows.size(); ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

inline void check_dims(const Mat& a, const Mat& b) {
  if (a.n != b.n) throw SpecError("dimension mismatch: " + std::to_string(a.n) + " vs " + std::to_string(b.n));
}

inline Mat mul(const Field& f, const Mat& a, const Mat& b) {
  check_dims(a, b);
  const unsigned n = a.n;
  Mat c;
  c.n = a.n;
  if (const std::uint16_t* mt = f.mul_table()) {
    const std::uint16_t* at = f.add_table();
    const unsigned q = f.q();
    for (unsigned i = 0; i < n; ++i) {
      const std::uint8_t* ar = &a.e[i * n];
      for (unsigned j = 0; j < n; ++j) {
        unsigned acc = 0;
        for (unsigned t = 0; t < n; ++t) acc = at[acc * q + mt[ar[t] * q + b.e[t * n + j]]];
        c.e[i * n + j] = static_cast<std::uint8_t>(acc);
      }
    }
    return c;
  }
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      Code acc = 0;
      for (unsigned t = 0; t < n; ++t) acc = f.add(acc, f.mul(a.at(i, t), b.at(t, j)));
      c.set(i, j, acc);
    }
  }
  return c;
}

inline Mat add(const Field& f, const Mat& a, const Mat& b) {
  check_dims(a, b);
  Mat c = zero(a.n);
  for (unsigned i = 0; i < a.n * a.n; ++i) c.e[i] = static_cast<std::uint8_t>(f.add(a.e[i], b.e[i]));
  return c;
}

inline Mat scale(const Field& f, Code s, const Mat& a) {
  Mat c = zero(a.n);
  for (unsigned i = 0; i < a.n * a.n; ++i) c.e[i] = static_cast<std::uint8_t>(f.mul(s, a.e[i]));
  return c;
}

inline Mat transpose(const Mat& a) {
  Mat t = zero(a.n);
  for (unsigned i = 0; i < a.n; ++i)
    for (unsigned j = 0; j < a.n; ++j) t.set(j, i, a.at(i, j));
  return t;
}

inline Code det(const Field& f, Mat a) {
  const unsigned n = a.n;
  Code d = 1;
  for (unsigned col = 0; col < n; ++col) {
    unsigned piv = col;
    while (piv < n && a.at(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (unsigned j = 0; j < n; ++j) {
        Code t = a.at(col, j);
        a.set(col, j, a.at(piv, j));
        a.set(piv, j, t);
      }
      d = f.neg(d);
    }
    const Code pv = a.at(col, col);
    d = f.mul(d, pv);
    const Code pinv = f.inv(pv);
    for (unsigned r = col + 1; r < n; ++r) {
      const Code factor = f.mul(a.at(r, col), pinv);
      if (factor == 0) continue;
      for (unsigned j = col; j < n; ++j) a.set(r, j, f.sub(a.at(r, j), f.mul(factor, a.at(col, j))));
    }
  }
  return d;
}

inline Mat inverse(const Field& f, const Mat& m) {
  const unsigned n = m.n;
  Mat a = m;
  Mat inv = identity(n);
  for (unsigned col = 0; col < n; ++col) {
    unsigned piv = col;
    while (piv < n && a.at(piv, col) == 0) ++piv;
    if (piv == n) throw MathError("singular matrix has no inverse");
    if (piv != col) {
      for (unsigned j = 0; j < n; ++j) {
        Code t = a.at(col, j);
        a.set(col, j, a.at(piv, j));
        a.set(piv, j, t);
        t = inv.at(col, j);
        inv.set(col, j, inv.at(piv, j));
        inv.set(piv, j, t);
      }
    }
    const Code pinv = f.inv(a.at(col, col));
    for (unsigned j = 0; j < n; ++j) {
      a.set(col, j, f.mul(a.at(col, j), pinv));
      inv.set(col, j, f.mul(inv.at(col, j), pinv));
    }
    for (unsigned r = 0; r < n; ++r) {
      if (r == col) continue;
      const Code factor = a.at(r, col);
      if (factor == 0) continue;
      for (unsigned j = 0; j < n; ++j) {
        a.set(r, j, f.sub(a.at(r, j), f.mul(factor, a.at(col, j))));
        inv.set(r, j, f.sub(inv.at(r, j), f.mul(factor, inv.at(col, j))));
      }
    }
  }
  return inv;
}

/// Characteristic polynomial det(xI - A), monic, low degree first.
/// Reduces to upper Hessenberg form by similarity, then expands the recurrence.
inline gf::Poly charpoly(const Field& f, Mat h) {
  const unsigned n = h.n;
  auto swap_rows = [&](unsigned r1, unsigned r2) {
    for (unsigned j = 0; j < n; ++j) {
      Code t = h.at(r1, j);
      h.set(r1, j, h.at(r2, j));
      h.set(r2, j, t);
    }
  };
  auto swap_cols = [&](unsigned c1, unsigned c2) {
    for (unsigned i = 0; i < n; ++i) {
      Code t = h.at(i, c1);
      h.set(i, c1, h.at(i, c2));
      h.set(i, c2, t);
    }
  };
  for (unsigned m = 1; m + 1 < n; ++m) {
    unsigned piv = m;
    while (piv < n && h.at(piv, m - 1) == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      swap_rows(piv, m);
      swap_cols(piv, m);
    }
    const Code pinv = f.inv(h.at(m, m - 1));
    for (unsigned i = m + 1; i < n; ++i) {
      const Code u = f.mul(h.at(i, m - 1), pinv);
      if (u == 0) continue;
      // row_i -= u * row_m ; col_m += u * col_i keeps the similarity
      for (unsigned j = 0; j < n; ++j) h.set(i, j, f.sub(h.at(i, j), f.mul(u, h.at(m, j))));
      for (unsigned r = 0; r < n; ++r) h.set(r, m, f.add(h.at(r, m), f.mul(u, h.at(r, i))));
    }
  }
  auto poly_axpy = [&](gf::Poly& acc, const gf::Poly& p, Code s) {
    if (acc.size() < p.size()) acc.resize(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) acc[i] = f.add(acc[i], f.mul(s, p[i]));
  };
  std::vector<gf::Poly> ps(n + 1);
  ps[0] = {1};
  for (unsigned m = 1; m <= n; ++m) {
    // (x - h_mm) p_{m-1}
    gf::Poly cur(m + 1, 0);
    for (std::size_t i = 0; i < ps[m - 1].size(); ++i) {
      cur[i + 1] = f.add(cur[i + 1], ps[m - 1][i]);
      cur[i] = f.sub(cur[i], f.mul(h.at(m - 1, m - 1), ps[m - 1][i]));
    }
    Code prod = 1;
    for (unsigned i = m - 1; i-- > 0;) {
      prod = f.mul(prod, h.at(i + 1, i));
      const Code coef = f.mul(h.at(i, m - 1), prod);
      if (coef != 0) poly_axpy(cur, ps[i], f.neg(coef));
    }
    ps[m] = std::move(cur);
  }
  return ps[n];
}

/// Inverse transpose.
inline Mat tau(const Field& f, const Mat& a) { return transpose(inverse(f, a)); }

/// Entrywise a -> a^(p^m).
inline Mat phi(const Field& f, const Mat& a, unsigned m) {
  if (m % f.k() == 0) return a;
  Mat c = a;
  for (unsigned i = 0; i < a.n * a.n; ++i) c.e[i] = static_cast<std::uint8_t>(f.frobenius(a.e[i], m));
  return c;
}

/// Transpose with entrywise conj (the quadratic-extension involution).
inline Mat conj_transpose(const Field& f, const Mat& a) { return phi(f, transpose(a), f.k() / 2); }

inline bool is_scalar(const Mat& a) {
  for (unsigned i = 0; i < a.n; ++i)
    for (unsigned j = 0; j < a.n; ++j)
      if ((i == j && a.at(i, j) != a.at(0, 0)) || (i != j && a.at(i, j) != 0)) return false;
  return true;
}

/// Representative of A modulo scalars: first nonzero entry (row-major) scaled to 1.
inline Mat canon(const Field& f, const Mat& a) {
  for (unsigned i = 0; i < a.n * a.n; ++i) {
    if (a.e[i] != 0) {
      if (a.e[i] == 1) return a;
      return scale(f, f.inv(a.e[i]), a);
    }
  }
  throw MathError("zero matrix has no projective class");
}

enum class FormKind { hermitian, symplectic, symmetric };

/// Gram matrix of a nondegenerate form, with (u, v) = u G conj(v)^T for
/// hermitian forms and u G v^T otherwise.
struct Form {
  FormKind kind = FormKind::hermitian;
  Mat gram;
};

/// Checks nondegeneracy and the symmetry condition of the form.
inline void validate_form(const Field& f, const Form& form) {
  if (det(f, form.gram) == 0) throw SpecError("form Gram matrix is singular");
  const Mat& g = form.gram;
  switch (form.kind) {
    case FormKind::hermitian:
      if (f.k() % 2 != 0) throw SpecError("hermitian form needs a field of square order");
      if (!(conj_transpose(f, g) == g)) throw SpecError("Gram matrix is not conjugate-symmetric");
      break;
    case FormKind::symplectic:
      for (unsigned i = 0; i < g.n; ++i) {
        if (g.at(i, i) != 0) throw SpecError("symplectic Gram matrix must be alternating");
        for (unsigned j = 0; j < g.n; ++j)
          if (g.at(i, j) != f.neg(g.at(j, i))) throw SpecError("symplectic Gram matrix must be antisymmetric");
      }
      break;
    case FormKind::symmetric:
      if (!(transpose(g) == g)) throw SpecError("symmetric Gram matrix must equal its transpose");
      break;
  }
}

/// True iff A G conj(A)^T = G (conj is the identity for bilinear forms).
inline bool preserves_form(const Field& f, const Mat& a, const Form& form) {
  check_dims(a, form.gram);
  const Mat at = form.kind == FormKind::hermitian ? conj_transpose(f, a) : transpose(a);
  return mul(f, mul(f, a, form.gram), at) == form.gram;
}

/// Scalar lambda with A G conj(A)^T = lambda G, if A is a similitude.
inline std::optional<Code> similitude_ratio(const Field& f, const Mat& a, const Form& form) {
  const Mat at = form.kind == FormKind::hermitian ? conj_transpose(f, a) : transpose(a);
  const Mat img = mul(f, mul(f, a, form.gram), at);
  for (unsigned i = 0; i < a.n * a.n; ++i) {
    if (form.gram.e[i] != 0) {
      const Code lambda = f.div(img.e[i], form.gram.e[i]);
      if (scale(f, lambda, form.gram) == img) return lambda;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

/// Block diagonal matrix of the given blocks.
inline Mat block_diag(const std::vector<Mat>& blocks) {
  unsigned n = 0;
  for (const auto& b : blocks) n += b.n;
  Mat m = zero(n);
  unsigned off = 0;
  for (const auto& b : blocks) {
    for (unsigned i = 0; i < b.n; ++i)
      for (unsigned j = 0; j < b.n; ++j) m.set(off + i, off + j, b.at(i, j));
    off += b.n;
  }
  return m;
}

inline std::string to_string(const Mat& a) {
  std::string s = "[";
  for (unsigned i = 0; i < a.n; ++i) {
    s += i ? ",[" : "[";
    for (unsigned j = 0; j < a.n; ++j) s += (j ? "," : "") + std::to_string(a.at(i, j));
    s += "]";
  }
  return s + "]";
}

struct MatHash {
  std::size_t operator()(const Mat& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull ^ m.n;
    for (unsigned i = 0; i < unsigned{m.n} * m.n; ++i) h = (h ^ m.e[i]) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

}  // namespace bsw::mat
