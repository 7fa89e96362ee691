#pragma once

// Classical group kinds, their orders, and certified generating sets.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "bswidth/core.hpp"
#include "bswidth/domain.hpp"
#include "bswidth/error.hpp"
#include "bswidth/gf.hpp"
#include "bswidth/mat.hpp"
#include "bswidth/numtheory.hpp"

namespace bsw {

enum class Kind { GL, SL, GU, SU, Sp, PGL, PSL, PGU, PSU, PSp, Alt, Sym };

inline const char* kind_name(Kind k) {
  switch (k) {
    case Kind::GL: return "GL";
    case Kind::SL: return "SL";
    case Kind::GU: return "GU";
    case Kind::SU: return "SU";
    case Kind::Sp: return "Sp";
    case Kind::PGL: return "PGL";
    case Kind::PSL: return "PSL";
    case Kind::PGU: return "PGU";
    case Kind::PSU: return "PSU";
    case Kind::PSp: return "PSp";
    case Kind::Alt: return "Alt";
    case Kind::Sym: return "Sym";
  }
  return "?";
}

inline bool is_perm_kind(Kind k) { return k == Kind::Alt || k == Kind::Sym; }
inline bool is_unitary_kind(Kind k) { return k == Kind::GU || k == Kind::SU || k == Kind::PGU || k == Kind::PSU; }
inline bool is_symplectic_kind(Kind k) { return k == Kind::Sp || k == Kind::PSp; }
inline bool is_projective_kind(Kind k) {
  return k == Kind::PGL || k == Kind::PSL || k == Kind::PGU || k == Kind::PSU || k == Kind::PSp;
}

/// KIND(n, q). For unitary kinds the matrices live over F_{q^2}. `form`
/// overrides the default Gram (identity for unitary, [[0,I],[-I,0]] for Sp).
struct KindSpec {
  Kind kind = Kind::SL;
  unsigned n = 2;
  std::uint64_t q = 0;
  std::optional<mat::Form> form;

  std::string str() const {
    if (is_perm_kind(kind)) return std::string(kind_name(kind)) + "(" + std::to_string(n) + ")";
    return std::string(kind_name(kind)) + "(" + std::to_string(n) + "," + std::to_string(q) + ")";
  }
};

inline void validate(const KindSpec& s) {
  if (is_perm_kind(s.kind)) {
    if (s.n == 0 || s.n > kMaxPoints) throw SpecError(s.str() + ": degree outside 1..16");
    return;
  }
  if (s.n == 0 || s.n > mat::kMaxDim) throw SpecError(s.str() + ": dimension outside 1..8");
  if (prime_power(s.q).first == 0) throw SpecError(s.str() + ": q is not a prime power");
  if (is_symplectic_kind(s.kind) && s.n % 2 != 0) throw SpecError(s.str() + ": symplectic dimension must be even");
}

/// Field the matrices are written over.
inline gf::FieldPtr matrix_field(const KindSpec& s) {
  validate(s);
  if (is_perm_kind(s.kind)) throw SpecError(s.str() + " is a permutation group");
  return gf::field_of_order(is_unitary_kind(s.kind) ? checked_mul(s.q, s.q) : s.q);
}

namespace detail {
inline std::uint64_t factorial(unsigned n) {
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}
}  // namespace detail

/// Order from the classical closed formulas.
inline std::uint64_t group_order(const KindSpec& s) {
  validate(s);
  const unsigned n = s.n;
  const std::uint64_t q = s.q;
  switch (s.kind) {
    case Kind::Alt: return n < 2 ? 1 : detail::factorial(n) / 2;
    case Kind::Sym: return detail::factorial(n);
    case Kind::GL:
    case Kind::SL:
    case Kind::PGL:
    case Kind::PSL: {
      std::uint64_t o = ipow(q, n * (n - 1) / 2);
      for (unsigned i = 1; i <= n; ++i) o = checked_mul(o, ipow(q, i) - 1);
      if (s.kind == Kind::GL) return o;
      o /= q - 1;
      if (s.kind == Kind::PSL) o /= std::gcd<std::uint64_t>(n, q - 1);
      return o;
    }
    case Kind::GU:
    case Kind::SU:
    case Kind::PGU:
    case Kind::PSU: {
      std::uint64_t o = ipow(q, n * (n - 1) / 2);
      for (unsigned i = 1; i <= n; ++i) o = checked_mul(o, i % 2 ? ipow(q, i) + 1 : ipow(q, i) - 1);
      if (s.kind == Kind::GU) return o;
      o /= q + 1;
      if (s.kind == Kind::PSU) o /= std::gcd<std::uint64_t>(n, q + 1);
      return o;
    }
    case Kind::Sp:
    case Kind::PSp: {
      const unsigned m = n / 2;
      std::uint64_t o = ipow(q, m * m);
      for (unsigned i = 1; i <= m; ++i) o = checked_mul(o, ipow(q, 2 * i) - 1);
      if (s.kind == Kind::PSp) o /= std::gcd<std::uint64_t>(2, q - 1);
      return o;
    }
  }
  throw SpecError("unsupported kind");
}

/// Default forms.
inline mat::Form default_form(const KindSpec& s, const gf::Field& f) {
  if (s.form) return *s.form;
  if (is_unitary_kind(s.kind)) return {mat::FormKind::hermitian, mat::identity(s.n)};
  if (is_symplectic_kind(s.kind)) {
    const unsigned m = s.n / 2;
    mat::Mat j = mat::zero(s.n);
    for (unsigned i = 0; i < m; ++i) {
      j.set(i, m + i, 1);
      j.set(m + i, i, f.neg(1));
    }
    return {mat::FormKind::symplectic, j};
  }
  throw SpecError(s.str() + " has no invariant form");
}

/// Matrix group together with how its generating set was certified.
struct MatrixGroup {
  KindSpec spec;
  Group<MatrixDomain> group;
  std::optional<mat::Form> form;
  std::string certificate;
};

namespace detail {

inline mat::Mat elementary(unsigned n, unsigned i, unsigned j, gf::Code a) {
  mat::Mat m = mat::identity(n);
  m.set(i, j, a);
  return m;
}

/// I + a e_ij over the F_p-basis {1, x, x^2, ...} of F_q.
inline std::vector<mat::Mat> sl_transvections(const gf::Field& f, unsigned n) {
  std::vector<mat::Mat> out;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      if (i == j) continue;
      gf::Code basis = 1;
      for (unsigned t = 0; t < f.k(); ++t, basis *= f.p()) out.push_back(elementary(n, i, j, basis));
    }
  return out;
}

/// v -> v + lambda (v J u^T) u.
inline mat::Mat symplectic_transvection(const gf::Field& f, const mat::Mat& j, const std::vector<gf::Code>& u,
                                        gf::Code lambda) {
  const unsigned n = j.n;
  mat::Mat t = mat::identity(n);
  for (unsigned r = 0; r < n; ++r) {
    gf::Code ju = 0;
    for (unsigned c = 0; c < n; ++c) ju = f.add(ju, f.mul(j.at(r, c), u[c]));
    for (unsigned c = 0; c < n; ++c) t.set(r, c, f.add(t.at(r, c), f.mul(lambda, f.mul(ju, u[c]))));
  }
  return t;
}

/// Generators of SU_2(q) for the identity form, chosen greedily in
/// enumeration order among the matrices [[a,b],[-conj b, conj a]].
inline std::vector<mat::Mat> su2_generators(const gf::FieldPtr& fp) {
  const gf::Field& f = *fp;
  const std::uint64_t q = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(f.q()))));
  const std::uint64_t target = q * (q * q - 1);
  MatrixDomain d(fp, 2, false);
  std::vector<ExtElem> gens;
  Closure<MatrixDomain> c = generate(d, gens);
  for (gf::Code a = 0; a < f.q() && c.size() < target; ++a) {
    for (gf::Code b = 0; b < f.q() && c.size() < target; ++b) {
      if (f.add(f.mul(a, f.conj(a)), f.mul(b, f.conj(b))) != 1) continue;
      const ExtElem x = d.make(mat::from_rows({{a, b}, {f.neg(f.conj(b)), f.conj(a)}}));
      if (c.contains(x)) continue;
      c.gens.push_back(x);
      detail::extend(d, c, c.gens.size() - 1, target, [](const auto&) { return true; });
    }
  }
  if (c.size() != target) throw CertificationError("SU_2 generator search failed");
  std::vector<mat::Mat> out;
  for (const auto& g : c.gens) out.push_back(g.m);
  return out;
}

/// Visits det-1 unitary matrices for the identity form, built row by row
/// in enumeration order by depth-first search, until `visit` returns false.
/// Supplies extra generators when the SU_2 blocks are monomial (q = 2).
inline void for_each_unitary(const gf::Field& f, unsigned n, const std::function<bool(const mat::Mat&)>& visit) {
  const std::uint64_t total = ipow(f.q(), n);
  auto vec = [&](std::uint64_t code) {
    std::vector<gf::Code> v(n);
    for (unsigned i = 0; i < n; ++i, code /= f.q()) v[i] = static_cast<gf::Code>(code % f.q());
    return v;
  };
  auto herm = [&](const std::vector<gf::Code>& u, const std::vector<gf::Code>& v) {
    gf::Code acc = 0;
    for (unsigned i = 0; i < n; ++i) acc = f.add(acc, f.mul(u[i], f.conj(v[i])));
    return acc;
  };
  std::vector<std::vector<gf::Code>> rows;
  std::function<bool()> dfs = [&]() -> bool {
    if (rows.size() == n) {
      mat::Mat m = mat::from_rows(rows);
      // det has norm one, so rescaling the first row keeps it a unit vector
      const gf::Code dinv = f.inv(mat::det(f, m));
      for (unsigned j = 0; j < n; ++j) m.set(0, j, f.mul(dinv, m.at(0, j)));
      return visit(m);
    }
    for (std::uint64_t c = 1; c < total; ++c) {
      auto v = vec(c);
      if (herm(v, v) != 1) continue;
      bool ok = true;
      for (const auto& r : rows) ok = ok && herm(v, r) == 0;
      if (!ok) continue;
      rows.push_back(v);
      const bool go_on = dfs();
      rows.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  dfs();
}

inline mat::Mat embed(const mat::Mat& block, unsigned n, unsigned at) {
  mat::Mat m = mat::identity(n);
  for (unsigned i = 0; i < block.n; ++i)
    for (unsigned j = 0; j < block.n; ++j) m.set(at + i, at + j, block.at(i, j));
  return m;
}

}  // namespace detail

inline constexpr std::uint64_t kDefaultCertifyCap = 4'000'000;

/// Generators of a matrix kind. Special/linear kinds are certified by the
/// transvection generation theorem; all others by BFS order equality, which
/// is attempted whenever the order is within certify_cap.
inline MatrixGroup matrix_group(const KindSpec& s, std::uint64_t certify_cap = kDefaultCertifyCap,
                                std::uint64_t enum_cap = kDefaultEnumCap) {
  const gf::FieldPtr fp = matrix_field(s);
  const gf::Field& f = *fp;
  const unsigned n = s.n;
  const std::uint64_t order = group_order(s);
  MatrixDomain d(fp, n, is_projective_kind(s.kind));
  std::vector<mat::Mat> ms;
  std::optional<mat::Form> form;
  bool theorem = false;
  switch (s.kind) {
    case Kind::GL:
    case Kind::PGL:
    case Kind::SL:
    case Kind::PSL:
      ms = detail::sl_transvections(f, n);
      if (s.kind == Kind::GL || s.kind == Kind::PGL) {
        mat::Mat dg = mat::identity(n);
        dg.set(0, 0, f.primitive());
        if (f.q() > 2) ms.push_back(dg);
      }
      theorem = true;
      break;
    case Kind::GU:
    case Kind::PGU:
    case Kind::SU:
    case Kind::PSU: {
      form = default_form(s, f);
      mat::validate_form(f, *form);
      if (!(form->gram == mat::identity(n)))
        throw SpecError(s.str() + ": generators are provided for the identity Gram only");
      if (n >= 2) {
        for (const auto& b : detail::su2_generators(fp))
          for (unsigned at = 0; at + 1 < n; ++at) ms.push_back(detail::embed(b, n, at));
      }
      if (s.kind == Kind::GU || s.kind == Kind::PGU) {
        // norm-one scalars are generated by prim^(q-1)
        mat::Mat dg = mat::identity(n);
        dg.set(0, 0, f.pow(f.primitive(), s.q - 1));
        ms.push_back(dg);
      }
      break;
    }
    case Kind::Sp:
    case Kind::PSp: {
      form = default_form(s, f);
      mat::validate_form(f, *form);
      std::vector<std::vector<gf::Code>> us;
      for (unsigned i = 0; i < n; ++i) {
        std::vector<gf::Code> u(n, 0);
        u[i] = 1;
        us.push_back(u);
        for (unsigned j = i + 1; j < n; ++j) {
          auto v = u;
          v[j] = 1;
          us.push_back(v);
        }
      }
      for (const auto& u : us) {
        gf::Code basis = 1;
        for (unsigned t = 0; t < f.k(); ++t, basis *= f.p())
          ms.push_back(detail::symplectic_transvection(f, form->gram, u, basis));
      }
      break;
    }
    case Kind::Alt:
    case Kind::Sym: throw SpecError(s.str() + " is a permutation group");
  }
  const bool special = s.kind == Kind::SL || s.kind == Kind::PSL || s.kind == Kind::SU || s.kind == Kind::PSU ||
                       is_symplectic_kind(s.kind);
  auto check = [&](const mat::Mat& m) {
    if (form && !mat::preserves_form(f, m, *form))
      throw CertificationError(s.str() + ": generator does not preserve the form");
    if (special && mat::det(f, m) != 1) throw CertificationError(s.str() + ": generator has determinant != 1");
  };
  for (const auto& m : ms) check(m);

  std::string cert;
  std::vector<ExtElem> gens;
  if (order <= certify_cap && order <= enum_cap) {
    // Dimino-style: keep a candidate only if it enlarges the closure.
    Closure<MatrixDomain> c;
    c.table.insert(d.identity());
    auto offer = [&](const mat::Mat& m) {
      add_generator(d, c, d.make(m), order);
      if (c.status != Status::complete)
        throw CertificationError(s.str() + ": generators exceed the expected order " + std::to_string(order));
      return c.size() < order;
    };
    for (const auto& m : ms)
      if (!offer(m)) break;
    if (c.size() < order && is_unitary_kind(s.kind)) {
      detail::for_each_unitary(f, n, [&](const mat::Mat& m) {
        check(m);
        return offer(m);
      });
    }
    if (c.size() != order)
      throw CertificationError(s.str() + ": generators close to order " + std::to_string(c.size()) + ", expected " +
                               std::to_string(order));
    gens = c.gens;
    Group<MatrixDomain> g(d, gens, s.str(), order, enum_cap);
    g.adopt(std::move(c));
    return {s, std::move(g), form, "bfs"};
  }
  if (!theorem)
    throw CertificationError(s.str() + ": order " + std::to_string(order) + " exceeds the certification cap " +
                             std::to_string(certify_cap));
  for (const auto& m : ms) {
    auto x = d.make(m);
    if (!(x == d.identity()) && std::find(gens.begin(), gens.end(), x) == gens.end()) gens.push_back(x);
  }
  Group<MatrixDomain> g(d, gens, s.str(), order, enum_cap);
  cert = "transvections";
  return {s, std::move(g), form, cert};
}

/// Membership of an element of the ambient matrix domain in the classical
/// group, decided from determinant and form conditions (no enumeration).
inline bool contains(const MatrixGroup& g, const ExtElem& y) {
  if (!y.inner()) return false;
  const gf::Field& f = g.group.domain().field();
  const mat::Mat& m = y.m;
  const unsigned n = m.n;
  const gf::Code dt = mat::det(f, m);
  if (dt == 0) return false;
  // scalars l with l^e = v, for the projective kinds
  auto exists_scalar = [&](const std::function<bool(gf::Code)>& ok) {
    for (gf::Code l = 1; l < f.q(); ++l)
      if (ok(l)) return true;
    return false;
  };
  switch (g.spec.kind) {
    case Kind::GL:
    case Kind::PGL: return true;
    case Kind::SL: return dt == 1;
    case Kind::PSL: return exists_scalar([&](gf::Code l) { return f.pow(l, n) == dt; });
    case Kind::GU: return mat::preserves_form(f, m, *g.form);
    case Kind::SU: return dt == 1 && mat::preserves_form(f, m, *g.form);
    case Kind::Sp: return mat::preserves_form(f, m, *g.form);
    case Kind::PGU:
    case Kind::PSU:
    case Kind::PSp: {
      const auto ratio = mat::similitude_ratio(f, m, *g.form);
      if (!ratio) return false;
      // m = l A with A an isometry: ratio = l conj(l) (unitary) or l^2 (symplectic)
      return exists_scalar([&](gf::Code l) {
        const gf::Code r = is_unitary_kind(g.spec.kind) ? f.mul(l, f.conj(l)) : f.mul(l, l);
        if (r != *ratio) return false;
        return g.spec.kind == Kind::PGU || f.pow(l, n) == dt;
      });
    }
    case Kind::Alt:
    case Kind::Sym: break;
  }
  throw SpecError("membership test needs a matrix kind");
}

/// Alt(n): (1 2 3) with an n-cycle (n odd) or the (n-1)-cycle on 2..n (n even).
/// Sym(n): (1 2) with the n-cycle.
inline Group<PermDomain> perm_group(const KindSpec& s) {
  validate(s);
  if (!is_perm_kind(s.kind)) throw SpecError(s.str() + " is not a permutation group");
  const unsigned n = s.n;
  PermDomain d(n);
  std::vector<Perm> gens;
  auto cycle = [](unsigned from, unsigned to) {
    std::vector<unsigned> c;
    for (unsigned i = from; i <= to; ++i) c.push_back(i);
    return c;
  };
  if (s.kind == Kind::Sym) {
    if (n >= 2) gens.push_back(d.cycles({{1, 2}}));
    if (n >= 3) gens.push_back(d.cycles({cycle(1, n)}));
  } else if (n >= 3) {
    gens.push_back(d.cycles({{1, 2, 3}}));
    if (n >= 4) gens.push_back(d.cycles({n % 2 ? cycle(1, n) : cycle(2, n)}));
  }
  return Group<PermDomain>(d, gens, s.str(), group_order(s));
}

/// Permutations of {0..n-1} from a generating set, with point lists given
/// 1-based as image lists.
inline Group<PermDomain> perm_group_from(unsigned n, const std::vector<std::vector<unsigned>>& images,
                                         const std::string& name) {
  PermDomain d(n);
  std::vector<Perm> gens;
  for (const auto& im : images) {
    std::vector<unsigned> zero_based;
    for (auto v : im) {
      if (v == 0) throw SpecError("permutation images are 1-based");
      zero_based.push_back(v - 1);
    }
    gens.push_back(d.make(zero_based));
  }
  return Group<PermDomain>(d, gens, name);
}

/// A x B acting on the disjoint union of the two point sets.
inline Group<PermDomain> direct_product(const Group<PermDomain>& a, const Group<PermDomain>& b) {
  const unsigned na = a.domain().degree();
  const unsigned nb = b.domain().degree();
  PermDomain d(na + nb);
  std::vector<Perm> gens;
  for (const auto& g : a.gens()) {
    Perm p = d.identity();
    for (unsigned i = 0; i < na; ++i) p.img[i] = g.img[i];
    gens.push_back(p);
  }
  for (const auto& g : b.gens()) {
    Perm p = d.identity();
    for (unsigned i = 0; i < nb; ++i) p.img[na + i] = static_cast<std::uint8_t>(na + g.img[i]);
    gens.push_back(p);
  }
  std::optional<std::uint64_t> order;
  if (a.known_order() && b.known_order()) order = checked_mul(*a.known_order(), *b.known_order());
  return Group<PermDomain>(d, gens, a.name() + "x" + b.name(), order);
}

}  // namespace bsw
