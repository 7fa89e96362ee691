#pragma once

// Text form of groups: KIND(n,q)[:AUT], and the extension groups they name.
//
//   KIND ∈ {GL,SL,GU,SU,Sp,PGL,PSL,PGU,PSU,PSp,Alt,Sym}
//   AUT  ∈ {phi<m>, tau, tauphi<m>, graph<0|+|->, diag}
//
// A "diag" prefix on any other AUT (diagphi1, diaggraph0, ...) multiplies
// that automorphism by the diagonal one, which selects the other coset
// extensions. Alt and Sym take a single argument: Alt(5).

#include <cctype>
#include <functional>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bswidth/constructions.hpp"
#include "bswidth/core.hpp"
#include "bswidth/domain.hpp"
#include "bswidth/error.hpp"
#include "bswidth/kinds.hpp"

namespace bsw {

struct AutSpec {
  enum class Type { phi, tau, tauphi, graph, diag } type = Type::phi;
  unsigned m = 1;
  cons::Delta delta = cons::Delta::zero;
  bool twisted = false;  // premultiplied by the diagonal automorphism

  std::string str() const { return (twisted ? "diag" : "") + base_str(); }

 private:
  std::string base_str() const {
    switch (type) {
      case Type::phi: return "phi" + std::to_string(m);
      case Type::tau: return "tau";
      case Type::tauphi: return "tauphi" + std::to_string(m);
      case Type::graph: return std::string("graph") + cons::delta_name(delta);
      case Type::diag: return "diag";
    }
    return "?";
  }
};

struct GroupSpec {
  KindSpec base;
  std::optional<AutSpec> aut;

  std::string str() const { return base.str() + (aut ? ":" + aut->str() : ""); }
};

/// Parse error carrying the 0-based offset of the offending character.
class ParseError : public SpecError {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : SpecError(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

inline GroupSpec parse_group_spec(const std::string& text) {
  std::size_t i = 0;
  auto peek = [&] { return i < text.size() ? text[i] : '\0'; };
  auto expect = [&](char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", i);
    ++i;
  };
  auto number = [&]() -> std::uint64_t {
    const std::size_t start = i;
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > 1'000'000'000ull) throw ParseError("number too large", start);
      v = v * 10 + static_cast<unsigned>(text[i++] - '0');
    }
    if (i == start) throw ParseError("expected a number", start);
    return v;
  };
  const std::size_t kind_start = i;
  while (std::isalpha(static_cast<unsigned char>(peek()))) ++i;
  const std::string kw = text.substr(kind_start, i - kind_start);
  static const std::vector<std::pair<std::string, Kind>> kinds = {
      {"GL", Kind::GL},   {"SL", Kind::SL},   {"GU", Kind::GU},   {"SU", Kind::SU},
      {"Sp", Kind::Sp},   {"PGL", Kind::PGL}, {"PSL", Kind::PSL}, {"PGU", Kind::PGU},
      {"PSU", Kind::PSU}, {"PSp", Kind::PSp}, {"Alt", Kind::Alt}, {"Sym", Kind::Sym}};
  GroupSpec g;
  bool found = false;
  for (const auto& [name, k] : kinds) {
    if (name == kw) {
      g.base.kind = k;
      found = true;
    }
  }
  if (!found) throw ParseError("unknown group kind '" + kw + "'", kind_start);
  expect('(');
  g.base.n = static_cast<unsigned>(number());
  if (!is_perm_kind(g.base.kind)) {
    expect(',');
    g.base.q = number();
  }
  expect(')');
  if (peek() == ':') {
    ++i;
    const std::size_t aut_start = i;
    while (std::isalpha(static_cast<unsigned char>(peek()))) ++i;
    std::string a = text.substr(aut_start, i - aut_start);
    AutSpec aut;
    if (a.size() > 4 && a.rfind("diag", 0) == 0) {
      aut.twisted = true;
      a = a.substr(4);
    }
    if (a == "phi" || a == "tauphi") {
      aut.type = a == "phi" ? AutSpec::Type::phi : AutSpec::Type::tauphi;
      aut.m = static_cast<unsigned>(number());
    } else if (a == "tau") {
      aut.type = AutSpec::Type::tau;
    } else if (a == "diag") {
      aut.type = AutSpec::Type::diag;
    } else if (a == "graph") {
      aut.type = AutSpec::Type::graph;
      const char c = peek();
      if (c == '0') aut.delta = cons::Delta::zero;
      else if (c == '+') aut.delta = cons::Delta::plus;
      else if (c == '-') aut.delta = cons::Delta::minus;
      else throw ParseError("expected 0, + or - after graph", i);
      ++i;
    } else {
      throw ParseError("unknown automorphism '" + a + "'", aut_start);
    }
    g.aut = aut;
  }
  if (i != text.size()) throw ParseError("trailing characters", i);
  try {
    validate(g.base);
  } catch (const SpecError& e) {
    throw ParseError(e.what(), 0);
  }
  if (g.aut && is_perm_kind(g.base.kind)) throw ParseError("automorphisms apply to matrix kinds only", kind_start);
  return g;
}

/// A classical group L, optionally extended by one automorphism x:
/// group = <L, x>, with |group| = |L| times the order of x modulo L.
struct MatrixExtension {
  GroupSpec spec;
  MatrixGroup base;
  std::optional<ExtElem> aut;
  std::uint64_t index = 1;
  Group<MatrixDomain> group;
};

/// Inner-diagonal automorphism: diag(l,1,...,1) with l generating the
/// relevant quotient (F_q^* for SL, norm-one elements for SU), or the
/// symplectic similitude diag(1,..,1,-1,..,-1) for Sp.
inline ExtElem diagonal_aut(const MatrixGroup& g) {
  const MatrixDomain& d = g.group.domain();
  const gf::Field& f = d.field();
  const unsigned n = d.dim();
  mat::Mat m = mat::identity(n);
  switch (g.spec.kind) {
    case Kind::SL:
    case Kind::PSL:
    case Kind::GL:
    case Kind::PGL: m.set(0, 0, f.primitive()); break;
    case Kind::SU:
    case Kind::PSU:
    case Kind::GU:
    case Kind::PGU: m.set(0, 0, f.pow(f.primitive(), g.spec.q - 1)); break;
    case Kind::Sp:
    case Kind::PSp:
      for (unsigned i = n / 2; i < n; ++i) m.set(i, i, f.neg(1));
      break;
    default: throw SpecError("no diagonal automorphism for " + g.spec.str());
  }
  return d.make(m);
}

namespace detail {
/// Least i >= 1 with x^i in the base group.
inline std::uint64_t index_modulo(const MatrixGroup& l, const ExtElem& x) {
  const MatrixDomain& d = l.group.domain();
  ExtElem y = x;
  for (std::uint64_t i = 1; i <= 1024; ++i) {
    if (contains(l, y)) return i;
    y = d.mul(y, x);
  }
  throw CertificationError("automorphism order modulo the base group exceeds 1024");
}

/// x normalizes L: conjugates of the generators stay in L.
inline void check_normalizes(const MatrixGroup& l, const ExtElem& x) {
  const MatrixDomain& d = l.group.domain();
  for (const auto& g : l.group.gens())
    if (!contains(l, conjugate(d, g, x)))
      throw CertificationError("automorphism does not normalize " + l.spec.str());
}
}  // namespace detail

/// <L, x> for an element x normalizing L.
inline MatrixExtension extend_by(const GroupSpec& spec, MatrixGroup base, const ExtElem& x, const std::string& name,
                                 std::uint64_t enum_cap = kDefaultEnumCap) {
  detail::check_normalizes(base, x);
  const std::uint64_t index = detail::index_modulo(base, x);
  std::vector<ExtElem> gens = base.group.gens();
  if (index > 1) gens.push_back(x);
  const std::uint64_t order = checked_mul(base.group.order(), index);
  Group<MatrixDomain> g(base.group.domain(), gens, name, order, enum_cap);
  return {spec, std::move(base), x, index, std::move(g)};
}

inline MatrixExtension build_matrix_group(const GroupSpec& spec, std::uint64_t certify_cap = kDefaultCertifyCap,
                                          std::uint64_t enum_cap = kDefaultEnumCap) {
  MatrixGroup base = matrix_group(spec.base, certify_cap, enum_cap);
  if (!spec.aut) {
    Group<MatrixDomain> g = base.group;
    return {spec, std::move(base), std::nullopt, 1, std::move(g)};
  }
  const MatrixDomain& d = base.group.domain();
  ExtElem x;
  switch (spec.aut->type) {
    case AutSpec::Type::phi: x = cons::canonical_aut(cons::AutKind::phi, spec.aut->m, base); break;
    case AutSpec::Type::tau: x = cons::canonical_aut(cons::AutKind::tau, 0, base); break;
    case AutSpec::Type::tauphi: x = cons::canonical_aut(cons::AutKind::tauphi, spec.aut->m, base); break;
    case AutSpec::Type::graph: {
      if (spec.base.kind != Kind::PSL && spec.base.kind != Kind::PGL)
        throw SpecError("graph involutions are built for PSL and PGL");
      x = cons::graph_involution(spec.base.n, spec.base.q, spec.aut->delta).elem;
      break;
    }
    case AutSpec::Type::diag: x = diagonal_aut(base); break;
  }
  if (spec.aut->twisted) x = d.mul(diagonal_aut(base), x);
  return extend_by(spec, std::move(base), x, spec.str(), enum_cap);
}

/// Membership in <L, x> without enumeration: y lies in one of the cosets L x^i.
inline bool contains(const MatrixExtension& g, const ExtElem& y) {
  if (contains(g.base, y)) return true;
  if (!g.aut) return false;
  const MatrixDomain& d = g.group.domain();
  const ExtElem xi = d.inv(*g.aut);
  ExtElem z = y;
  for (std::uint64_t i = 1; i < g.index; ++i) {
    z = d.mul(z, xi);
    if (contains(g.base, z)) return true;
  }
  return false;
}

/// Index of the coset L x^i containing y, for y in the extension.
inline std::uint64_t coset_index(const MatrixExtension& g, const ExtElem& y) {
  const MatrixDomain& d = g.group.domain();
  ExtElem z = y;
  for (std::uint64_t i = 0; i < g.index; ++i) {
    if (contains(g.base, z)) return i;
    z = d.mul(z, d.inv(*g.aut));
  }
  throw SpecError("element is not in " + g.spec.str());
}

enum class Coset { any, inner, outer };

/// Classes of elements of order t in the extension, restricted to L or to
/// its complement, by random search; no enumeration of the group.
inline ClassSearch<MatrixDomain> coset_classes(const MatrixExtension& g, std::uint64_t t, Coset where,
                                               std::uint64_t budget, std::uint64_t seed,
                                               const std::vector<ExtElem>& seeds = {},
                                               std::uint64_t orbit_cap = kDefaultOrbitCap) {
  std::function<bool(const ExtElem&)> filter;
  if (where == Coset::inner) filter = [&](const ExtElem& e) { return contains(g.base, e); };
  if (where == Coset::outer) filter = [&](const ExtElem& e) { return !contains(g.base, e); };
  return order_t_classes(g.group, t, budget, seed, seeds, std::nullopt, filter, orbit_cap);
}

}  // namespace bsw
