#pragma once

// Explicit matrices from the proofs, each checked against its stated
// identities before it is returned. A failed check throws
// CertificationError; nothing is returned unverified.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bswidth/core.hpp"
#include "bswidth/domain.hpp"
#include "bswidth/error.hpp"
#include "bswidth/gf.hpp"
#include "bswidth/kinds.hpp"
#include "bswidth/mat.hpp"

namespace bsw::cons {

using gf::Code;

// ---------------------------------------------------------------------------
// SL_2 pair

struct Sl2Pair {
  mat::Mat x;  // [[1,0],[beta,1]]
  mat::Mat y;  // [[1,beta],[0,1]]
  std::uint64_t q0 = 0;  // order of the subfield generated by beta^2
  std::uint64_t order = 0;  // |<x,y>|
  bool exceptional = false;  // q0 = 9 and |H| = 120
  bool contains_minus_one = false;
};

inline std::uint64_t sl2_order(std::uint64_t q) { return q * (q * q - 1); }

/// Builds x, y, closes <x,y> and checks the dichotomy
/// |H| = |SL_2(q0)|, or q0 = 9 and |H| = 120, with -E in H.
inline Sl2Pair sl2_pair(const gf::FieldPtr& fp, Code beta) {
  const gf::Field& f = *fp;
  if (f.p() == 2) throw SpecError("sl2_pair needs odd characteristic");
  if (beta == 0 || beta >= f.q()) throw SpecError("sl2_pair needs a nonzero field element");
  Sl2Pair r;
  r.x = mat::from_rows({{1, 0}, {beta, 1}});
  r.y = mat::from_rows({{1, beta}, {0, 1}});
  r.q0 = f.subfield_order(f.mul(beta, beta));
  MatrixDomain d(fp, 2, false);
  const auto h = generate(d, {d.make(r.x), d.make(r.y)}, sl2_order(f.q()) + 1);
  if (!h.complete()) throw CertificationError("sl2_pair: closure exceeded |SL_2(q)|");
  r.order = h.size();
  r.exceptional = r.q0 == 9 && r.order == 120;
  mat::Mat minus = mat::scale(f, f.neg(1), mat::identity(2));
  r.contains_minus_one = h.contains(d.make(minus));
  if (!(r.order == sl2_order(r.q0) || r.exceptional) || !r.contains_minus_one)
    throw CertificationError("sl2_pair: dichotomy fails for beta=" + std::to_string(beta) + " in " + f.name());
  return r;
}

// ---------------------------------------------------------------------------
// Unipotent elements of SU_n(q) in the e/d/f bases

struct Unipotent {
  gf::FieldPtr field;  // F_{q^2}
  mat::Mat x;
  mat::Form gram;
  std::vector<std::string> labels;  // e^t_i, d^t, f^t_i in basis order
  std::vector<unsigned> f_indices;  // positions of the f vectors
  Code beta = 0;   // beta + conj(beta) = 0, beta != 0
  Code gamma = 0;  // gamma + conj(gamma) = -1
  std::uint64_t order = 0;
  std::uint64_t expected_order = 0;  // p^ceil(log_p(max part))
};

namespace detail {
inline std::uint64_t unipotent_order(std::uint64_t p, unsigned max_part) {
  std::uint64_t o = 1;
  while (o < max_part) o *= p;
  return o;
}
}  // namespace detail

/// Block t of size 2k has basis e_1..e_k, f_k..f_1 and
///   e_i x = e_i + ... + e_k + beta f_k,  f_i x = f_i - f_{i-1},  f_1 x = f_1.
/// Block t of size 2k+1 has basis e_1..e_k, d, f_k..f_1 and
///   e_i x = e_i + ... + e_k + d + gamma f_k,  d x = d - f_k,
/// with the same rule on the f's. The form has (e_i, f_j) = delta_ij and
/// (d, d) = 1, all other basis pairings zero.
inline Unipotent su_unipotent(std::uint64_t q, const std::vector<unsigned>& partition) {
  if (partition.empty()) throw SpecError("su_unipotent needs a nonempty partition");
  unsigned n = 0;
  unsigned max_part = 0;
  for (unsigned part : partition) {
    if (part == 0) throw SpecError("partition parts must be positive");
    n += part;
    max_part = std::max(max_part, part);
  }
  if (n > mat::kMaxDim) throw SpecError("su_unipotent: dimension " + std::to_string(n) + " exceeds 8");
  Unipotent u;
  u.field = gf::field_of_order(checked_mul(q, q));
  const gf::Field& f = *u.field;
  u.beta = gf::solve_special(u.field, gf::Special::trace_zero).code();
  u.gamma = gf::solve_special(u.field, gf::Special::trace_minus_one).code();
  u.x = mat::zero(n);
  u.gram = {mat::FormKind::hermitian, mat::zero(n)};
  const Code minus_one = f.neg(1);

  unsigned off = 0;
  for (std::size_t t = 0; t < partition.size(); ++t) {
    const unsigned part = partition[t];
    const unsigned k = part / 2;
    const bool odd = part % 2 == 1;
    const std::string tag = std::to_string(t + 1);
    // local positions: e_i -> i-1, d -> k, f_i -> part - i
    auto e = [&](unsigned i) { return off + i - 1; };
    auto fv = [&](unsigned i) { return off + part - i; };
    const unsigned d = off + k;
    for (unsigned i = 1; i <= k; ++i) u.labels.push_back("e" + tag + "_" + std::to_string(i));
    if (odd) u.labels.push_back("d" + tag);
    for (unsigned i = k; i >= 1; --i) {
      u.labels.push_back("f" + tag + "_" + std::to_string(i));
      u.f_indices.push_back(fv(i));
    }
    for (unsigned i = 1; i <= k; ++i) {
      u.gram.gram.set(e(i), fv(i), 1);
      u.gram.gram.set(fv(i), e(i), 1);
      for (unsigned j = i; j <= k; ++j) u.x.set(e(i), e(j), 1);
      if (odd) {
        u.x.set(e(i), d, 1);
        u.x.set(e(i), fv(k), u.gamma);
      } else {
        u.x.set(e(i), fv(k), u.beta);
      }
      u.x.set(fv(i), fv(i), 1);
      if (i >= 2) u.x.set(fv(i), fv(i - 1), minus_one);
    }
    if (odd) {
      u.gram.gram.set(d, d, 1);
      u.x.set(d, d, 1);
      if (k >= 1) u.x.set(d, fv(k), minus_one);
    }
    off += part;
  }

  mat::validate_form(f, u.gram);
  if (!mat::preserves_form(f, u.x, u.gram)) throw CertificationError("su_unipotent: x does not preserve the form");
  if (mat::det(f, u.x) != 1) throw CertificationError("su_unipotent: det(x) != 1");
  MatrixDomain dom(u.field, n, false);
  u.order = element_order(dom, dom.make(u.x));
  u.expected_order = detail::unipotent_order(f.p(), max_part);
  if (u.order != u.expected_order)
    throw CertificationError("su_unipotent: order " + std::to_string(u.order) + ", expected " +
                             std::to_string(u.expected_order));
  return u;
}

/// The span U of the f vectors is totally isotropic and x-invariant.
inline bool f_span_isotropic_invariant(const Unipotent& u) {
  std::vector<bool> in_u(u.x.n, false);
  for (unsigned i : u.f_indices) in_u[i] = true;
  for (unsigned i : u.f_indices) {
    for (unsigned j : u.f_indices)
      if (u.gram.gram.at(i, j) != 0) return false;
    for (unsigned j = 0; j < u.x.n; ++j)
      if (!in_u[j] && u.x.at(i, j) != 0) return false;
  }
  return true;
}

/// The action equations as vector identities: row i of x is the image of
/// basis vector i, recomputed independently from the labels.
inline bool action_equations_hold(const Unipotent& u, const std::vector<unsigned>& partition) {
  const gf::Field& f = *u.field;
  const unsigned n = u.x.n;
  unsigned off = 0;
  for (unsigned part : partition) {
    const unsigned k = part / 2;
    const bool odd = part % 2 == 1;
    auto unit = [&](unsigned pos) {
      std::vector<Code> v(n, 0);
      v[pos] = 1;
      return v;
    };
    auto row = [&](unsigned pos) {
      std::vector<Code> v(n);
      for (unsigned j = 0; j < n; ++j) v[j] = u.x.at(pos, j);
      return v;
    };
    auto e = [&](unsigned i) { return off + i - 1; };
    auto fv = [&](unsigned i) { return off + part - i; };
    for (unsigned i = 1; i <= k; ++i) {
      std::vector<Code> want(n, 0);
      for (unsigned j = i; j <= k; ++j) want[e(j)] = 1;
      if (odd) want[off + k] = 1;
      want[fv(k)] = odd ? u.gamma : u.beta;
      if (row(e(i)) != want) return false;
      std::vector<Code> fw = unit(fv(i));
      if (i >= 2) fw[fv(i - 1)] = f.neg(1);
      if (row(fv(i)) != fw) return false;
    }
    if (odd) {
      std::vector<Code> want = unit(off + k);
      if (k >= 1) want[fv(k)] = f.neg(1);
      if (row(off + k) != want) return false;
    }
    off += part;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Graph involutions J tau

enum class Delta { zero, plus, minus };

inline const char* delta_name(Delta d) { return d == Delta::zero ? "0" : d == Delta::plus ? "+" : "-"; }

struct GraphInvolution {
  mat::Mat j;
  ExtElem elem;  // (J, tau) in the projective domain
  Code mu = 0;   // only for Delta::minus
};

/// Checks that the projective image of an inner matrix lies in PSL_n(q):
/// some scalar multiple has determinant one, i.e. det is an n-th power.
inline bool det_is_nth_power(const gf::Field& f, Code det, unsigned n) {
  for (Code l = 1; l < f.q(); ++l)
    if (f.pow(l, n) == det) return true;
  return false;
}

/// J^0: blocks [[0,-1],[1,0]]; J^+: blocks [[0,1],[1,0]]; J^-: n/2-1 blocks
/// [[0,1],[1,0]] and one block diag(mu,1), mu the first code with -mu a
/// non-square. That makes diag(mu,1) anisotropic, so J^- is a symmetric form
/// of minus type. (Asking for -mu/2 instead gives the plus type whenever 2 is
/// a non-square, e.g. q = 3, 5.)
inline GraphInvolution graph_involution(unsigned n, std::uint64_t q, Delta delta) {
  if (n % 2 != 0 || n < 2) throw SpecError("graph_involution needs even n");
  const gf::FieldPtr fp = gf::field_of_order(q);
  const gf::Field& f = *fp;
  if (f.p() == 2) throw SpecError("graph_involution needs odd q");
  GraphInvolution g;
  std::vector<mat::Mat> blocks;
  const Code m1 = f.neg(1);
  for (unsigned b = 0; b < n / 2; ++b) {
    if (delta == Delta::zero) {
      blocks.push_back(mat::from_rows({{0, m1}, {1, 0}}));
    } else if (delta == Delta::plus || b + 1 < n / 2) {
      blocks.push_back(mat::from_rows({{0, 1}, {1, 0}}));
    } else {
      Code mu = 0;
      for (Code c = 1; c < f.q(); ++c) {
        if (!f.is_square(f.neg(c))) {
          mu = c;
          break;
        }
      }
      // -mu is a non-square, re-verified against the explicit list of squares
      for (Code s = 0; s < f.q(); ++s)
        if (f.mul(s, s) == f.neg(mu)) throw CertificationError("graph_involution: -mu is a square");
      g.mu = mu;
      blocks.push_back(mat::from_rows({{mu, 0}, {0, 1}}));
    }
  }
  g.j = mat::block_diag(blocks);
  MatrixDomain d(fp, n, true);
  g.elem = d.make(g.j, 0, 1);
  if (!(d.mul(g.elem, g.elem) == d.identity()))
    throw CertificationError(std::string("graph_involution: (J") + delta_name(delta) + " tau)^2 is not trivial");
  // normalizes PSL_n(q): conjugates of the transvection generators stay in PSL
  for (const auto& m : bsw::detail::sl_transvections(f, n)) {
    const ExtElem c = conjugate(d, d.make(m), g.elem);
    if (!c.inner() || !det_is_nth_power(f, mat::det(f, c.m), n))
      throw CertificationError("graph_involution: does not normalize PSL");
  }
  return g;
}

// ---------------------------------------------------------------------------
// Field and graph automorphisms as elements

enum class AutKind { phi, tau, tauphi };

/// (identity, phi^m tau^b) in the domain of `ambient`; verifies that
/// conjugation maps each generator of the ambient group into the group.
inline ExtElem canonical_aut(AutKind kind, unsigned m, const MatrixGroup& ambient) {
  const MatrixDomain& d = ambient.group.domain();
  const unsigned k = d.field().k();
  if (kind != AutKind::tau && (m == 0 || k % m != 0))
    throw SpecError("phi exponent " + std::to_string(m) + " must divide the field degree " + std::to_string(k));
  const ExtElem x = d.make(mat::identity(d.dim()), kind == AutKind::tau ? 0 : m % k, kind == AutKind::phi ? 0 : 1);
  for (const auto& g : ambient.group.gens())
    if (!contains(ambient, conjugate(d, g, x)))
      throw CertificationError("automorphism does not normalize " + ambient.spec.str());
  return x;
}

/// Row i has its 1 in column sigma(i): e_i P = e_{sigma(i)}.
inline mat::Mat perm_matrix(const Perm& sigma, unsigned n) {
  if (sigma.n > n) throw SpecError("permutation has more points than the dimension");
  mat::Mat m = mat::zero(n);
  for (unsigned i = 0; i < n; ++i) m.set(i, i < sigma.n ? sigma.img[i] : i, 1);
  return m;
}

}  // namespace bsw::cons
