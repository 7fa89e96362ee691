#include <gtest/gtest.h>

#include "bswidth/constructions.hpp"
#include "bswidth/groupspec.hpp"

using namespace bsw;
using gf::Code;

TEST(Sl2Pair, SubfieldDichotomy) {
  for (std::uint64_t q : {5u, 7u, 9u, 25u}) {
    const auto f = gf::field_of_order(q);
    for (Code b = 1; b < q; ++b) {
      const auto r = cons::sl2_pair(f, b);
      EXPECT_TRUE(r.contains_minus_one);
      if (r.exceptional)
        EXPECT_EQ(r.order, 120u);
      else
        EXPECT_EQ(r.order, cons::sl2_order(r.q0));
    }
  }
  // beta = 1 always generates SL_2 of the prime field
  EXPECT_EQ(cons::sl2_pair(gf::field_of_order(25), 1).order, 120u);
  EXPECT_THROW(cons::sl2_pair(gf::field_of_order(8), 1), SpecError);
  EXPECT_THROW(cons::sl2_pair(gf::field_of_order(5), 0), SpecError);
}

TEST(SuUnipotent, Postconditions) {
  for (std::uint64_t q : {2u, 3u}) {
    for (const std::vector<unsigned>& part :
         {std::vector<unsigned>{2}, {3}, {2, 1}, {4}, {3, 2}, {5}, {2, 2, 1}, {4, 3}, {1, 1, 1}}) {
      const auto u = cons::su_unipotent(q, part);
      const auto& f = *u.field;
      EXPECT_EQ(f.q(), q * q);
      EXPECT_TRUE(mat::preserves_form(f, u.x, u.gram));
      EXPECT_EQ(mat::det(f, u.x), 1u);
      unsigned max_part = 0, n = 0;
      for (auto p : part) {
        max_part = std::max(max_part, p);
        n += p;
      }
      EXPECT_EQ(u.labels.size(), n);
      // least power of p that is at least the largest part
      std::uint64_t expect = 1;
      while (expect < max_part) expect *= f.p();
      EXPECT_EQ(u.order, expect);
      EXPECT_TRUE(cons::f_span_isotropic_invariant(u));
      EXPECT_TRUE(cons::action_equations_hold(u, part));
    }
  }
  EXPECT_THROW(cons::su_unipotent(3, {}), SpecError);
  EXPECT_THROW(cons::su_unipotent(3, {5, 4}), SpecError);
  EXPECT_THROW(cons::su_unipotent(3, {2, 0}), SpecError);
}

TEST(GraphInvolution, FormTypes) {
  // J tau is an involution; for delta = +/- the matrix J is symmetric and
  // (-1)^(n/2) det J is a square exactly for the plus type
  for (auto [n, q] : std::vector<std::pair<unsigned, std::uint64_t>>{{4, 3}, {4, 5}, {6, 3}, {4, 7}, {2, 5}}) {
    const auto f = gf::field_of_order(q);
    for (auto delta : {cons::Delta::zero, cons::Delta::plus, cons::Delta::minus}) {
      const auto g = cons::graph_involution(n, q, delta);
      const Code sign = (n / 2) % 2 ? f->neg(1) : 1;
      const Code disc = f->mul(sign, mat::det(*f, g.j));
      if (delta == cons::Delta::zero) {
        EXPECT_EQ(mat::transpose(g.j), mat::scale(*f, f->neg(1), g.j));
        continue;
      }
      EXPECT_EQ(mat::transpose(g.j), g.j);
      EXPECT_EQ(f->is_square(disc), delta == cons::Delta::plus) << "n=" << n << " q=" << q;
      if (delta == cons::Delta::minus) {
        EXPECT_FALSE(f->is_square(f->neg(g.mu)));
      }
    }
  }
  EXPECT_THROW(cons::graph_involution(3, 3, cons::Delta::zero), SpecError);
  EXPECT_THROW(cons::graph_involution(4, 4, cons::Delta::zero), SpecError);
}

TEST(GraphInvolution, OuterInvolutionsForNTwo) {
  // For n = 2, tau is conjugation by w, so J tau induces conjugation by Jw
  // with determinant det J. Over F_5, -1 is a square: the plus type is inner
  // and the formal extension is A5 x 2 (outer class = central times 2A, 15),
  // the minus type is diagonal and gives PGL(2,5) = Sym(5) (10 transpositions).
  for (auto [text, size] : std::vector<std::pair<const char*, std::uint64_t>>{{"PSL(2,5):graph+", 15},
                                                                             {"PSL(2,5):graph-", 10}}) {
    const auto ext = build_matrix_group(parse_group_spec(text));
    EXPECT_EQ(ext.group.order(), 120u) << text;
    EXPECT_EQ(ext.group.conj_class(*ext.aut).size(), size) << text;
  }
}

TEST(CanonicalAut, NormalizesAndHasTheRightOrder) {
  const auto ext = build_matrix_group(parse_group_spec("PSL(3,4):tau"));
  const auto& d = ext.group.domain();
  ASSERT_TRUE(ext.aut);
  EXPECT_EQ(d.mul(*ext.aut, *ext.aut), d.identity());
  EXPECT_THROW(build_matrix_group(parse_group_spec("PSL(2,8):phi2")), SpecError);
}

TEST(PermMatrix, ActsOnRows) {
  PermDomain pd(3);
  const auto sigma = pd.cycles({{1, 2, 3}});
  const auto m = cons::perm_matrix(sigma, 3);
  for (unsigned i = 0; i < 3; ++i) EXPECT_EQ(m.at(i, sigma.img[i]), 1u);
}
