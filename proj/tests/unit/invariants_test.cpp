#include <gtest/gtest.h>

#include "bswidth/groupspec.hpp"
#include "bswidth/invariants.hpp"

using namespace bsw;

namespace {

Group<PermDomain> perm(const char* text) { return perm_group(parse_group_spec(text).base); }

MatrixExtension matrix(const char* text) { return build_matrix_group(parse_group_spec(text)); }

// Brute force over ordered pairs: does some pair of conjugates of x
// generate a subgroup whose order is not a pi-number?
template <GroupDomain D>
bool some_pair_escapes(const Group<D>& g, const typename D::Element& x, const PiSet& pi) {
  const auto cls = g.conj_class(x);
  for (const auto& a : cls.members)
    for (const auto& b : cls.members)
      if (!pi.covers(generate(g.domain(), {a, b}).size())) return true;
  return false;
}

}  // namespace

TEST(PiSet, WidthBound) {
  EXPECT_EQ(PiSet({2}).width_bound(), 3u);
  EXPECT_EQ(PiSet({3}).width_bound(), 2u);
  EXPECT_EQ(PiSet({2, 3}).width_bound(), 4u);
  EXPECT_EQ(PiSet({2, 3, 5}).width_bound(), 6u);
  EXPECT_EQ(PiSet({2, 3, 5, 7}).width_bound(), 10u);
  EXPECT_EQ(PiSet({2, 5}).width_bound(), 3u);
  EXPECT_EQ(PiSet({2}, true).width_bound(), 2u);
  EXPECT_THROW(PiSet({}, true).width_bound(), UndefinedError);
  EXPECT_THROW(PiSet({4}), SpecError);
  EXPECT_TRUE(PiSet({2, 3}).covers(72));
  EXPECT_FALSE(PiSet({2, 3}).covers(30));
  EXPECT_TRUE(PiSet({5}, true).covers(12));
}

TEST(Tuples, MultisetCount) {
  EXPECT_EQ(multiset_count(5, 0, 100), 1u);
  EXPECT_EQ(multiset_count(5, 2, 100), 15u);
  EXPECT_EQ(multiset_count(10, 3, 1000), 220u);
  EXPECT_EQ(multiset_count(1000, 5, 1000), 1001u);  // saturates
}

TEST(Tuples, FindTupleIsLexicographicAndThreadIndependent) {
  std::vector<std::vector<std::size_t>> seen;
  find_tuple(4, 2, 1, [&](const std::vector<std::size_t>& t) {
    seen.push_back(t);
    return false;
  });
  ASSERT_EQ(seen.size(), 10u);
  EXPECT_EQ(seen.front(), (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(seen[4], (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(seen.back(), (std::vector<std::size_t>{3, 3}));
  auto test = [](const std::vector<std::size_t>& t) { return t[0] + 2 * t[1] + t[2] == 17 && t[2] % 3 == 1; };
  const auto one = find_tuple(12, 3, 1, test);
  ASSERT_TRUE(one);
  for (unsigned th : {2u, 4u, 7u}) EXPECT_EQ(find_tuple(12, 3, th, test), one);
}

TEST(Radical, KnownSmallRadicals) {
  EXPECT_EQ(pi_radical(perm("Sym(4)"), PiSet({2})).order(), 4u);
  EXPECT_EQ(pi_radical(perm("Sym(4)"), PiSet({2, 3})).order(), 24u);
  EXPECT_EQ(pi_radical(perm("Sym(4)"), PiSet({3})).order(), 1u);
  EXPECT_EQ(pi_radical(perm("Alt(5)"), PiSet({2})).order(), 1u);
  EXPECT_EQ(pi_radical(matrix("SL(2,3)").group, PiSet({2})).order(), 8u);
  EXPECT_EQ(pi_radical(matrix("SL(2,5)").group, PiSet({2})).order(), 2u);
  EXPECT_EQ(pi_radical(matrix("GL(2,3)").group, PiSet({2})).order(), 8u);
  EXPECT_EQ(pi_radical(direct_product(perm("Alt(5)"), perm("Sym(4)")), PiSet({2})).order(), 4u);
}

TEST(BaerSuzuki, ExhaustivePairsAgreeWithBruteForce) {
  for (const char* text : {"Sym(4)", "Alt(5)", "Sym(5)"}) {
    const auto g = perm(text);
    for (std::uint64_t p : prime_divisors(g.order())) {
      const PiSet pi({p});
      for (const auto& c : all_classes(g)) {
        const auto r = bs_property(g, c.rep, 2, pi);
        EXPECT_EQ(r.verdict == Verdict::fails, some_pair_escapes(g, c.rep, pi)) << text << " p=" << p;
      }
      EXPECT_EQ(baer_suzuki_verify(g, p).mismatches(), 0u) << text << " p=" << p;
    }
  }
}

TEST(BsProperty, WitnessReallyEscapes) {
  const auto g = perm("Sym(4)");
  const auto x = g.domain().cycles({{1, 2}});
  const auto r = bs_property(g, x, 2, PiSet({2}));
  ASSERT_EQ(r.verdict, Verdict::fails);
  EXPECT_EQ(generate(g.domain(), r.witness).size() % 3, 0u);
  SearchOptions tight;
  tight.budget = 3;
  EXPECT_THROW(bs_property(g, x, 3, PiSet({2}), tight), CapExceeded);
}

TEST(BsProperty, MonotoneInM) {
  const auto g = perm("Alt(5)");
  for (const auto& c : all_classes(g))
    for (unsigned m = 1; m < 4; ++m) {
      const bool small = bs_property(g, c.rep, m, PiSet({2, 3})).verdict == Verdict::fails;
      const bool large = bs_property(g, c.rep, m + 1, PiSet({2, 3})).verdict == Verdict::fails;
      EXPECT_TRUE(!small || large);
    }
}

TEST(PiRadicalCriterion, SmallGroupsHaveNoMismatches) {
  EXPECT_EQ(theorem2_verify(matrix("PSL(2,7)").group, PiSet({2, 3})).mismatches(), 0u);
  EXPECT_EQ(theorem2_verify(perm("Sym(4)"), PiSet({2})).mismatches(), 0u);
  // m = 1 is too small: an involution of Sym(4) generates a 2-group but
  // lies outside O_2
  EXPECT_GT(radical_criterion_verify(perm("Sym(4)"), PiSet({2}), 1).mismatches(), 0u);
}

TEST(Beta, InvolutionsOfPsl27) {
  const auto g = matrix("PSL(2,7)").group;
  const auto inv = involution_classes(g, 2000, 0);
  ASSERT_FALSE(inv.classes.empty());
  const auto cert = beta(g, inv.classes[0].rep, 3);
  EXPECT_EQ(cert.k, 2u);
  EXPECT_TRUE(cert.exact());
  EXPECT_EQ(cert.witness_order % 3, 0u);
  EXPECT_TRUE(recheck(g, inv.classes[0].rep, cert));
  EXPECT_THROW(beta(g, inv.classes[0].rep, 5), UndefinedError);
  EXPECT_THROW(beta(g, inv.classes[0].rep, 4), SpecError);
}

TEST(Beta, TamperedCertificateFailsRecheck) {
  const auto g = perm("Alt(5)");
  const auto x = g.domain().cycles({{1, 2}, {3, 4}});
  auto cert = beta(g, x, 5);
  ASSERT_TRUE(recheck(g, x, cert));
  cert.witness_order += 1;
  EXPECT_FALSE(recheck(g, x, cert));
}

TEST(Alpha, NotBelowBeta) {
  const auto g = perm("Alt(5)");
  for (const auto& c : all_classes(g)) {
    if (c.element_order == 1) {
      EXPECT_THROW(alpha(g, c.rep), UndefinedError);
      continue;
    }
    const auto a = alpha(g, c.rep);
    EXPECT_EQ(a.witness_order, 60u);
    for (std::uint64_t r : {2u, 3u, 5u}) EXPECT_LE(beta(g, c.rep, r).k, a.k);
  }
}

TEST(Beta, RandomizedModeGivesARecheckedUpperBound) {
  const auto g = matrix("PSp(4,3)").group;
  const auto inv = involution_classes(g, 5000, 0);
  for (const auto& c : inv.classes) {
    SearchOptions opt;
    opt.mode = Mode::randomized;
    opt.budget = 2000;
    const auto cert = beta(g, c.rep, 5, opt);
    EXPECT_LE(cert.k, 4u);
    EXPECT_TRUE(recheck(g, c.rep, cert));
  }
}
