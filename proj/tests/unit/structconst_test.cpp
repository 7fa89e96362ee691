#include <gtest/gtest.h>

#include "bswidth/groupspec.hpp"
#include "bswidth/structconst.hpp"

using namespace bsw;

namespace {

Group<PermDomain> perm(const char* text) { return perm_group(parse_group_spec(text).base); }

// Direct count over A x B.
template <GroupDomain D>
std::uint64_t brute_pairs(const D& d, const ConjClass<D>& a, const ConjClass<D>& b, const typename D::Element& c) {
  std::uint64_t n = 0;
  for (const auto& u : a.members)
    for (const auto& v : b.members) n += d.mul(u, v) == c;
  return n;
}

RefTable s4_table() {
  return {"S4", {"Sym(4)"}, {{"1A", 1, 24}, {"2A", 2, 8}, {"2B", 2, 4}, {"3A", 3, 3}, {"4A", 4, 4}}};
}

}  // namespace

TEST(StructConst, PairCountMatchesBruteForce) {
  const auto g = perm("Sym(5)");
  const auto cls = all_classes(g);
  for (const auto& a : cls)
    for (const auto& b : cls)
      for (const auto& c : cls) ASSERT_EQ(count_pairs(g.domain(), a, b, c.rep), brute_pairs(g.domain(), a, b, c.rep));
}

TEST(StructConst, ThreadsDoNotChangeCounts) {
  const auto g = perm("Alt(6)");
  const auto cls = all_classes(g);
  for (const auto& a : cls)
    for (const auto& c : cls) EXPECT_EQ(count_pairs(g.domain(), a, a, c.rep, 4), count_pairs(g.domain(), a, a, c.rep));
}

TEST(StructConst, SumRule) {
  const auto g = perm("Sym(5)");
  const auto cls = all_classes(g);
  for (const auto& a : cls)
    for (const auto& b : cls) EXPECT_TRUE(sum_rule_check(g.domain(), a, b, cls, g.order()));
  std::vector<ConjClass<PermDomain>> partial(cls.begin(), cls.begin() + 3);
  EXPECT_THROW(sum_rule_check(g.domain(), cls[0], cls[1], partial, g.order()), SpecError);
}

TEST(AtlasMatch, UniqueAmbiguousAndMismatched) {
  const auto g = perm("Sym(4)");
  const auto cls = all_classes(g);
  const auto lab = atlas_match(cls, 24, s4_table());
  for (const char* l : {"1A", "2A", "2B", "3A", "4A"}) {
    const auto i = lab.resolve(l);
    ASSERT_TRUE(i) << l;
    EXPECT_EQ(24 / cls[*i].size(), lab.find_label(l)->centralizer_order);
  }
  // 2B and 4A of Sym(4) share no fingerprint, but two labels with the same one stay grouped
  RefTable twin = {"T", {}, {{"2X", 2, 4}, {"2Y", 2, 4}}};
  const auto amb = atlas_match(cls, 24, twin);
  const auto* grp = amb.find_label("2X");
  ASSERT_NE(grp, nullptr);
  EXPECT_TRUE(grp->mismatch());  // two labels, one class
  EXPECT_FALSE(amb.resolve("2X"));
  RefTable bad = {"B", {}, {{"5A", 5, 7}}};
  EXPECT_THROW(atlas_match(cls, 24, bad), SpecError);
}

TEST(ClassFinder, ByFingerprintAndLabel) {
  const auto g = perm("Sym(4)");
  ClassFinder<PermDomain> full(g, 1000, 100, 0);
  EXPECT_TRUE(full.complete());
  EXPECT_EQ(full.find(3, 8).size(), 8u);
  EXPECT_EQ(full.find(s4_table(), "2B").size(), 6u);
  EXPECT_THROW(full.find(5, 1), CapExceeded);
  EXPECT_THROW(full.find(s4_table(), "7Z"), SpecError);

  ClassFinder<PermDomain> random(g, 1, 500, 3);
  EXPECT_FALSE(random.complete());
  EXPECT_EQ(random.find(4, 6).element_order, 4u);
  const auto* first = &random.find(2, 3);
  random.find(3, 8);
  EXPECT_EQ(first, &random.find(2, 3));  // references stay valid while classes are added
}

TEST(ClassFinder, SharedFingerprintIsRejected) {
  // Sym(3) x Sym(3): (12) and (45) are two classes of order 2 and size 3
  const auto g = direct_product(perm("Sym(3)"), perm("Sym(3)"));
  ClassFinder<PermDomain> f(g, 1000, 100, 0);
  EXPECT_THROW(f.find(2, 3), SpecError);
}
