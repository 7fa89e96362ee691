#include <gtest/gtest.h>

#include "bswidth/groupspec.hpp"

using namespace bsw;

namespace {

std::size_t error_position(const std::string& text) {
  try {
    parse_group_spec(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << text << " parsed";
  return SIZE_MAX;
}

}  // namespace

// Orders from standard tables of small groups.
TEST(Kinds, OrdersMatchKnownValues) {
  const std::pair<const char*, std::uint64_t> known[] = {
      {"GL(2,3)", 48},      {"SL(2,5)", 120},     {"PSL(2,7)", 168},     {"PGL(2,5)", 120},
      {"PSL(2,8)", 504},    {"PSL(3,3)", 5616},   {"PSL(3,4)", 20160},   {"GU(2,2)", 18},
      {"SU(3,2)", 216},     {"PGU(3,2)", 216},    {"PSU(3,3)", 6048},    {"PSU(4,2)", 25920},
      {"PSU(3,4)", 62400},  {"Sp(4,2)", 720},     {"PSp(4,3)", 25920},   {"PSL(4,3)", 6065280},
      {"PSU(4,3)", 3265920}, {"Alt(6)", 360},     {"Sym(5)", 120},       {"PSL(2,9)", 360}};
  for (const auto& [text, order] : known) EXPECT_EQ(group_order(parse_group_spec(text).base), order) << text;
}

TEST(Kinds, GeneratorsCloseToTheFormulaOrder) {
  for (const char* text : {"SL(2,5)", "PSL(2,7)", "PGL(2,5)", "GU(2,2)", "SU(3,2)", "PSU(3,3)", "Sp(4,2)",
                           "PSp(4,3)", "PSL(3,4)", "PSU(4,2)"}) {
    const auto spec = parse_group_spec(text);
    const auto g = matrix_group(spec.base);
    EXPECT_EQ(g.certificate, "bfs") << text;
    EXPECT_EQ(generate(g.group.domain(), g.group.gens()).size(), group_order(spec.base)) << text;
    if (g.form)
      for (const auto& x : g.group.gens()) {
        const auto& d = g.group.domain();
        EXPECT_TRUE(mat::preserves_form(d.field(), x.m, *g.form) ||
                    mat::similitude_ratio(d.field(), x.m, *g.form).has_value())
            << text;
      }
  }
}

TEST(Kinds, LargeGroupsUseTheTransvectionCertificate) {
  const auto g = matrix_group(parse_group_spec("PSL(4,3)").base, 1000);
  EXPECT_EQ(g.certificate, "transvections");
  EXPECT_EQ(g.group.order(), 6065280u);
}

TEST(GroupSpec, CanonicalStringsRoundTrip) {
  for (const char* text : {"GL(3,4)", "SL(2,9)", "GU(3,3)", "SU(4,2)", "Sp(6,2)", "PGL(2,25)", "PSL(4,3)",
                           "PGU(3,4)", "PSU(4,3)", "PSp(4,5)", "Alt(7)", "Sym(16)", "PSU(3,3):phi1",
                           "PSL(3,4):tau", "PSL(3,4):tauphi1", "PSL(4,3):graph0", "PSL(4,3):graph+",
                           "PSL(4,3):graph-", "PSL(2,9):diag", "PSU(4,3):diagphi1", "PSL(4,3):diaggraph+"}) {
    EXPECT_EQ(parse_group_spec(text).str(), text);
  }
}

TEST(GroupSpec, ErrorsReportTheirPosition) {
  EXPECT_EQ(error_position("PSU(3,"), 6u);
  EXPECT_EQ(error_position("XYZ(3,3)"), 0u);
  EXPECT_EQ(error_position("PSU 3,3)"), 3u);
  EXPECT_EQ(error_position("PSU(3;3)"), 5u);
  EXPECT_EQ(error_position("PSU(3,3):foo"), 9u);
  EXPECT_EQ(error_position("PSL(4,3):graph*"), 14u);
  EXPECT_EQ(error_position("PSU(3,3) "), 8u);
  EXPECT_EQ(error_position("Alt(5):phi1"), 0u);
  EXPECT_THROW(parse_group_spec("PSL(2,6)"), SpecError);
  EXPECT_THROW(parse_group_spec("Sp(3,3)"), SpecError);
  EXPECT_THROW(parse_group_spec("SL(9,2)"), SpecError);
  EXPECT_THROW(parse_group_spec("Sym(17)"), SpecError);
}

TEST(GroupSpec, ExtensionsHaveTheExpectedOrders) {
  const std::pair<const char*, std::uint64_t> known[] = {{"PSU(3,3):phi1", 12096},
                                                         {"PSU(4,2):phi1", 51840},
                                                         {"PSL(2,9):diag", 720},
                                                         {"PGL(2,9):phi1", 1440},
                                                         {"PSL(3,4):tau", 40320},
                                                         {"PSL(2,7)", 168}};
  for (const auto& [text, order] : known) {
    const auto ext = build_matrix_group(parse_group_spec(text));
    EXPECT_EQ(ext.group.order(), order) << text;
    EXPECT_EQ(generate(ext.group.domain(), ext.group.gens()).size(), order) << text;
  }
}

TEST(GroupSpec, CosetMembership) {
  const auto ext = build_matrix_group(parse_group_spec("PSU(3,3):phi1"));
  ASSERT_TRUE(ext.aut);
  EXPECT_EQ(ext.index, 2u);
  EXPECT_FALSE(contains(ext.base, *ext.aut));
  EXPECT_TRUE(contains(ext, *ext.aut));
  EXPECT_EQ(coset_index(ext, *ext.aut), 1u);
  std::uint64_t inner = 0;
  for (const auto& x : ext.group.elements().elements()) inner += contains(ext.base, x);
  EXPECT_EQ(inner, 6048u);
}

TEST(GroupSpec, GraphAutomorphismOnlyForLinearGroups) {
  EXPECT_THROW(build_matrix_group(parse_group_spec("PSU(4,3):graph0")), SpecError);
}
