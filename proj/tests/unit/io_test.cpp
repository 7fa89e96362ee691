#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "bswidth/groupspec.hpp"
#include "bswidth/io.hpp"

using namespace bsw;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("bswidth-io-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(RefTable, JsonRoundTrip) {
  const RefTable t{"U3(3)", {"PSU(3,3)"}, {{"1A", 1, 6048}, {"2A", 2, 96}}};
  const auto back = io::ref_table_from_json(io::to_json(t));
  EXPECT_EQ(back.group, t.group);
  EXPECT_EQ(back.specs, t.specs);
  ASSERT_EQ(back.classes.size(), 2u);
  EXPECT_EQ(back.classes[1].label, "2A");
  EXPECT_EQ(back.classes[1].centralizer_order, 96u);
  EXPECT_THROW(io::ref_table_from_json(nlohmann::json{{"group", "X"}}), SpecError);
}

TEST(RefTable, LookupBySpecOrName) {
  const auto dir = fresh_dir("ref");
  std::ofstream(dir / "t.json") << io::to_json(RefTable{"S4", {"Sym(4)"}, {{"1A", 1, 24}}}).dump();
  EXPECT_TRUE(io::find_ref_table(dir, "Sym(4)"));
  EXPECT_TRUE(io::find_ref_table(dir, "S4"));
  EXPECT_FALSE(io::find_ref_table(dir, "Sym(5)"));
  EXPECT_FALSE(io::find_ref_table(dir / "missing", "S4"));
}

TEST(RefTable, ShippedTablesMatchTheirGroups) {
  // every shipped table must be consistent with a full classification
  for (const char* spec : {"PSU(3,3)", "PSU(3,3):phi1", "PSU(4,2)"}) {
    const auto t = io::find_ref_table(BSWIDTH_DATA_DIR, spec);
    ASSERT_TRUE(t) << spec;
    const auto g = build_matrix_group(parse_group_spec(spec)).group;
    const auto lab = atlas_match(all_classes(g), g.order(), *t);
    for (const auto& rc : t->classes) EXPECT_TRUE(lab.resolve(rc.label)) << spec << " " << rc.label;
  }
}

TEST(ClassCache, WriteReadAndInvalidate) {
  const auto dir = fresh_dir("cache");
  const auto g = perm_group(parse_group_spec("Sym(5)").base);
  const auto cls = all_classes(g);
  io::write_class_cache(dir, g.domain(), "Sym(5)", g.order(), cls);
  const auto path = dir / io::cache_file_name("Sym(5)");
  ASSERT_TRUE(fs::exists(path));
  EXPECT_FALSE(fs::exists(path.string() + ".tmp"));

  const auto back = io::read_class_cache(dir, g, "Sym(5)");
  ASSERT_TRUE(back);
  ASSERT_EQ(back->size(), cls.size());
  for (std::size_t i = 0; i < cls.size(); ++i) {
    EXPECT_EQ((*back)[i].rep, cls[i].rep);
    EXPECT_EQ((*back)[i].size(), cls[i].size());
  }
  EXPECT_NE(io::cache_file_name("Sym(5)"), io::cache_file_name("Sym(6)"));
  EXPECT_FALSE(io::read_class_cache(dir, g, "Alt(5)"));

  auto j = io::read_json(path);
  j["schema_version"] = io::kCacheSchemaVersion + 1;
  std::ofstream(path) << j.dump();
  EXPECT_FALSE(io::read_class_cache(dir, g, "Sym(5)"));

  j["schema_version"] = io::kCacheSchemaVersion;
  j["classes"][1]["size"] = 7;
  std::ofstream(path) << j.dump();
  EXPECT_THROW(io::read_class_cache(dir, g, "Sym(5)"), CertificationError);
}
