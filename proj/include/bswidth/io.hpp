#pragma once

// JSON persistence: reference label tables and class caches.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bswidth/core.hpp"
#include "bswidth/error.hpp"
#include "bswidth/structconst.hpp"

namespace bsw::io {

using json = nlohmann::json;

inline json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw SpecError(path.string() + ": " + e.what());
  }
}

inline RefTable ref_table_from_json(const json& j) {
  RefTable t;
  try {
    t.group = j.at("group").get<std::string>();
    if (j.contains("specs")) t.specs = j.at("specs").get<std::vector<std::string>>();
    for (const auto& c : j.at("classes"))
      t.classes.push_back({c.at("label").get<std::string>(), c.at("element_order").get<std::uint64_t>(),
                           c.at("centralizer_order").get<std::uint64_t>()});
  } catch (const json::exception& e) {
    throw SpecError(std::string("malformed reference table: ") + e.what());
  }
  return t;
}

inline json to_json(const RefTable& t) {
  json j;
  j["group"] = t.group;
  j["specs"] = t.specs;
  j["classes"] = json::array();
  for (const auto& c : t.classes)
    j["classes"].push_back(
        {{"label", c.label}, {"element_order", c.element_order}, {"centralizer_order", c.centralizer_order}});
  return j;
}

/// The table in `dir` whose group name or spec list mentions `name`.
inline std::optional<RefTable> find_ref_table(const std::filesystem::path& dir, const std::string& name) {
  if (!std::filesystem::is_directory(dir)) return std::nullopt;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    RefTable t = ref_table_from_json(read_json(f));
    if (t.group == name || std::find(t.specs.begin(), t.specs.end(), name) != t.specs.end()) return t;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Class cache

inline constexpr int kCacheSchemaVersion = 1;

/// Cache file name: schema version plus a hash of the spec text, so a
/// change of either invalidates old files.
inline std::string cache_file_name(const std::string& spec) {
  const std::uint64_t h =
      bsw::detail::mix(bsw::detail::fnv(reinterpret_cast<const std::uint8_t*>(spec.data()), spec.size()));
  std::ostringstream os;
  os << "classes-v" << kCacheSchemaVersion << "-" << std::hex << h << ".json";
  return os.str();
}

template <GroupDomain D>
json class_cache_json(const D& d, const std::string& spec, std::uint64_t order, const std::vector<ConjClass<D>>& cls) {
  json j;
  j["schema_version"] = kCacheSchemaVersion;
  j["group_spec"] = spec;
  j["order"] = order;
  j["classes"] = json::array();
  for (const auto& c : cls)
    j["classes"].push_back({{"rep_encoding", d.encode(c.rep)}, {"size", c.size()}, {"element_order", c.element_order}});
  return j;
}

template <GroupDomain D>
void write_class_cache(const std::filesystem::path& dir, const D& d, const std::string& spec, std::uint64_t order,
                       const std::vector<ConjClass<D>>& cls) {
  std::filesystem::create_directories(dir);
  const auto path = dir / cache_file_name(spec);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write " + tmp);
    out << class_cache_json(d, spec, order, cls).dump(1) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

/// Classes rebuilt from cached representatives; nullopt when there is no
/// valid cache. Every orbit is recomputed and checked against the stored
/// size and element order.
template <GroupDomain D>
std::optional<std::vector<ConjClass<D>>> read_class_cache(const std::filesystem::path& dir, const Group<D>& g,
                                                          const std::string& spec,
                                                          std::uint64_t orbit_cap = kDefaultOrbitCap) {
  const auto path = dir / cache_file_name(spec);
  if (!std::filesystem::exists(path)) return std::nullopt;
  const json j = read_json(path);
  if (j.value("schema_version", 0) != kCacheSchemaVersion || j.value("group_spec", std::string()) != spec ||
      j.value("order", std::uint64_t{0}) != g.order())
    return std::nullopt;
  std::vector<ConjClass<D>> out;
  for (const auto& c : j.at("classes")) {
    const auto rep = g.domain().decode(c.at("rep_encoding").get<std::string>());
    auto cls = g.conj_class(rep, false, orbit_cap);
    if (cls.size() != c.at("size").get<std::uint64_t>() ||
        cls.element_order != c.at("element_order").get<std::uint64_t>())
      throw CertificationError("class cache " + path.string() + " disagrees with recomputation");
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace bsw::io
