#pragma once

// Class multiplication coefficients by direct pair counting, and matching
// computed classes against labelled reference tables.

#include <atomic>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bswidth/core.hpp"
#include "bswidth/error.hpp"

namespace bsw {

/// m(A, B, c): the number of u in A with u^-1 c in B, i.e. of pairs
/// (u, v) in A x B with uv = c. Only the two classes are materialized.
template <GroupDomain D>
std::uint64_t count_pairs(const D& d, const ConjClass<D>& a, const ConjClass<D>& b, const typename D::Element& c,
                          unsigned threads = 1) {
  const auto& us = a.members.items();
  auto count_range = [&](std::size_t from, std::size_t step) {
    std::uint64_t n = 0;
    for (std::size_t i = from; i < us.size(); i += step)
      if (b.contains(d.mul(d.inv(us[i]), c))) ++n;
    return n;
  };
  if (threads <= 1) return count_range(0, 1);
  std::vector<std::uint64_t> part(threads, 0);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back([&, t] { part[t] = count_range(t, threads); });
  for (auto& th : pool) th.join();
  std::uint64_t total = 0;
  for (auto n : part) total += n;
  return total;
}

/// Sum over classes C of m(A, B, c_C) |C| equals |A| |B|. `group_order`
/// guards against an incomplete class list.
template <GroupDomain D>
bool sum_rule_check(const D& d, const ConjClass<D>& a, const ConjClass<D>& b, const std::vector<ConjClass<D>>& classes,
                    std::uint64_t group_order) {
  std::uint64_t covered = 0;
  for (const auto& c : classes) covered += c.size();
  if (covered != group_order)
    throw SpecError("sum_rule_check needs every class: sizes add up to " + std::to_string(covered) + ", not " +
                    std::to_string(group_order));
  std::uint64_t total = 0;
  for (const auto& c : classes) total += count_pairs(d, a, b, c.rep) * c.size();
  return total == a.size() * b.size();
}

struct RefClass {
  std::string label;
  std::uint64_t element_order = 0;
  std::uint64_t centralizer_order = 0;
};

struct RefTable {
  std::string group;               // ATLAS-style name, e.g. "U3(3).2"
  std::vector<std::string> specs;  // group specifications the table describes
  std::vector<RefClass> classes;
};

/// One fingerprint (element order, centralizer order) and everything that
/// carries it on either side.
struct LabelGroup {
  std::uint64_t element_order = 0;
  std::uint64_t centralizer_order = 0;
  std::vector<std::string> labels;   // reference side
  std::vector<std::size_t> classes;  // indices into the computed class list

  /// Exactly one label and one class.
  bool unique() const { return labels.size() == 1 && classes.size() == 1; }
  /// Several labels share the fingerprint; reported as an unordered set.
  bool ambiguous() const { return labels.size() > 1 && labels.size() == classes.size(); }
  /// Counts differ: a class is missing, or the reference does not fit.
  bool mismatch() const { return labels.size() != classes.size(); }
};

struct Labeling {
  std::vector<LabelGroup> groups;

  const LabelGroup* find_label(const std::string& label) const {
    for (const auto& g : groups)
      for (const auto& l : g.labels)
        if (l == label) return &g;
    return nullptr;
  }
  /// The class index for a uniquely matched label.
  std::optional<std::size_t> resolve(const std::string& label) const {
    const auto* g = find_label(label);
    if (!g || !g->unique()) return std::nullopt;
    return g->classes.front();
  }
};

/// Matches by (element order, |G| / class size). Nothing is assigned
/// silently: shared fingerprints stay grouped, unequal counts are flagged.
template <GroupDomain D>
Labeling atlas_match(const std::vector<ConjClass<D>>& classes, std::uint64_t group_order, const RefTable& ref) {
  std::map<std::pair<std::uint64_t, std::uint64_t>, LabelGroup> by_key;
  std::map<std::string, int> seen;
  for (const auto& rc : ref.classes) {
    if (rc.element_order == 0 || rc.centralizer_order == 0 || group_order % rc.centralizer_order != 0)
      throw SpecError("reference class " + rc.label + " is inconsistent with |G| = " + std::to_string(group_order));
    if (seen[rc.label]++) throw SpecError("reference label " + rc.label + " appears twice");
    auto& g = by_key[{rc.element_order, rc.centralizer_order}];
    g.element_order = rc.element_order;
    g.centralizer_order = rc.centralizer_order;
    g.labels.push_back(rc.label);
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    if (group_order % c.size() != 0) throw MathError("class size does not divide the group order");
    const std::uint64_t cent = group_order / c.size();
    auto& g = by_key[{c.element_order, cent}];
    g.element_order = c.element_order;
    g.centralizer_order = cent;
    g.classes.push_back(i);
  }
  Labeling out;
  for (auto& [key, g] : by_key) out.groups.push_back(std::move(g));
  return out;
}

/// Finds classes by fingerprint (element order, class size). Groups up to
/// `full_limit` are enumerated and classified completely; larger ones are
/// searched by powering random elements, so a found class is certain but
/// the absence of a second class with the same fingerprint is not.
template <GroupDomain D>
class ClassFinder {
 public:
  using E = typename D::Element;

  ClassFinder(const Group<D>& g, std::uint64_t full_limit, std::uint64_t budget, std::uint64_t seed,
              std::vector<E> seeds = {}, std::uint64_t orbit_cap = kDefaultOrbitCap)
      : g_(g), budget_(budget), orbit_cap_(orbit_cap), pr_(g.domain(), g.gens(), seed) {
    if (g.order() <= full_limit) {
      for (auto& c : all_classes(g)) classes_.push_back(std::move(c));
      complete_ = true;
    }
    for (const auto& s : seeds) consider(s);
  }

  bool complete() const noexcept { return complete_; }
  /// Stable storage: references returned by find() stay valid.
  const std::deque<ConjClass<D>>& classes() const noexcept { return classes_; }

  /// The class with this fingerprint. Throws when none is found within the
  /// budget, or when a complete classification shows several.
  const ConjClass<D>& find(std::uint64_t t, std::uint64_t size) {
    auto matching = [&] {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i].element_order == t && classes_[i].size() == size) idx.push_back(i);
      return idx;
    };
    auto idx = matching();
    const auto& d = g_.domain();
    while (idx.empty() && !complete_ && spent_ < budget_) {
      ++spent_;
      const E y = pr_.next();
      const std::uint64_t o = element_order(d, y);
      if (o % t == 0 && consider(power(d, y, o / t)) && classes_.back().size() == size) idx = matching();
    }
    if (idx.empty())
      throw CapExceeded("no class of order " + std::to_string(t) + " and size " + std::to_string(size) + " found",
                        budget_);
    if (idx.size() > 1)
      throw SpecError("fingerprint " + std::to_string(t) + ":" + std::to_string(size) + " is shared by " +
                      std::to_string(idx.size()) + " classes");
    return classes_[idx.front()];
  }

  /// Resolves a reference label to its class.
  const ConjClass<D>& find(const RefTable& ref, const std::string& label) {
    const RefClass* rc = nullptr;
    for (const auto& c : ref.classes)
      if (c.label == label) rc = &c;
    if (!rc) throw SpecError("label " + label + " is not in the reference table for " + ref.group);
    for (const auto& c : ref.classes)
      if (&c != rc && c.element_order == rc->element_order && c.centralizer_order == rc->centralizer_order)
        throw SpecError("labels " + label + " and " + c.label + " share a fingerprint");
    if (g_.order() % rc->centralizer_order != 0)
      throw SpecError("centralizer order of " + label + " does not divide |G|");
    return find(rc->element_order, g_.order() / rc->centralizer_order);
  }

 private:
  bool consider(const E& z) {
    for (const auto& c : classes_)
      if (c.contains(z)) return false;
    classes_.push_back(g_.conj_class(z, false, orbit_cap_));
    return true;
  }

  const Group<D>& g_;
  std::uint64_t budget_;
  std::uint64_t orbit_cap_;
  std::uint64_t spent_ = 0;
  ProductReplacement<D> pr_;
  std::deque<ConjClass<D>> classes_;
  bool complete_ = false;
};

}  // namespace bsw
