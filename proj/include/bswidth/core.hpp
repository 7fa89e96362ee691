#pragma once

// Generic finite-group engine: BFS closure, element orders, conjugacy class
// orbits, normal closures, product-replacement random elements.
//
// Everything here is templated on a GroupDomain and never needs more than the
// group law; no stabilizer chains are used.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bswidth/domain.hpp"
#include "bswidth/error.hpp"
#include "bswidth/numtheory.hpp"
#include "bswidth/table.hpp"

namespace bsw {

inline constexpr std::uint64_t kDefaultEnumCap = 20'000'000;
inline constexpr std::uint64_t kDefaultOrbitCap = 5'000'000;

template <GroupDomain D>
using ElemSet = ElementTable<typename D::Element, typename D::Hash>;

enum class Status { complete, stopped, overflow };

/// A subgroup built by BFS, elements in discovery order.
template <GroupDomain D>
struct Closure {
  using E = typename D::Element;
  ElemSet<D> table;
  std::vector<E> gens;
  Status status = Status::complete;

  const std::vector<E>& elements() const noexcept { return table.items(); }
  std::uint64_t size() const noexcept { return table.size(); }
  bool complete() const noexcept { return status == Status::complete; }
  bool contains(const E& x) const { return table.contains(x); }
};

namespace detail {

/// Adds gens[first_new..] to a closure that is already closed under
/// gens[0..first_new). Old elements are multiplied only by the new
/// generators, new elements by all of them. `visit` sees each new element
/// and may return false to stop early.
template <GroupDomain D, class Visit>
void extend(const D& d, Closure<D>& c, std::size_t first_new, std::uint64_t cap, Visit&& visit) {
  const std::size_t old_size = c.table.size();
  for (std::size_t i = 0; i < c.table.size(); ++i) {
    const std::size_t g0 = i < old_size ? first_new : 0;
    const auto cur = c.table[i];
    for (std::size_t g = g0; g < c.gens.size(); ++g) {
      const auto [idx, fresh] = c.table.insert(d.mul(c.gens[g], cur));
      if (!fresh) continue;
      if (c.table.size() > cap) {
        c.status = Status::overflow;
        return;
      }
      if (!visit(c.table[idx])) {
        c.status = Status::stopped;
        return;
      }
    }
  }
  c.status = Status::complete;
}

}  // namespace detail

/// BFS closure under left multiplication by the generators, from the
/// identity. Overflow is reported through `status`, never as a wrong order.
template <GroupDomain D, class Visit>
Closure<D> generate(const D& d, const std::vector<typename D::Element>& gens, std::uint64_t cap, Visit&& visit) {
  Closure<D> c;
  c.gens = gens;
  c.table.insert(d.identity());
  if (!visit(c.table[0])) {
    c.status = Status::stopped;
    return c;
  }
  detail::extend(d, c, 0, cap, visit);
  return c;
}

template <GroupDomain D>
Closure<D> generate(const D& d, const std::vector<typename D::Element>& gens, std::uint64_t cap = kDefaultEnumCap) {
  return generate(d, gens, cap, [](const auto&) { return true; });
}

/// Adds x as a generator unless the closure already contains it; returns
/// whether it was added. Overflow shows up in c.status.
template <GroupDomain D>
bool add_generator(const D& d, Closure<D>& c, const typename D::Element& x, std::uint64_t cap) {
  if (c.table.empty()) c.table.insert(d.identity());
  if (c.contains(x)) return false;
  c.gens.push_back(x);
  detail::extend(d, c, c.gens.size() - 1, cap, [](const auto&) { return true; });
  return true;
}

/// Subgroup generated by a (possibly large) element list, keeping only the
/// elements that enlarge the closure as generators.
template <GroupDomain D>
Closure<D> generate_from(const D& d, const std::vector<typename D::Element>& elems, std::uint64_t cap) {
  Closure<D> c;
  c.table.insert(d.identity());
  for (const auto& x : elems) {
    add_generator(d, c, x, cap);
    if (!c.complete()) break;
  }
  return c;
}

/// Order of the generated subgroup, or nullopt when it exceeds cap.
template <GroupDomain D>
std::optional<std::uint64_t> subgroup_order(const D& d, const std::vector<typename D::Element>& gens,
                                            std::uint64_t cap = kDefaultEnumCap) {
  auto c = generate(d, gens, cap);
  if (!c.complete()) return std::nullopt;
  return c.size();
}

template <GroupDomain D>
typename D::Element power(const D& d, typename D::Element x, std::uint64_t e) {
  auto r = d.identity();
  while (e) {
    if (e & 1) r = d.mul(r, x);
    e >>= 1;
    if (e) x = d.mul(x, x);
  }
  return r;
}

template <GroupDomain D>
std::uint64_t element_order(const D& d, const typename D::Element& x, std::uint64_t cap = kDefaultEnumCap) {
  const auto id = d.identity();
  auto y = x;
  std::uint64_t k = 1;
  while (!(y == id)) {
    y = d.mul(y, x);
    if (++k > cap) throw CapExceeded("element order search", cap);
  }
  return k;
}

/// x^g = g^-1 x g.
template <GroupDomain D>
typename D::Element conjugate(const D& d, const typename D::Element& x, const typename D::Element& g) {
  return d.mul(d.mul(d.inv(g), x), g);
}

template <GroupDomain D>
typename D::Element commutator(const D& d, const typename D::Element& x, const typename D::Element& y) {
  return d.mul(d.mul(d.inv(x), d.inv(y)), d.mul(x, y));
}

/// Orbit of rep under conjugation by the ambient generators.
template <GroupDomain D>
struct ConjClass {
  using E = typename D::Element;
  E rep;
  ElemSet<D> members;  // BFS discovery order, members[0] == rep
  /// conjugators[i]^-1 rep conjugators[i] == members[i]; empty unless requested.
  std::vector<E> conjugators;
  std::uint64_t element_order = 0;

  std::uint64_t size() const noexcept { return members.size(); }
  bool contains(const E& x) const { return members.contains(x); }
  /// (element order, class size).
  std::pair<std::uint64_t, std::uint64_t> fingerprint() const { return {element_order, size()}; }
};

template <GroupDomain D>
ConjClass<D> conj_class(const D& d, const std::vector<typename D::Element>& gens, const typename D::Element& x,
                        bool with_conjugators = false, std::uint64_t cap = kDefaultOrbitCap) {
  using E = typename D::Element;
  ConjClass<D> c;
  c.rep = x;
  c.element_order = element_order(d, x);
  c.members.insert(x);
  if (with_conjugators) c.conjugators.push_back(d.identity());
  std::vector<E> inv_gens;
  for (const auto& s : gens) inv_gens.push_back(d.inv(s));
  for (std::size_t i = 0; i < c.members.size(); ++i) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const E cur = c.members[i];
      if (!c.members.insert(d.mul(d.mul(inv_gens[g], cur), gens[g])).second) continue;
      if (c.members.size() > cap) throw CapExceeded("conjugacy class orbit", cap);
      if (with_conjugators) c.conjugators.push_back(d.mul(c.conjugators[i], gens[g]));
    }
  }
  return c;
}

struct NormalClosureInfo {
  std::uint64_t order = 0;
  std::vector<std::uint64_t> primes;
  Status status = Status::complete;
};

/// Normal closure of x under the ambient generators. Returns the closure;
/// `visit` may stop the BFS early (status == stopped).
template <GroupDomain D, class Visit>
Closure<D> normal_closure(const D& d, const std::vector<typename D::Element>& gens, const typename D::Element& x,
                          std::uint64_t cap, Visit&& visit) {
  using E = typename D::Element;
  Closure<D> n;
  const auto id = d.identity();
  n.table.insert(id);
  if (!visit(id)) {
    n.status = Status::stopped;
    return n;
  }
  std::vector<E> inv_gens;
  for (const auto& s : gens) inv_gens.push_back(d.inv(s));
  std::vector<E> pending{x};
  while (!pending.empty()) {
    const E y = pending.back();
    pending.pop_back();
    if (n.contains(y)) continue;
    n.gens.push_back(y);
    detail::extend(d, n, n.gens.size() - 1, cap, visit);
    if (!n.complete()) return n;
    // new generator's conjugates must lie in the closure
    for (std::size_t g = 0; g < gens.size(); ++g) {
      E z = d.mul(d.mul(inv_gens[g], y), gens[g]);
      if (!n.contains(z)) pending.push_back(z);
    }
  }
  return n;
}

template <GroupDomain D>
NormalClosureInfo normal_closure_info(const D& d, const std::vector<typename D::Element>& gens,
                                      const typename D::Element& x, std::uint64_t cap = kDefaultEnumCap) {
  auto n = normal_closure(d, gens, x, cap, [](const auto&) { return true; });
  NormalClosureInfo info;
  info.status = n.status;
  if (n.complete()) {
    info.order = n.size();
    info.primes = prime_divisors(info.order);
  }
  return info;
}

/// Per-task seed derived from a master seed and a task index.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (std::uint64_t{words[0]} << 32) | words[1];
}

/// Product replacement with an accumulator ("rattle").
template <GroupDomain D>
class ProductReplacement {
 public:
  using E = typename D::Element;

  ProductReplacement(const D& d, const std::vector<E>& gens, std::uint64_t seed, unsigned slots = 10,
                     unsigned burn_in = 50)
      : d_(d), rng_(seed), acc_(d.identity()) {
    if (gens.empty()) return;
    slots = std::max<unsigned>(slots, 2);
    for (unsigned i = 0; i < slots; ++i) slots_.push_back(gens[i % gens.size()]);
    for (unsigned i = 0; i < burn_in; ++i) step();
  }

  E next() {
    if (slots_.empty()) return d_.identity();
    step();
    return acc_;
  }

 private:
  void step() {
    std::uniform_int_distribution<std::size_t> pick(0, slots_.size() - 1);
    const std::size_t i = pick(rng_);
    std::size_t j = pick(rng_);
    while (j == i) j = pick(rng_);
    const auto coin = rng_();
    const E other = (coin & 2) ? d_.inv(slots_[j]) : slots_[j];
    slots_[i] = (coin & 1) ? d_.mul(slots_[i], other) : d_.mul(other, slots_[i]);
    acc_ = d_.mul(acc_, slots_[i]);
  }

  const D& d_;
  std::mt19937_64 rng_;
  std::vector<E> slots_;
  E acc_;
};

template <GroupDomain D>
typename D::Element random_element(const D& d, const std::vector<typename D::Element>& gens, std::uint64_t seed) {
  return ProductReplacement<D>(d, gens, seed).next();
}

/// Generator list plus lazily computed order and element cache.
template <GroupDomain D>
class Group {
 public:
  using E = typename D::Element;

  Group(D domain, std::vector<E> gens, std::string name, std::optional<std::uint64_t> known_order = std::nullopt,
        std::uint64_t cap = kDefaultEnumCap)
      : d_(std::move(domain)), gens_(std::move(gens)), name_(std::move(name)), known_(known_order), cap_(cap) {}

  const D& domain() const noexcept { return d_; }
  const std::vector<E>& gens() const noexcept { return gens_; }
  const std::string& name() const noexcept { return name_; }
  std::uint64_t cap() const noexcept { return cap_; }
  /// Order from a closed formula, when one was supplied.
  std::optional<std::uint64_t> known_order() const noexcept { return known_; }

  bool enumerated() const noexcept { return closure_ != nullptr; }

  /// Full element list; throws CapExceeded past the cap. Must be called
  /// before sharing the handle across threads.
  const Closure<D>& elements() const {
    if (!closure_) {
      if (known_ && *known_ > cap_) throw CapExceeded("enumeration of " + name_, cap_);
      auto c = std::make_shared<Closure<D>>(generate(d_, gens_, cap_));
      if (!c->complete()) throw CapExceeded("enumeration of " + name_, cap_);
      if (known_ && c->size() != *known_)
        throw CertificationError(name_ + ": BFS order " + std::to_string(c->size()) + " differs from formula " +
                                 std::to_string(*known_));
      closure_ = std::move(c);
    }
    return *closure_;
  }

  /// Installs an already computed full closure of gens().
  void adopt(Closure<D> c) {
    if (!c.complete() || (known_ && c.size() != *known_))
      throw CertificationError(name_ + ": adopted closure is incomplete");
    closure_ = std::make_shared<const Closure<D>>(std::move(c));
  }

  std::uint64_t order() const { return known_ ? *known_ : elements().size(); }

  bool contains(const E& x) const { return elements().contains(x); }

  ConjClass<D> conj_class(const E& x, bool with_conjugators = false,
                          std::uint64_t cap = kDefaultOrbitCap) const {
    return bsw::conj_class(d_, gens_, x, with_conjugators, cap);
  }

  E random(std::uint64_t seed) const { return random_element(d_, gens_, seed); }

 private:
  D d_;
  std::vector<E> gens_;
  std::string name_;
  std::optional<std::uint64_t> known_;
  std::uint64_t cap_;
  mutable std::shared_ptr<const Closure<D>> closure_;
};

template <GroupDomain D>
std::uint64_t centralizer_order(const Group<D>& g, const typename D::Element& x) {
  const auto& d = g.domain();
  std::uint64_t n = 0;
  for (const auto& y : g.elements().elements())
    if (d.mul(x, y) == d.mul(y, x)) ++n;
  return n;
}

/// All conjugacy classes of a fully enumerated group, in order of first
/// appearance in the element list.
template <GroupDomain D>
std::vector<ConjClass<D>> all_classes(const Group<D>& g) {
  std::vector<ConjClass<D>> out;
  ElemSet<D> seen;
  for (const auto& x : g.elements().elements()) {
    if (seen.count(x)) continue;
    out.push_back(g.conj_class(x));
    for (const auto& y : out.back().members) seen.insert(y);
  }
  return out;
}

struct SearchReport {
  bool complete = false;
  std::string how;
};

/// Classes of elements of order t, found by powering random elements.
template <GroupDomain D>
struct ClassSearch {
  std::vector<ConjClass<D>> classes;
  SearchReport report;

  std::uint64_t total() const {
    std::uint64_t s = 0;
    for (const auto& c : classes) s += c.size();
    return s;
  }
};

/// Finds the classes of elements of order t in g. `seeds` are tried first.
/// `filter` restricts to elements of interest (e.g. a coset); completeness
/// is declared only when the members found match an independent count:
/// `known_count`, or a scan of the full element list when it is cached.
template <GroupDomain D>
ClassSearch<D> order_t_classes(const Group<D>& g, std::uint64_t t, std::uint64_t budget, std::uint64_t seed,
                               const std::vector<typename D::Element>& seeds = {},
                               std::optional<std::uint64_t> known_count = std::nullopt,
                               const std::function<bool(const typename D::Element&)>& filter = nullptr,
                               std::uint64_t orbit_cap = kDefaultOrbitCap) {
  using E = typename D::Element;
  const auto& d = g.domain();
  ClassSearch<D> out;
  std::optional<std::uint64_t> target = known_count;
  if (!target && g.enumerated()) {
    std::uint64_t n = 0;
    for (const auto& x : g.elements().elements())
      if ((!filter || filter(x)) && element_order(d, x) == t) ++n;
    target = n;
  }
  auto consider = [&](const E& z) {
    if (filter && !filter(z)) return;
    for (const auto& c : out.classes)
      if (c.contains(z)) return;
    out.classes.push_back(bsw::conj_class(d, g.gens(), z, false, orbit_cap));
  };
  auto done = [&] { return target && out.total() == *target; };
  for (const auto& s : seeds) {
    if (element_order(d, s) == t) consider(s);
  }
  ProductReplacement<D> pr(d, g.gens(), seed);
  for (std::uint64_t i = 0; i < budget && !done(); ++i) {
    const E y = pr.next();
    const std::uint64_t o = element_order(d, y);
    if (o % t != 0) continue;
    consider(power(d, y, o / t));
  }
  if (target) {
    out.report.complete = out.total() == *target;
    out.report.how = "members " + std::to_string(out.total()) + " of " + std::to_string(*target) + " counted";
  } else {
    out.report.how = "no independent count available; completeness unknown";
  }
  return out;
}

/// All classes met by powering random elements. Complete exactly when the
/// class sizes add up to the known group order.
template <GroupDomain D>
ClassSearch<D> class_search(const Group<D>& g, std::uint64_t budget, std::uint64_t seed,
                            std::uint64_t orbit_cap = kDefaultOrbitCap) {
  using E = typename D::Element;
  const auto& d = g.domain();
  ClassSearch<D> out;
  const std::uint64_t n = g.order();
  auto consider = [&](const E& z) {
    for (const auto& c : out.classes)
      if (c.contains(z)) return;
    out.classes.push_back(bsw::conj_class(d, g.gens(), z, false, orbit_cap));
  };
  consider(d.identity());
  ProductReplacement<D> pr(d, g.gens(), seed);
  for (std::uint64_t i = 0; i < budget && out.total() < n; ++i) {
    const E y = pr.next();
    const std::uint64_t o = element_order(d, y);
    for (std::uint64_t e = 1; e <= o; ++e)
      if (o % e == 0) consider(power(d, y, e));
  }
  out.report.complete = out.total() == n;
  out.report.how = "class sizes sum to " + std::to_string(out.total()) + " of " + std::to_string(n);
  return out;
}

template <GroupDomain D>
ClassSearch<D> involution_classes(const Group<D>& g, std::uint64_t budget, std::uint64_t seed = 0) {
  return order_t_classes(g, 2, budget, seed);
}

}  // namespace bsw
