#pragma once

// pi-radical, the m-tuple conjugate criterion, beta_r(x, L) and alpha(x, L).
//
// Tuples of conjugates are multisets with the first entry pinned to x:
// simultaneous conjugation does not change the generated subgroup's order,
// so every tuple is equivalent to one that starts with x.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "bswidth/core.hpp"
#include "bswidth/error.hpp"
#include "bswidth/numtheory.hpp"

namespace bsw {

/// A set of primes, or its complement in the set of all primes.
class PiSet {
 public:
  PiSet() = default;
  explicit PiSet(std::set<std::uint64_t> primes, bool complement = false)
      : primes_(std::move(primes)), complement_(complement) {
    for (auto p : primes_)
      if (!is_prime(p)) throw SpecError(std::to_string(p) + " is not prime");
  }

  bool contains(std::uint64_t p) const { return complement_ != (primes_.count(p) != 0); }
  bool complement() const noexcept { return complement_; }
  const std::set<std::uint64_t>& listed() const noexcept { return primes_; }

  /// n is a pi-number.
  bool covers(std::uint64_t n) const {
    for (auto p : prime_divisors(n))
      if (!contains(p)) return false;
    return true;
  }

  /// Least prime outside pi; nullopt when pi contains every prime.
  std::optional<std::uint64_t> least_excluded() const {
    if (complement_) {
      if (primes_.empty()) return std::nullopt;
      return *primes_.begin();
    }
    for (std::uint64_t p = 2;; ++p)
      if (is_prime(p) && !primes_.count(p)) return p;
  }

  /// m(pi) = r for r in {2, 3}, r - 1 otherwise.
  unsigned width_bound() const {
    const auto r = least_excluded();
    if (!r) throw UndefinedError("pi contains every prime");
    return *r <= 3 ? static_cast<unsigned>(*r) : static_cast<unsigned>(*r - 1);
  }

  /// Least prime divisor s of n with s >= r (for beta when r does not divide n).
  std::optional<std::uint64_t> select_s(std::uint64_t r, std::uint64_t n) const {
    for (auto p : prime_divisors(n))
      if (p >= r) return p;
    return std::nullopt;
  }

  std::string str() const {
    std::string s = complement_ ? "not{" : "{";
    bool first = true;
    for (auto p : primes_) {
      s += (first ? "" : ",") + std::to_string(p);
      first = false;
    }
    return s + "}";
  }

 private:
  std::set<std::uint64_t> primes_;
  bool complement_ = false;
};

// ---------------------------------------------------------------------------
// Tuple enumeration

/// Number of multisets of size k from n items, saturating at `limit + 1`.
inline std::uint64_t multiset_count(std::uint64_t n, std::uint64_t k, std::uint64_t limit) {
  if (k == 0) return 1;
  if (n == 0) return 0;
  // C(n + k - 1, k), computed incrementally
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (n - 1 + i) / i;
    if (c > limit) return limit + 1;
  }
  return static_cast<std::uint64_t>(c);
}

/// Runs `test` over non-decreasing index tuples of length k in [0, n), in
/// lexicographic order, and returns the first tuple for which it is true.
/// With threads > 1 the outermost index is distributed; the result is the
/// same as the sequential one.
template <class Test>
std::optional<std::vector<std::size_t>> find_tuple(std::size_t n, std::size_t k, unsigned threads, Test&& test) {
  if (k == 0) {
    std::vector<std::size_t> empty;
    if (test(empty)) return empty;
    return std::nullopt;
  }
  if (n == 0) return std::nullopt;
  auto run_outer = [&](std::size_t first, const std::atomic<std::size_t>& best) -> std::optional<std::vector<std::size_t>> {
    std::vector<std::size_t> idx(k, first);
    while (true) {
      if (best.load() < first) return std::nullopt;
      if (test(idx)) return idx;
      // advance the inner positions, keeping idx[0] == first
      std::size_t pos = k;
      while (pos > 1 && idx[pos - 1] == n - 1) --pos;
      if (pos == 1) return std::nullopt;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < k; ++j) idx[j] = idx[pos - 1];
    }
  };
  std::atomic<std::size_t> best{n};
  std::optional<std::vector<std::size_t>> result;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t first = next.fetch_add(1);
      if (first >= n || first > best.load()) return;
      auto r = run_outer(first, best);
      if (r) {
        std::lock_guard<std::mutex> lock(mu);
        if (first < best.load()) {
          best = first;
          result = std::move(r);
        }
        return;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return result;
}

/// Subgroup test with early exit: generates <gens> and stops at the first
/// element for which `bad` holds. Returns true iff such an element exists.
template <GroupDomain D, class Bad>
bool subgroup_has(const D& d, const std::vector<typename D::Element>& gens, std::uint64_t cap, Bad&& bad) {
  auto c = generate(d, gens, cap, [&](const auto& e) { return !bad(e); });
  if (c.status == Status::overflow) throw CapExceeded("subgroup generation", cap);
  return c.status == Status::stopped;
}

// ---------------------------------------------------------------------------
// pi-radical

template <GroupDomain D>
struct RadicalResult {
  ElemSet<D> elements;
  std::vector<typename D::Element> class_reps;  // classes contained in the radical
  std::uint64_t order() const { return elements.size(); }
};

/// x lies in O_pi(G) iff its normal closure is a pi-group.
template <GroupDomain D>
bool in_pi_radical(const Group<D>& g, const typename D::Element& x, const PiSet& pi) {
  const auto& d = g.domain();
  auto n = normal_closure(d, g.gens(), x, g.cap(), [&](const auto& e) { return pi.covers(element_order(d, e)); });
  if (n.status == Status::overflow) throw CapExceeded("normal closure", g.cap());
  return n.complete();
}

template <GroupDomain D>
RadicalResult<D> pi_radical(const Group<D>& g, const PiSet& pi) {
  const auto& d = g.domain();
  RadicalResult<D> out;
  for (const auto& cls : all_classes(g)) {
    if (!in_pi_radical(g, cls.rep, pi)) continue;
    out.class_reps.push_back(cls.rep);
    for (const auto& y : cls.members) out.elements.insert(y);
  }
  // postconditions: a subgroup (closing the union adds nothing), and a pi-group
  const auto sub = generate_from(d, out.elements.items(), out.order() + 1);
  if (!sub.complete() || sub.size() != out.order())
    throw CertificationError("pi_radical: union of classes is not a subgroup");
  if (!pi.covers(out.order())) throw CertificationError("pi_radical: result is not a pi-group");
  return out;
}

// ---------------------------------------------------------------------------
// Conjugate-tuple criterion

enum class Verdict { holds, fails, no_violation_found };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::no_violation_found: return "no_violation_found";
  }
  return "?";
}

enum class Mode { exhaustive, randomized };

struct SearchOptions {
  Mode mode = Mode::exhaustive;
  std::uint64_t budget = 10'000'000;  // tuples (exhaustive) or samples (randomized)
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::uint64_t cap = kDefaultEnumCap;  // per generated subgroup
};

template <GroupDomain D>
struct BsResult {
  Verdict verdict = Verdict::holds;
  std::vector<typename D::Element> witness;  // a violating tuple, when verdict == fails
  std::uint64_t class_size = 0;
  Mode mode = Mode::exhaustive;
};

/// Whether every m-tuple of conjugates of x generates a pi-group.
/// Exhaustive mode needs multiset_count(|x^G|, m-1) <= budget.
template <GroupDomain D>
BsResult<D> bs_property(const Group<D>& g, const typename D::Element& x, unsigned m, const PiSet& pi,
                        const SearchOptions& opt = {}) {
  const auto& d = g.domain();
  BsResult<D> out;
  out.mode = opt.mode;
  if (m == 0) return out;
  const auto cls = g.conj_class(x);
  out.class_size = cls.size();
  auto not_pi = [&](const auto& e) { return !pi.covers(element_order(d, e)); };
  if (opt.mode == Mode::exhaustive) {
    if (multiset_count(cls.size(), m - 1, opt.budget) > opt.budget)
      throw CapExceeded("exhaustive tuple search for class of size " + std::to_string(cls.size()), opt.budget);
    auto hit = find_tuple(cls.size(), m - 1, opt.threads, [&](const std::vector<std::size_t>& idx) {
      std::vector<typename D::Element> gens{x};
      for (auto i : idx) gens.push_back(cls.members[i]);
      return subgroup_has(d, gens, opt.cap, not_pi);
    });
    if (hit) {
      out.verdict = Verdict::fails;
      out.witness.push_back(x);
      for (auto i : *hit) out.witness.push_back(cls.members[i]);
    }
    return out;
  }
  ProductReplacement<D> pr(d, g.gens(), opt.seed);
  for (std::uint64_t s = 0; s < opt.budget; ++s) {
    std::vector<typename D::Element> gens{x};
    for (unsigned j = 1; j < m; ++j) gens.push_back(conjugate(d, x, pr.next()));
    if (subgroup_has(d, gens, opt.cap, not_pi)) {
      out.verdict = Verdict::fails;
      out.witness = gens;
      return out;
    }
  }
  out.verdict = Verdict::no_violation_found;
  return out;
}

template <GroupDomain D>
struct ClassReport {
  typename D::Element rep;
  std::uint64_t size = 0;
  std::uint64_t element_order = 0;
  bool in_radical = false;
  BsResult<D> bs;
  /// in_radical == (bs verdict is not "fails"); for randomized searches a
  /// class outside the radical without a violation found is a mismatch.
  bool match = false;
};

template <GroupDomain D>
struct CriterionReport {
  PiSet pi;
  unsigned m = 0;
  std::vector<ClassReport<D>> classes;
  std::uint64_t mismatches() const {
    std::uint64_t n = 0;
    for (const auto& c : classes) n += !c.match;
    return n;
  }
};

/// For every class D of G: D inside O_pi(G) <=> every m-tuple from D
/// generates a pi-group. Classes whose tuple count exceeds
/// `exhaustive_limit` are sampled instead.
template <GroupDomain D>
CriterionReport<D> radical_criterion_verify(const Group<D>& g, const PiSet& pi, unsigned m,
                                           std::uint64_t exhaustive_limit = 10'000'000,
                                           std::uint64_t samples = 20'000, std::uint64_t seed = 0,
                                           unsigned threads = 1) {
  CriterionReport<D> rep;
  rep.pi = pi;
  rep.m = m;
  const auto classes = all_classes(g);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& cls = classes[i];
    ClassReport<D> cr;
    cr.rep = cls.rep;
    cr.size = cls.size();
    cr.element_order = cls.element_order;
    cr.in_radical = in_pi_radical(g, cls.rep, pi);
    SearchOptions opt;
    opt.threads = threads;
    opt.seed = derive_seed(seed, i);
    if (multiset_count(cls.size(), rep.m - 1, exhaustive_limit) <= exhaustive_limit) {
      opt.mode = Mode::exhaustive;
      opt.budget = exhaustive_limit;
    } else {
      opt.mode = Mode::randomized;
      opt.budget = samples;
    }
    cr.bs = bs_property(g, cls.rep, rep.m, pi, opt);
    cr.match = cr.in_radical == (cr.bs.verdict == Verdict::holds) ||
               (cr.in_radical && cr.bs.verdict == Verdict::no_violation_found);
    rep.classes.push_back(std::move(cr));
  }
  return rep;
}

/// The criterion with m = m(pi).
template <GroupDomain D>
CriterionReport<D> theorem2_verify(const Group<D>& g, const PiSet& pi, std::uint64_t exhaustive_limit = 10'000'000,
                                  std::uint64_t samples = 20'000, std::uint64_t seed = 0, unsigned threads = 1) {
  return radical_criterion_verify(g, pi, pi.width_bound(), exhaustive_limit, samples, seed, threads);
}

/// Baer-Suzuki: x lies in O_p(G) iff every pair of conjugates of x
/// generates a p-group.
template <GroupDomain D>
CriterionReport<D> baer_suzuki_verify(const Group<D>& g, std::uint64_t p, std::uint64_t exhaustive_limit = 10'000'000) {
  return radical_criterion_verify(g, PiSet({p}), 2, exhaustive_limit);
}

// ---------------------------------------------------------------------------
// beta and alpha

enum class Bound { exact, upper, lower };

inline const char* bound_name(Bound b) {
  switch (b) {
    case Bound::exact: return "exact";
    case Bound::upper: return "upper";
    case Bound::lower: return "lower";
  }
  return "?";
}

/// k conjugators g_1 = 1, g_2, ..., g_k of L with <x^{g_1}, ..., x^{g_k}> of
/// order witness_order. For `lower`, no witness was found below k within
/// the budget and `conjugators` is empty.
template <GroupDomain D>
struct BetaCertificate {
  unsigned k = 0;
  std::vector<typename D::Element> conjugators;
  std::uint64_t witness_order = 0;
  Bound bound = Bound::exact;
  bool exact() const noexcept { return bound == Bound::exact; }
};

inline constexpr unsigned kMaxTupleLength = 32;

namespace detail {

/// Shared search for beta and alpha. `good(gens)` decides a tuple.
template <GroupDomain D, class Good>
BetaCertificate<D> least_tuple(const Group<D>& l, const typename D::Element& x, const SearchOptions& opt,
                               std::uint64_t ambient_order, Good&& good) {
  using E = typename D::Element;
  const auto& d = l.domain();
  BetaCertificate<D> cert;
  auto finish = [&](unsigned k, std::vector<E> conjugators, Bound b) {
    cert.k = k;
    cert.bound = b;
    std::vector<E> gens;
    for (const auto& c : conjugators) gens.push_back(conjugate(d, x, c));
    const auto h = generate(d, gens, ambient_order + 1);
    if (!h.complete()) throw CapExceeded("witness subgroup", ambient_order);
    cert.witness_order = h.size();
    cert.conjugators = std::move(conjugators);
    return cert;
  };
  if (opt.mode == Mode::exhaustive) {
    const auto cls = conj_class(d, l.gens(), x, true);
    std::uint64_t spent = 0;
    for (unsigned k = 1; k <= kMaxTupleLength; ++k) {
      const std::uint64_t count = multiset_count(cls.size(), k - 1, opt.budget);
      if (spent + count > opt.budget) {
        cert.k = k;
        cert.bound = Bound::lower;
        return cert;
      }
      spent += count;
      auto hit = find_tuple(cls.size(), k - 1, opt.threads, [&](const std::vector<std::size_t>& idx) {
        std::vector<E> gens{x};
        for (auto i : idx) gens.push_back(cls.members[i]);
        return good(gens);
      });
      if (hit) {
        std::vector<E> conj{d.identity()};
        for (auto i : *hit) conj.push_back(cls.conjugators[i]);
        return finish(k, std::move(conj), Bound::exact);
      }
    }
    throw CapExceeded("tuple length", kMaxTupleLength);
  }
  for (unsigned k = 1; k <= kMaxTupleLength; ++k) {
    ProductReplacement<D> pr(d, l.gens(), derive_seed(opt.seed, k));
    const std::uint64_t tries = k == 1 ? 1 : opt.budget;
    for (std::uint64_t s = 0; s < tries; ++s) {
      std::vector<E> conj{d.identity()};
      for (unsigned j = 1; j < k; ++j) conj.push_back(pr.next());
      std::vector<E> gens;
      for (const auto& c : conj) gens.push_back(conjugate(d, x, c));
      if (good(gens)) return finish(k, std::move(conj), k == 1 ? Bound::exact : Bound::upper);
    }
  }
  throw CapExceeded("randomized tuple search", opt.budget);
}

}  // namespace detail

/// Largest normal closure computed up front to rule out undefined beta.
inline constexpr std::uint64_t kClosureProbeCap = 200'000;

/// beta_r(x, L): least k such that some k L-conjugates of x generate a
/// subgroup of order divisible by r. Undefined when r does not divide |L|.
template <GroupDomain D>
BetaCertificate<D> beta(const Group<D>& l, const typename D::Element& x, std::uint64_t r,
                        const SearchOptions& opt = {}) {
  if (!is_prime(r)) throw SpecError(std::to_string(r) + " is not prime");
  if (l.order() % r != 0)
    throw UndefinedError("beta_" + std::to_string(r) + " is undefined: " + std::to_string(r) + " does not divide |" +
                         l.name() + "| = " + std::to_string(l.order()));
  const auto& d = l.domain();
  const std::uint64_t bound = opt.cap;
  // all conjugates of x lie in its normal closure; check it when small
  const auto nc = normal_closure_info(d, l.gens(), x, std::min<std::uint64_t>(bound, kClosureProbeCap));
  if (nc.order && nc.order % r != 0)
    throw UndefinedError("beta_" + std::to_string(r) + " is undefined: the conjugates of x generate a subgroup of order " +
                         std::to_string(nc.order));
  return detail::least_tuple(l, x, opt, bound, [&](const std::vector<typename D::Element>& gens) {
    // Cauchy: r divides |H| iff H has an element of order divisible by r
    return subgroup_has(d, gens, bound, [&](const auto& e) { return element_order(d, e) % r == 0; });
  });
}

/// alpha(x, L): least k such that some k L-conjugates of x generate <L, x>.
template <GroupDomain D>
BetaCertificate<D> alpha(const Group<D>& l, const typename D::Element& x, const SearchOptions& opt = {}) {
  const auto& d = l.domain();
  std::vector<typename D::Element> amb = l.gens();
  amb.push_back(x);
  const auto target = subgroup_order(d, amb, opt.cap);
  if (!target) throw CapExceeded("order of <L, x>", opt.cap);
  const auto nc = normal_closure_info(d, l.gens(), x, *target);
  if (nc.order != *target)
    throw UndefinedError("alpha is undefined: the conjugates of x generate a proper subgroup of <L, x>");
  return detail::least_tuple(l, x, opt, *target, [&](const std::vector<typename D::Element>& gens) {
    std::uint64_t seen = 0;
    auto c = generate(d, gens, *target, [&](const auto&) { return ++seen < *target; });
    return c.status == Status::stopped || (c.complete() && c.size() == *target);
  });
}

/// Re-derives witness_order from the certificate alone.
template <GroupDomain D>
bool recheck(const Group<D>& l, const typename D::Element& x, const BetaCertificate<D>& cert,
             std::uint64_t cap = kDefaultEnumCap) {
  if (cert.bound == Bound::lower) return true;
  const auto& d = l.domain();
  if (cert.conjugators.size() != cert.k) return false;
  std::vector<typename D::Element> gens;
  for (const auto& c : cert.conjugators) {
    if (!l.contains(c)) return false;
    gens.push_back(conjugate(d, x, c));
  }
  const auto o = subgroup_order(d, gens, cap);
  return o && *o == cert.witness_order;
}

template <GroupDomain D>
struct EstimResult {
  unsigned beta_x = 0;
  unsigned beta_y = 0;
  unsigned k = 0;
  bool holds = false;
};

/// For x in <y^{g_1}, ..., y^{g_k}>: beta_r(x) <= k * beta_r(y).
template <GroupDomain D>
EstimResult<D> estim_check(const Group<D>& l, const typename D::Element& x, const typename D::Element& y,
                           const std::vector<typename D::Element>& conjugators, std::uint64_t r,
                           const SearchOptions& opt = {}) {
  const auto& d = l.domain();
  std::vector<typename D::Element> gens;
  for (const auto& g : conjugators) gens.push_back(conjugate(d, y, g));
  const auto h = generate(d, gens, opt.cap);
  if (!h.complete()) throw CapExceeded("estim membership closure", opt.cap);
  if (!h.contains(x)) throw SpecError("estim_check: x is not in the subgroup generated by the conjugates of y");
  SearchOptions ex = opt;
  ex.mode = Mode::exhaustive;
  EstimResult<D> res;
  res.k = static_cast<unsigned>(conjugators.size());
  const auto bx = beta(l, x, r, ex);
  const auto by = beta(l, y, r, ex);
  if (!bx.exact() || !by.exact()) throw CapExceeded("exact beta for estim_check", opt.budget);
  res.beta_x = bx.k;
  res.beta_y = by.k;
  res.holds = res.beta_x <= res.k * res.beta_y;
  return res;
}

}  // namespace bsw
