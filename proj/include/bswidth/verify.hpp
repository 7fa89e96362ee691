#pragma once

// Reproduction suites. Each criterion rebuilds its groups from specs,
// recomputes the published values and compares exactly; wall-clock
// budgets are part of the verdict. Shared by `bswidth verify` and the
// acceptance test binary.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bswidth/constructions.hpp"
#include "bswidth/core.hpp"
#include "bswidth/groupspec.hpp"
#include "bswidth/invariants.hpp"
#include "bswidth/io.hpp"
#include "bswidth/kinds.hpp"
#include "bswidth/structconst.hpp"

namespace bsw::verify {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id = 0;
  std::string title;
  double budget_seconds = 0;
  std::vector<Check> checks;
  double seconds = 0;
  std::string error;  // computation aborted

  bool pass() const {
    if (!error.empty() || seconds > budget_seconds || checks.empty()) return false;
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
};

struct Options {
  std::filesystem::path data_dir;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

namespace detail {

inline Check expect_eq(const std::string& name, std::uint64_t got, std::uint64_t want) {
  return {name, got == want, "got " + std::to_string(got) + ", want " + std::to_string(want)};
}

inline Check expect(const std::string& name, bool ok, const std::string& detail = {}) { return {name, ok, detail}; }

inline std::string multiset_str(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

inline Check expect_multiset(const std::string& name, std::vector<std::uint64_t> got, std::vector<std::uint64_t> want) {
  const std::string g = multiset_str(got), w = multiset_str(want);
  return {name, g == w, "got " + g + ", want " + w};
}

inline Criterion run(int id, const std::string& title, double budget, const std::function<void(Criterion&)>& body) {
  Criterion c;
  c.id = id;
  c.title = title;
  c.budget_seconds = budget;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.error = e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

/// Per-part time limit inside a criterion.
class PartTimer {
 public:
  PartTimer(Criterion& c, std::string name, double limit)
      : c_(c), name_(std::move(name)), limit_(limit), t0_(std::chrono::steady_clock::now()) {}
  PartTimer(const PartTimer&) = delete;
  ~PartTimer() {
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    std::ostringstream os;
    os.precision(3);
    os << s << " s of " << limit_ << " s";
    c_.checks.push_back({name_ + " time", s <= limit_, os.str()});
  }

 private:
  Criterion& c_;
  std::string name_;
  double limit_;
  std::chrono::steady_clock::time_point t0_;
};

inline RefTable ref(const Options& o, const std::string& spec) {
  auto t = io::find_ref_table(o.data_dir, spec);
  if (!t) throw SpecError("no reference table for " + spec + " in " + o.data_dir.string());
  return *t;
}

inline constexpr std::uint64_t kFullLimit = 200'000;
inline constexpr std::uint64_t kSearchBudget = 200'000;

/// Pair counts by label inside one extension.
struct LabelledGroup {
  MatrixExtension ext;
  RefTable table;
  ClassFinder<MatrixDomain> finder;

  LabelledGroup(MatrixExtension e, RefTable t, std::uint64_t seed)
      : ext(std::move(e)), table(std::move(t)),
        finder(ext.group, kFullLimit, kSearchBudget, seed,
               ext.aut ? std::vector<ExtElem>{*ext.aut} : std::vector<ExtElem>{}) {}
  LabelledGroup(const LabelledGroup&) = delete;

  std::uint64_t m(const std::string& a, const std::string& b, const std::string& c, unsigned threads) {
    const auto& ca = finder.find(table, a);
    const auto& cb = finder.find(table, b);
    const auto& cc = finder.find(table, c);
    return count_pairs(ext.group.domain(), ca, cb, cc.rep, threads);
  }

  /// For fully classified groups: every reference label matched one to one.
  Check labels_check() const {
    if (!finder.complete()) return expect(ext.spec.str() + " labels", true, "class list not complete; fingerprints matched on demand");
    std::vector<ConjClass<MatrixDomain>> cls(finder.classes().begin(), finder.classes().end());
    const Labeling lab = atlas_match(cls, ext.group.order(), table);
    for (const auto& g : lab.groups)
      if (!g.labels.empty() && !g.unique())
        return expect(ext.spec.str() + " labels", false, "label " + g.labels.front() + " not matched uniquely");
    return expect(ext.spec.str() + " labels", true, "all reference labels matched uniquely");
  }
};

inline std::unique_ptr<LabelledGroup> labelled(const Options& o, const std::string& spec) {
  return std::make_unique<LabelledGroup>(build_matrix_group(parse_group_spec(spec)), ref(o, spec), o.seed);
}

template <GroupDomain D>
std::vector<ConjClass<D>> classes_of_order(const Group<D>& g, std::uint64_t t) {
  std::vector<ConjClass<D>> out;
  for (auto& c : all_classes(g))
    if (c.element_order == t) out.push_back(std::move(c));
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// 1. Structure constants

inline Criterion structure_constants(const Options& o) {
  using namespace detail;
  return run(1, "structure constants", 36 * 60, [&](Criterion& c) {
    {
      PartTimer t(c, "U3(3).2", 2 * 60);
      auto g = labelled(o, "PSU(3,3):phi1");
      c.checks.push_back(g->labels_check());
      c.checks.push_back(expect_eq("U3(3).2 m(2A,2A,3B)", g->m("2A", "2A", "3B", o.threads), 3));
      c.checks.push_back(expect_eq("U3(3).2 m(2B,2B,3A)", g->m("2B", "2B", "3A", o.threads), 36));
    }
    {
      PartTimer t(c, "U4(2).2", 2 * 60);
      auto g = labelled(o, "PSU(4,2):phi1");
      c.checks.push_back(g->labels_check());
      c.checks.push_back(expect_eq("U4(2).2 m(2A,2A,2B)", g->m("2A", "2A", "2B", o.threads), 2));
      c.checks.push_back(expect_eq("U4(2).2 m(2B,2B,5A)", g->m("2B", "2B", "5A", o.threads), 5));
      c.checks.push_back(expect_eq("U4(2).2 m(2C,2C,5A)", g->m("2C", "2C", "5A", o.threads), 5));
      c.checks.push_back(expect_eq("U4(2).2 m(2D,2D,2B)", g->m("2D", "2D", "2B", o.threads), 2));
    }
    {
      PartTimer t(c, "U4(3).2", 2 * 60);
      // both graph-type extensions of U4(3) share one certified base group
      const GroupSpec s1 = parse_group_spec("PSU(4,3):phi1");
      const GroupSpec s2 = parse_group_spec("PSU(4,3):diagphi1");
      const MatrixGroup base = matrix_group(s1.base);
      const ExtElem phi = cons::canonical_aut(cons::AutKind::phi, 1, base);
      const ExtElem dphi = base.group.domain().mul(diagonal_aut(base), phi);
      LabelledGroup g1(extend_by(s1, base, phi, s1.str()), ref(o, s1.str()), o.seed);
      LabelledGroup g2(extend_by(s2, base, dphi, s2.str()), ref(o, s2.str()), o.seed);
      c.checks.push_back(expect_eq("U4(3).2 m(2D,2D,2A)", g1.m("2D", "2D", "2A", o.threads), 2));
      c.checks.push_back(expect_eq("U4(3).2 m(2A,2A,5A)", g1.m("2A", "2A", "5A", o.threads), 5));
      c.checks.push_back(expect_multiset("U4(3).2 {m(2E,2E,5A), m(2F,2F,5A)}",
                                         {g1.m("2E", "2E", "5A", o.threads), g2.m("2F", "2F", "5A", o.threads)},
                                         {5, 5}));
    }
    {
      PartTimer t(c, "L4(3).2", 30 * 60);
      auto g0 = labelled(o, "PSL(4,3):graph0");
      auto gp = labelled(o, "PSL(4,3):graph+");
      auto gm = labelled(o, "PSL(4,3):graph-");
      c.checks.push_back(expect_eq("L4(3).2 m(2A,2A,5A)", g0->m("2A", "2A", "5A", o.threads), 5));
      c.checks.push_back(expect_eq("L4(3).2 m(2D,2D,2A)", g0->m("2D", "2D", "2A", o.threads), 2));
      c.checks.push_back(expect_multiset("L4(3).2 {m(2F,2F,5A), m(2G,2G,5A)}",
                                         {gp->m("2F", "2F", "5A", o.threads), gm->m("2G", "2G", "5A", o.threads)},
                                         {20, 20}));
    }
  });
}

// ---------------------------------------------------------------------------
// 2. beta values

inline Criterion beta_values(const Options& o) {
  using namespace detail;
  return run(2, "beta values", 11 * 60, [&](Criterion& c) {
    auto psl2 = std::make_unique<PartTimer>(c, "beta_3 PSL(2,q)", 60);
    for (std::uint64_t q : {4, 5, 7, 8, 13}) {
      const std::string qs = std::to_string(q);
      const auto l = build_matrix_group(parse_group_spec("PSL(2," + qs + ")"));
      const auto g = build_matrix_group(parse_group_spec("PGL(2," + qs + ")"));
      for (const auto& x : classes_of_order(g.group, 2)) {
        const auto b = beta(l.group, x.rep, 3);
        c.checks.push_back(expect_eq("beta_3 PSL(2," + qs + ") involution, class size " + std::to_string(x.size()),
                                     b.exact() ? b.k : 0, 2));
      }
    }
    psl2.reset();
    {
      PartTimer t(c, "beta_3 A5", 10);
      PermDomain d(5);
      const auto a5 = perm_group(parse_group_spec("Alt(5)").base);
      const auto b = beta(a5, d.cycles({{1, 2}}), 3);
      c.checks.push_back(expect_eq("beta_3 A5 transposition", b.exact() ? b.k : 0, 2));
    }
    {
      PartTimer t(c, "beta_3 Aut(A6)", 5 * 60);
      const auto l = build_matrix_group(parse_group_spec("PSL(2,9)"));
      const auto s6 = build_matrix_group(parse_group_spec("PSL(2,9):phi1"));
      const auto aut = build_matrix_group(parse_group_spec("PGL(2,9):phi1"));
      for (const auto& x : classes_of_order(aut.group, 2)) {
        const bool s6_type = contains(s6, x.rep);
        const auto b = beta(l.group, x.rep, 3);
        const std::string name = std::string("beta_3 Aut(A6) involution, ") + (s6_type ? "Sym(6)" : "other") +
                                 " type, class size " + std::to_string(x.size());
        if (s6_type)
          c.checks.push_back(expect(name, b.exact() && b.k <= 2, "got " + std::to_string(b.k) + ", want <= 2"));
        else
          c.checks.push_back(expect_eq(name, b.exact() ? b.k : 0, 3));
      }
    }
    {
      PartTimer t(c, "beta_5 PSp(4,3)", 5 * 60);
      const auto l = build_matrix_group(parse_group_spec("PSp(4,3)"));
      const auto g = build_matrix_group(parse_group_spec("PSp(4,3):diag"));
      std::uint64_t i = 0;
      for (const auto& x : classes_of_order(g.group, 2)) {
        SearchOptions opt;
        opt.mode = Mode::randomized;
        opt.budget = 2000;
        opt.seed = derive_seed(o.seed, i++);
        const auto b = beta(l.group, x.rep, 5, opt);
        const bool ok = b.bound != Bound::lower && b.k <= 4 && recheck(l.group, x.rep, b);
        c.checks.push_back(expect("beta_5 PSp(4,3) involution, class size " + std::to_string(x.size()), ok,
                                  "upper bound " + std::to_string(b.k) + ", certificate rechecked"));
      }
    }
  });
}

// ---------------------------------------------------------------------------
// 3. Baer-Suzuki

inline Criterion baer_suzuki(const Options&) {
  using namespace detail;
  return run(3, "Baer-Suzuki p-theorem", 2 * 60, [&](Criterion& c) {
    auto check = [&](const auto& g) {
      for (auto p : prime_divisors(g.order())) {
        const auto rep = baer_suzuki_verify(g, p);
        std::uint64_t randomized = 0;
        for (const auto& cl : rep.classes) randomized += cl.bs.mode == Mode::randomized;
        c.checks.push_back(expect(g.name() + " p=" + std::to_string(p), rep.mismatches() == 0 && randomized == 0,
                                  std::to_string(rep.mismatches()) + " mismatches over " +
                                      std::to_string(rep.classes.size()) + " classes"));
      }
    };
    check(perm_group(parse_group_spec("Sym(4)").base));
    check(build_matrix_group(parse_group_spec("SL(2,3)")).group);
    check(perm_group(parse_group_spec("Alt(5)").base));
    check(perm_group(parse_group_spec("Sym(5)").base));
    check(build_matrix_group(parse_group_spec("PSL(2,7)")).group);
  });
}

// ---------------------------------------------------------------------------
// 4. pi-radical criterion

inline Criterion pi_radical(const Options& o) {
  using namespace detail;
  return run(4, "pi-radical criterion", 30 * 60, [&](Criterion& c) {
    auto check = [&](const auto& g, std::set<std::uint64_t> primes) {
      const PiSet pi(primes);
      const auto rep = theorem2_verify(g, pi, 10'000'000, 20'000, o.seed, o.threads);
      c.checks.push_back(expect(g.name() + " pi=" + pi.str() + " m=" + std::to_string(rep.m), rep.mismatches() == 0,
                                std::to_string(rep.mismatches()) + " mismatches over " +
                                    std::to_string(rep.classes.size()) + " classes"));
    };
    const auto l27 = build_matrix_group(parse_group_spec("PSL(2,7)"));
    for (auto pi : std::vector<std::set<std::uint64_t>>{{2, 3}, {2, 7}, {3, 7}}) check(l27.group, pi);
    check(build_matrix_group(parse_group_spec("PSL(2,11)")).group, {2, 3});
    const auto prod = direct_product(perm_group(parse_group_spec("Alt(5)").base),
                                     perm_group(parse_group_spec("Sym(4)").base));
    check(prod, {2, 3});
  });
}

// ---------------------------------------------------------------------------
// 5. Constructions

inline std::vector<std::vector<unsigned>> partitions(unsigned n, unsigned max_part = 0) {
  if (max_part == 0 || max_part > n) max_part = n;
  if (n == 0) return {{}};
  std::vector<std::vector<unsigned>> out;
  for (unsigned first = max_part; first >= 1; --first)
    for (auto rest : partitions(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(rest);
    }
  return out;
}

inline Criterion constructions(const Options&) {
  using namespace detail;
  return run(5, "construction identities", 5 * 60, [&](Criterion& c) {
    for (std::uint64_t q : {5, 7, 9, 11, 13, 25, 27}) {
      const auto f = gf::field_of_order(q);
      std::uint64_t ok = 0;
      std::string failure;
      for (gf::Code b = 1; b < f->q(); ++b) {
        try {
          const auto r = cons::sl2_pair(f, b);
          ok += r.contains_minus_one;
        } catch (const CertificationError& e) {
          failure = e.what();
        }
      }
      c.checks.push_back(expect_eq("sl2_pair q=" + std::to_string(q) + " all beta" + (failure.empty() ? "" : ": " + failure),
                                   ok, q - 1));
    }
    for (std::uint64_t q : {2, 3, 5})
      for (unsigned n : {5u, 7u})
        for (const auto& part : partitions(n)) {
          std::string name = "su_unipotent q=" + std::to_string(q) + " partition";
          for (auto p : part) name += " " + std::to_string(p);
          try {
            const auto u = cons::su_unipotent(q, part);
            const bool ok = cons::f_span_isotropic_invariant(u) && cons::action_equations_hold(u, part);
            c.checks.push_back(expect(name, ok, "order " + std::to_string(u.order)));
          } catch (const CertificationError& e) {
            c.checks.push_back(expect(name, false, e.what()));
          }
        }
    for (auto [n, q] : std::vector<std::pair<unsigned, std::uint64_t>>{{4, 3}, {4, 5}, {6, 3}})
      for (auto delta : {cons::Delta::zero, cons::Delta::plus, cons::Delta::minus}) {
        const std::string name = "graph_involution n=" + std::to_string(n) + " q=" + std::to_string(q) + " delta=" +
                                 cons::delta_name(delta);
        try {
          const auto g = cons::graph_involution(n, q, delta);
          MatrixDomain d(gf::field_of_order(q), n, true);
          const bool ok = !(g.elem == d.identity()) && d.mul(g.elem, g.elem) == d.identity();
          c.checks.push_back(expect(name, ok, "order 2 modulo scalars"));
        } catch (const CertificationError& e) {
          c.checks.push_back(expect(name, false, e.what()));
        }
      }
  });
}

// ---------------------------------------------------------------------------
// 6. alpha

inline Criterion alpha_values(const Options&) {
  using namespace detail;
  return run(6, "alpha values", 2 * 60, [&](Criterion& c) {
    const auto l = build_matrix_group(parse_group_spec("PSL(2,7)"));
    for (const auto& x : classes_of_order(l.group, 3)) {
      const auto a = alpha(l.group, x.rep);
      c.checks.push_back(expect_eq("alpha PSL(2,7) order 3", a.exact() ? a.k : 0, 2));
    }
    for (const auto& x : classes_of_order(l.group, 2)) {
      const auto a = alpha(l.group, x.rep);
      c.checks.push_back(expect_eq("alpha PSL(2,7) involution", a.exact() ? a.k : 0, 3));
    }
    const auto l5 = build_matrix_group(parse_group_spec("PSL(2,5)"));
    const auto g5 = build_matrix_group(parse_group_spec("PGL(2,5)"));
    for (const auto& x : classes_of_order(g5.group, 2)) {
      if (contains(l5.base, x.rep)) continue;
      const auto a = alpha(l5.group, x.rep);
      c.checks.push_back(expect_eq("alpha PGL(2,5) diagonal involution", a.exact() ? a.k : 0, 4));
    }
  });
}

// ---------------------------------------------------------------------------
// 7. Properties

inline Check field_axioms(std::uint64_t q) {
  const auto fp = gf::field_of_order(q);
  const gf::Field& f = *fp;
  const gf::Code n = f.q();
  for (gf::Code a = 0; a < n; ++a) {
    if (f.add(a, 0) != a || f.mul(a, 1) != a || f.add(a, f.neg(a)) != 0) return detail::expect("GF(" + std::to_string(q) + ")", false, "identity/negation");
    if (a != 0 && f.mul(a, f.inv(a)) != 1) return detail::expect("GF(" + std::to_string(q) + ")", false, "inverse");
    for (gf::Code b = 0; b < n; ++b) {
      if (f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a) || f.mul(a, b) != f.mul_reference(a, b) ||
          f.add(a, b) != f.add_reference(a, b))
        return detail::expect("GF(" + std::to_string(q) + ")", false, "commutativity or reference mismatch");
      for (gf::Code c = 0; c < n; ++c) {
        if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c)) || f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c)) ||
            f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c)))
          return detail::expect("GF(" + std::to_string(q) + ")", false, "associativity or distributivity");
      }
    }
  }
  return detail::expect("GF(" + std::to_string(q) + ") axioms", true, "exhaustive");
}

inline Criterion properties(const Options& o) {
  using namespace detail;
  return run(7, "property suites", 10 * 60, [&](Criterion& c) {
    for (std::uint64_t q = 2; q <= 81; ++q)
      if (prime_power(q).first) c.checks.push_back(field_axioms(q));

    std::mt19937_64 rng(o.seed);
    auto lagrange = [&](const auto& g) {
      const std::uint64_t n = g.order();
      bool ok = true;
      std::string why;
      for (const auto& cl : all_classes(g)) {
        if (cl.size() * centralizer_order(g, cl.rep) != n) {
          ok = false;
          why = "orbit-stabilizer fails";
        }
      }
      const auto& els = g.elements().elements();
      for (int i = 0; i < 30; ++i) {
        const auto& a = els[rng() % els.size()];
        const auto& b = els[rng() % els.size()];
        const auto h = subgroup_order(g.domain(), {a, b}, n);
        if (!h || n % *h != 0) {
          ok = false;
          why = "subgroup order does not divide |G|";
        }
      }
      c.checks.push_back(expect("Lagrange/orbit-stabilizer " + g.name(), ok, why));
    };
    lagrange(build_matrix_group(parse_group_spec("PSL(2,7)")).group);
    lagrange(build_matrix_group(parse_group_spec("PSU(3,3)")).group);
    lagrange(build_matrix_group(parse_group_spec("PSp(4,3)")).group);
    lagrange(build_matrix_group(parse_group_spec("PGL(2,9):phi1")).group);
    lagrange(perm_group(parse_group_spec("Sym(5)").base));
    lagrange(direct_product(perm_group(parse_group_spec("Alt(5)").base), perm_group(parse_group_spec("Sym(4)").base)));

    {
      bool ok = true;
      for (std::uint64_t q : {3, 4, 5, 9, 25}) {
        const auto fp = gf::field_of_order(q);
        for (unsigned n = 2; n <= 4; ++n)
          for (int t = 0; t < 50; ++t) {
            mat::Mat m = mat::zero(n);
            for (unsigned i = 0; i < n * n; ++i) m.e[i] = static_cast<std::uint8_t>(rng() % q);
            if (mat::det(*fp, m) == 0) continue;
            const gf::Code l = static_cast<gf::Code>(1 + rng() % (q - 1));
            const auto c1 = mat::canon(*fp, m);
            ok &= c1 == mat::canon(*fp, mat::scale(*fp, l, m)) && c1 == mat::canon(*fp, c1);
          }
      }
      c.checks.push_back(expect("canon scalar invariance", ok, "random invertible matrices"));
    }

    for (const std::string s : {"PSU(3,3)", "PSU(4,2)"}) {
      const auto g = build_matrix_group(parse_group_spec(s)).group;
      const auto cls = all_classes(g);
      bool ok = true;
      for (const auto& a : cls)
        for (const auto& b : cls) ok &= sum_rule_check(g.domain(), a, b, cls, g.order());
      c.checks.push_back(expect("sum rule " + s, ok, "all pairs of " + std::to_string(cls.size()) + " classes"));
    }

    {
      bool ok = true;
      std::uint64_t pairs = 0;
      auto compare = [&](const auto& l, const auto& x) {
        const auto a = alpha(l, x);
        for (auto r : prime_divisors(l.order())) {
          const auto b = beta(l, x, r);
          if (a.exact() && b.exact()) {
            ok &= b.k <= a.k;
            ++pairs;
          }
        }
      };
      const auto l27 = build_matrix_group(parse_group_spec("PSL(2,7)"));
      for (const auto& x : all_classes(l27.group))
        if (x.element_order > 1) compare(l27.group, x.rep);
      const auto l5 = build_matrix_group(parse_group_spec("PSL(2,5)"));
      for (const auto& x : all_classes(build_matrix_group(parse_group_spec("PGL(2,5)")).group))
        if (x.element_order > 1) compare(l5.group, x.rep);
      c.checks.push_back(expect("beta <= alpha", ok && pairs > 0, std::to_string(pairs) + " exact pairs"));
    }

    auto monotone = [&](const auto& g) {
      const auto primes = prime_divisors(g.order());
      bool ok = true;
      for (std::uint64_t mask = 1; mask + 1 < (1u << primes.size()); ++mask) {
        std::set<std::uint64_t> pi;
        for (std::size_t i = 0; i < primes.size(); ++i)
          if (mask >> i & 1) pi.insert(primes[i]);
        for (const auto& cl : all_classes(g)) {
          bool prev_holds = true;
          for (unsigned m = 1; m <= 4; ++m) {
            const bool holds = bs_property(g, cl.rep, m, PiSet(pi)).verdict == Verdict::holds;
            if (holds && !prev_holds) ok = false;
            prev_holds = holds;
          }
        }
      }
      c.checks.push_back(expect("bs monotonicity " + g.name(), ok, "m = 1..4, every proper pi"));
    };
    monotone(perm_group(parse_group_spec("Sym(4)").base));
    monotone(perm_group(parse_group_spec("Alt(5)").base));
  });
}

// ---------------------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"structconst", "beta", "baer-suzuki", "pi-radical",
                                                 "constructions", "alpha", "properties"};
  return names;
}

/// Runs one suite by name, or all of them for "all".
inline std::vector<Criterion> run_suite(const std::string& name, const Options& o) {
  using Fn = Criterion (*)(const Options&);
  static const std::vector<Fn> fns = {structure_constants, beta_values, baer_suzuki, pi_radical,
                                      constructions,       alpha_values, properties};
  std::vector<Criterion> out;
  const auto& names = suite_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (name == "all" || name == names[i]) out.push_back(fns[i](o));
  if (out.empty()) throw SpecError("unknown suite '" + name + "'");
  return out;
}

}  // namespace bsw::verify
