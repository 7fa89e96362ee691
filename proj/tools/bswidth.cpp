// bswidth: command-line front end.
//
//   bswidth order PSU(3,3)
//   bswidth classes PSU(3,3):phi1
//   bswidth structconst PSU(3,3):phi1 2A 2A 3B
//   bswidth beta PSL(2,7) --class 2A --r 3
//   bswidth verify structconst
//
// Exit codes: 0 success, 1 computational failure or bad input, 2 a
// verification mismatch.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bswidth/constructions.hpp"
#include "bswidth/core.hpp"
#include "bswidth/groupspec.hpp"
#include "bswidth/invariants.hpp"
#include "bswidth/io.hpp"
#include "bswidth/kinds.hpp"
#include "bswidth/structconst.hpp"
#include "bswidth/verify.hpp"

#ifndef BSWIDTH_DATA_DIR
#define BSWIDTH_DATA_DIR "data/atlas"
#endif

namespace {

using namespace bsw;
using ojson = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitMismatch = 2;

struct Globals {
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;  // 0: per-command default
  std::uint64_t cap_order = 2'000'000;
  unsigned threads = 1;
  std::string cache_dir;
  std::string format = "table";
  std::string data_dir = BSWIDTH_DATA_DIR;
  std::uint64_t budget_or(std::uint64_t fallback) const { return budget ? budget : fallback; }
};

// ---------------------------------------------------------------------------
// Output

std::string cell(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : " ") + cell(e);
    return s;
  }
  if (v.is_null()) return "-";
  return v.dump();
}

void print_rows(const ojson& rows, std::ostream& os, const std::string& indent) {
  std::vector<std::string> cols;
  for (const auto& r : rows)
    for (const auto& [k, v] : r.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    width[c] = cols[c].size();
    for (const auto& r : rows) width[c] = std::max(width[c], r.contains(cols[c]) ? cell(r[cols[c]]).size() : 1);
  }
  auto line = [&](auto get) {
    os << indent;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const std::string s = get(c);
      os << s;
      if (c + 1 < cols.size()) os << std::string(width[c] - s.size() + 2, ' ');
    }
    os << "\n";
  };
  line([&](std::size_t c) { return cols[c]; });
  for (const auto& r : rows) line([&](std::size_t c) { return r.contains(cols[c]) ? cell(r[cols[c]]) : "-"; });
}

void print_table(const ojson& j, std::ostream& os, const std::string& indent = "") {
  for (const auto& [k, v] : j.items()) {
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << indent << k << ":\n";
      print_rows(v, os, indent + "  ");
    } else if (v.is_object()) {
      os << indent << k << ":\n";
      print_table(v, os, indent + "  ");
    } else {
      os << indent << k << ": " << cell(v) << "\n";
    }
  }
}

void emit(const Globals& g, const ojson& j) {
  if (g.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    print_table(j, std::cout);
}

// ---------------------------------------------------------------------------
// Groups

/// A matrix group with its optional automorphism, or a permutation group.
using Loaded = std::variant<MatrixExtension, Group<PermDomain>>;

GroupSpec parse_or_explain(const std::string& text) {
  try {
    return parse_group_spec(text);
  } catch (const ParseError& e) {
    // position is 0-based; show it under the input
    throw SpecError(std::string(e.what()) + "\n  " + text + "\n  " + std::string(e.position(), ' ') + "^");
  }
}

Loaded load(const std::string& text, const Globals& g) {
  const GroupSpec spec = parse_or_explain(text);
  if (is_perm_kind(spec.base.kind)) return perm_group(spec.base);
  const std::uint64_t certify = std::max<std::uint64_t>(kDefaultCertifyCap, g.cap_order);
  return build_matrix_group(spec, certify, std::max<std::uint64_t>(g.cap_order, kDefaultCertifyCap));
}

/// Permutation group from 1-based image lists: "2,1,3;1,3,2".
Group<PermDomain> load_gens(unsigned degree, const std::string& gens) {
  std::vector<std::vector<unsigned>> images;
  std::stringstream ss(gens);
  std::string perm;
  while (std::getline(ss, perm, ';')) {
    std::vector<unsigned> im;
    std::stringstream ps(perm);
    std::string v;
    while (std::getline(ps, v, ',')) im.push_back(static_cast<unsigned>(std::stoul(v)));
    images.push_back(im);
  }
  return perm_group_from(degree, images, "<" + gens + ">");
}

template <GroupDomain D>
std::string element_text(const D& d, const typename D::Element& x) {
  return d.encode(x);
}

PiSet parse_pi(const std::string& text) {
  std::set<std::uint64_t> ps;
  std::stringstream ss(text);
  std::string v;
  while (std::getline(ss, v, ',')) {
    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
      throw SpecError("bad prime list '" + text + "'");
    ps.insert(std::stoull(v));
  }
  if (ps.empty()) throw SpecError("empty prime list");
  return PiSet(ps);
}

// ---------------------------------------------------------------------------
// Classes and labels

template <GroupDomain D>
void sort_classes(std::vector<ConjClass<D>>& cls, const D& d) {
  std::sort(cls.begin(), cls.end(), [&](const auto& a, const auto& b) {
    if (a.element_order != b.element_order) return a.element_order < b.element_order;
    if (a.size() != b.size()) return a.size() < b.size();
    return d.encode(a.rep) < d.encode(b.rep);
  });
}

/// Label per class index: unique label, "X|Y" for an ambiguous group,
/// empty when the reference has nothing for it.
std::vector<std::string> labels_for(const Labeling& lab, std::size_t n) {
  std::vector<std::string> out(n);
  for (const auto& g : lab.groups) {
    if (g.labels.empty()) continue;
    std::string joined;
    for (const auto& l : g.labels) joined += (joined.empty() ? "" : "|") + l;
    if (g.mismatch()) joined += "?";
    for (auto i : g.classes) out[i] = joined;
  }
  return out;
}

/// order:size, or a label from the reference table of `spec_text`.
template <GroupDomain D>
const ConjClass<D>& select_class(ClassFinder<D>& finder, const std::string& selector, const std::string& spec_text,
                                 const Globals& g) {
  static const std::regex raw(R"((\d+):(\d+))");
  std::smatch m;
  if (std::regex_match(selector, m, raw)) return finder.find(std::stoull(m[1]), std::stoull(m[2]));
  const auto ref = io::find_ref_table(g.data_dir, spec_text);
  if (!ref) throw SpecError("no reference table for " + spec_text + "; use an order:size selector");
  return finder.find(*ref, selector);
}

template <GroupDomain D>
ojson class_json(const ConjClass<D>& c, std::uint64_t order) {
  return {{"element_order", c.element_order}, {"size", c.size()}, {"centralizer_order", order / c.size()}};
}

// ---------------------------------------------------------------------------
// Commands

int cmd_order(const std::string& spec, const Globals& g) {
  const Loaded l = load(spec, g);
  ojson out;
  out["command"] = "order";
  out["group"] = spec;
  std::visit(
      [&](const auto& x) {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, MatrixExtension>) {
          out["order"] = x.group.order();
          out["certificate"] = x.base.certificate;
          out["index"] = x.index;
        } else {
          out["order"] = x.order();
          out["certificate"] = "formula";
        }
      },
      l);
  emit(g, out);
  return kExitOk;
}

template <GroupDomain D>
ojson classes_json(const Group<D>& grp, const std::string& spec, const Globals& g,
                   const std::function<std::string(const typename D::Element&)>& coset) {
  const auto& d = grp.domain();
  std::vector<ConjClass<D>> cls;
  std::string how;
  bool complete = false;
  if (!g.cache_dir.empty()) {
    if (auto cached = io::read_class_cache(g.cache_dir, grp, spec)) {
      cls = std::move(*cached);
      how = "cache";
      complete = true;
    }
  }
  if (cls.empty()) {
    if (grp.order() <= g.cap_order) {
      cls = all_classes(grp);
      how = "enumeration";
      complete = true;
    } else {
      auto s = class_search(grp, g.budget_or(20'000), g.seed);
      cls = std::move(s.classes);
      how = "random search: " + s.report.how;
      complete = s.report.complete;
    }
    if (complete && !g.cache_dir.empty()) io::write_class_cache(g.cache_dir, d, spec, grp.order(), cls);
  }
  sort_classes(cls, d);
  std::vector<std::string> labels(cls.size());
  if (auto ref = io::find_ref_table(g.data_dir, spec)) labels = labels_for(atlas_match(cls, grp.order(), *ref), cls.size());
  ojson out;
  out["command"] = "classes";
  out["group"] = spec;
  out["order"] = grp.order();
  out["complete"] = complete;
  out["method"] = how;
  out["classes"] = ojson::array();
  for (std::size_t i = 0; i < cls.size(); ++i) {
    ojson row = {{"index", i}, {"label", labels[i].empty() ? ojson(nullptr) : ojson(labels[i])}};
    row.update(class_json(cls[i], grp.order()));
    if (coset) row["coset"] = coset(cls[i].rep);
    row["representative"] = d.encode(cls[i].rep);
    out["classes"].push_back(row);
  }
  return out;
}

int cmd_classes(const std::string& spec, const Globals& g) {
  const Loaded l = load(spec, g);
  ojson out = std::visit(
      [&](const auto& x) {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, MatrixExtension>) {
          std::function<std::string(const ExtElem&)> coset;
          if (x.aut) coset = [&](const ExtElem& e) { return contains(x.base, e) ? "inner" : "outer"; };
          return classes_json(x.group, spec, g, coset);
        } else {
          return classes_json<PermDomain>(x, spec, g, nullptr);
        }
      },
      l);
  emit(g, out);
  return kExitOk;
}

template <GroupDomain D>
int radical_on(const Group<D>& grp, const std::string& name, const PiSet& pi, const Globals& g) {
  const auto r = pi_radical(grp, pi);
  const auto gens = generate_from(grp.domain(), r.elements.items(), r.order() + 1).gens;
  ojson out;
  out["command"] = "radical";
  out["group"] = name;
  out["pi"] = pi.str();
  out["order"] = r.order();
  out["generators"] = ojson::array();
  for (const auto& x : gens) out["generators"].push_back(grp.domain().encode(x));
  emit(g, out);
  return kExitOk;
}

template <GroupDomain D>
int bswidth_on(const Group<D>& grp, const std::string& name, const PiSet& pi, unsigned m, std::uint64_t samples,
               const Globals& g) {
  const auto rep = radical_criterion_verify(grp, pi, m ? m : pi.width_bound(), g.budget_or(10'000'000), samples,
                                            g.seed, g.threads);
  ojson out;
  out["command"] = "bswidth";
  out["group"] = name;
  out["pi"] = pi.str();
  out["m"] = rep.m;
  out["mismatches"] = rep.mismatches();
  out["classes"] = ojson::array();
  for (std::size_t i = 0; i < rep.classes.size(); ++i) {
    const auto& c = rep.classes[i];
    out["classes"].push_back({{"index", i},
                              {"element_order", c.element_order},
                              {"size", c.size},
                              {"in_radical", c.in_radical},
                              {"tuples", verdict_name(c.bs.verdict)},
                              {"mode", c.bs.mode == Mode::exhaustive ? "exhaustive" : "randomized"},
                              {"match", c.match}});
  }
  emit(g, out);
  return rep.mismatches() ? kExitMismatch : kExitOk;
}

/// Resolves (L, ambient) for beta and alpha. With an automorphism in the
/// spec, L is the base group and the ambient group is the extension;
/// --over replaces the ambient group.
template <class F>
int with_pair(const std::string& spec, const std::string& over, const Globals& g, F&& f) {
  const Loaded l = load(spec, g);
  if (over.empty()) {
    return std::visit(
        [&](const auto& x) -> int {
          if constexpr (std::is_same_v<std::decay_t<decltype(x)>, MatrixExtension>)
            return f(x.base.group, x.group, spec);
          else
            return f(x, x, spec);
        },
        l);
  }
  const Loaded a = load(over, g);
  if (l.index() != a.index()) throw SpecError(spec + " and " + over + " act on different kinds of objects");
  if (const auto* lm = std::get_if<MatrixExtension>(&l)) {
    const auto& am = std::get<MatrixExtension>(a);
    const auto& dl = lm->group.domain();
    const auto& da = am.group.domain();
    if (dl.field().q() != da.field().q() || dl.dim() != da.dim() || dl.projective() != da.projective())
      throw SpecError(spec + " and " + over + " live in different matrix domains");
    const auto& lg = lm->aut ? lm->base.group : lm->group;
    return f(lg, am.group, over);
  }
  const auto& lp = std::get<Group<PermDomain>>(l);
  const auto& ap = std::get<Group<PermDomain>>(a);
  if (lp.domain().degree() != ap.domain().degree()) throw SpecError("permutation degrees differ");
  return f(lp, ap, over);
}

SearchOptions search_options(const std::string& mode, const Globals& g, std::uint64_t default_budget) {
  SearchOptions o;
  if (mode == "exhaustive")
    o.mode = Mode::exhaustive;
  else if (mode == "randomized")
    o.mode = Mode::randomized;
  else
    throw SpecError("mode must be exhaustive or randomized");
  o.budget = g.budget_or(default_budget);
  o.seed = g.seed;
  o.threads = g.threads;
  return o;
}

template <GroupDomain D>
ojson certificate_json(const Group<D>& l, const typename D::Element& x, const BetaCertificate<D>& c) {
  ojson j;
  j["k"] = c.k;
  j["bound"] = bound_name(c.bound);
  j["witness_order"] = c.bound == Bound::lower ? ojson(nullptr) : ojson(c.witness_order);
  j["conjugators"] = ojson::array();
  for (const auto& y : c.conjugators) j["conjugators"].push_back(l.domain().encode(y));
  j["recheck"] = recheck(l, x, c);
  return j;
}

int cmd_invariant(const std::string& which, const std::string& spec, const std::string& over,
                  const std::string& selector, std::uint64_t r, const std::string& mode, const Globals& g) {
  return with_pair(spec, over, g, [&](const auto& l, const auto& amb, const std::string& amb_spec) -> int {
    ClassFinder finder(amb, g.cap_order, g.budget_or(200'000), g.seed);
    const auto& cls = select_class(finder, selector, amb_spec, g);
    const auto opt = search_options(mode, g, mode == "exhaustive" ? 10'000'000 : 2'000);
    const auto cert = which == "beta" ? beta(l, cls.rep, r, opt) : alpha(l, cls.rep, opt);
    ojson out;
    out["command"] = which;
    out["group"] = spec;
    out["ambient"] = amb_spec;
    out["class"] = class_json(cls, amb.order());
    out["class"]["selector"] = selector;
    out["element"] = amb.domain().encode(cls.rep);
    if (which == "beta") out["r"] = r;
    out["mode"] = mode;
    out["certificate"] = certificate_json(l, cls.rep, cert);
    emit(g, out);
    return out["certificate"]["recheck"].get<bool>() ? kExitOk : kExitMismatch;
  });
}

int cmd_structconst(const std::string& spec, const std::string& a, const std::string& b, const std::string& c,
                    const Globals& g) {
  const Loaded l = load(spec, g);
  return std::visit(
      [&](const auto& x) -> int {
        const auto& grp = [&]() -> const auto& {
          if constexpr (std::is_same_v<std::decay_t<decltype(x)>, MatrixExtension>)
            return x.group;
          else
            return x;
        }();
        using D = std::decay_t<decltype(grp.domain())>;
        std::vector<typename D::Element> seeds;
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, MatrixExtension>)
          if (x.aut) seeds.push_back(*x.aut);
        ClassFinder<D> finder(grp, std::min<std::uint64_t>(g.cap_order, 200'000), g.budget_or(200'000), g.seed, seeds);
        const auto& ca = select_class(finder, a, spec, g);
        const auto& cb = select_class(finder, b, spec, g);
        const auto& cc = select_class(finder, c, spec, g);
        ojson out;
        out["command"] = "structconst";
        out["group"] = spec;
        out["classes"] = ojson::array();
        for (const auto& [sel, cl] : {std::pair{&a, &ca}, std::pair{&b, &cb}, std::pair{&c, &cc}}) {
          ojson row = {{"selector", *sel}};
          row.update(class_json(*cl, grp.order()));
          out["classes"].push_back(row);
        }
        out["count"] = count_pairs(grp.domain(), ca, cb, cc.rep, g.threads);
        emit(g, out);
        return kExitOk;
      },
      l);
}

int cmd_verify(const std::string& suite, const Globals& g) {
  verify::Options o;
  o.data_dir = g.data_dir;
  o.seed = g.seed;
  o.threads = g.threads;
  const auto results = verify::run_suite(suite, o);
  ojson out;
  out["command"] = "verify";
  out["suite"] = suite;
  bool all = true;
  out["criteria"] = ojson::array();
  for (const auto& c : results) {
    all &= c.pass();
    ojson checks = ojson::array();
    for (const auto& k : c.checks) checks.push_back({{"name", k.name}, {"pass", k.pass}, {"detail", k.detail}});
    out["criteria"].push_back({{"id", c.id},
                               {"title", c.title},
                               {"pass", c.pass()},
                               {"seconds", c.seconds},
                               {"budget_seconds", c.budget_seconds},
                               {"error", c.error},
                               {"checks", checks}});
  }
  out["pass"] = all;
  if (g.format == "json") {
    emit(g, out);
  } else {
    for (const auto& c : results) {
      std::printf("%s  %d %-28s %8.2fs  (budget %.0fs)%s%s\n", c.pass() ? "PASS" : "FAIL", c.id, c.title.c_str(),
                  c.seconds, c.budget_seconds, c.error.empty() ? "" : "  error: ", c.error.c_str());
      for (const auto& k : c.checks)
        std::printf("      %s %s: %s\n", k.pass ? "ok  " : "FAIL", k.name.c_str(), k.detail.c_str());
    }
  }
  return all ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugate-generation invariants of finite classical and permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "master seed for randomized searches");
  app.add_option("--budget", g.budget, "tuple or sample budget (0: command default)");
  app.add_option("--cap-order", g.cap_order, "largest group order enumerated in full");
  app.add_option("--threads", g.threads, "worker threads; results do not depend on it")->check(CLI::Range(1u, 256u));
  app.add_option("--cache-dir", g.cache_dir, "directory for class caches");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--data-dir", g.data_dir, "directory of reference label tables");

  std::string spec, over, selector, pi_text, mode = "exhaustive", gens, suite = "all";
  std::string la, lb, lc;
  std::uint64_t r = 0, samples = 20'000;
  unsigned m = 0, degree = 0;

  auto* order = app.add_subcommand("order", "group order");
  order->add_option("spec", spec, "group specification")->required();
  auto* classes = app.add_subcommand("classes", "conjugacy classes");
  classes->add_option("spec", spec)->required();
  auto* radical = app.add_subcommand("radical", "pi-radical O_pi");
  radical->add_option("spec", spec);
  radical->add_option("--pi", pi_text, "comma-separated primes")->required();
  radical->add_option("--degree", degree, "degree for --gens");
  radical->add_option("--gens", gens, "permutation generators as 1-based image lists, ';'-separated");
  auto* bsw_cmd = app.add_subcommand("bswidth", "per-class check of the m-tuple criterion for O_pi");
  bsw_cmd->add_option("spec", spec);
  bsw_cmd->add_option("--pi", pi_text)->required();
  bsw_cmd->add_option("--m", m, "tuple length (default m(pi))");
  bsw_cmd->add_option("--samples", samples, "samples for classes too large for exhaustive search");
  bsw_cmd->add_option("--degree", degree);
  bsw_cmd->add_option("--gens", gens);
  auto* beta_cmd = app.add_subcommand("beta", "beta_r(x, L) with certificate");
  beta_cmd->add_option("spec", spec)->required();
  beta_cmd->add_option("--class", selector, "ATLAS label or order:size")->required();
  beta_cmd->add_option("--r", r, "prime r")->required();
  beta_cmd->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "randomized"}));
  beta_cmd->add_option("--over", over, "ambient group containing x");
  auto* alpha_cmd = app.add_subcommand("alpha", "alpha(x, L) with certificate");
  alpha_cmd->add_option("spec", spec)->required();
  alpha_cmd->add_option("--class", selector)->required();
  alpha_cmd->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "randomized"}));
  alpha_cmd->add_option("--over", over);
  auto* sc = app.add_subcommand("structconst", "pair count m(A, B, C)");
  sc->add_option("spec", spec)->required();
  sc->add_option("a", la)->required();
  sc->add_option("b", lb)->required();
  sc->add_option("c", lc)->required();
  auto* ver = app.add_subcommand("verify", "recompute published values");
  ver->add_option("suite", suite, "all, or one of: structconst beta baer-suzuki pi-radical constructions alpha properties");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitFailure;
  }

  try {
    if (*order) return cmd_order(spec, g);
    if (*classes) return cmd_classes(spec, g);
    if (*radical || *bsw_cmd) {
      const PiSet pi = parse_pi(pi_text);
      auto run = [&](const auto& grp, const std::string& name) {
        return *radical ? radical_on(grp, name, pi, g) : bswidth_on(grp, name, pi, m, samples, g);
      };
      if (!gens.empty()) {
        if (!spec.empty()) throw SpecError("give either a group spec or --gens, not both");
        return run(load_gens(degree, gens), "<" + gens + ">");
      }
      if (spec.empty()) throw SpecError("a group spec or --gens is required");
      const Loaded l = load(spec, g);
      return std::visit(
          [&](const auto& x) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, MatrixExtension>)
              return run(x.group, spec);
            else
              return run(x, spec);
          },
          l);
    }
    if (*beta_cmd) return cmd_invariant("beta", spec, over, selector, r, mode, g);
    if (*alpha_cmd) return cmd_invariant("alpha", spec, over, selector, 0, mode, g);
    if (*sc) return cmd_structconst(spec, la, lb, lc, g);
    if (*ver) return cmd_verify(suite, g);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
