// Acceptance run: one PASS/FAIL line per criterion, followed by its checks.
// All comparisons are exact integers; the only tolerances are the wall-clock
// limits below, which each criterion enforces on itself.
//
//   1 structure constants    U3(3).2, U4(2).2, U4(3).2 under 2 min each; L4(3).2 under 30 min
//   2 beta values            PSL(2,q) 1 min; A5 10 s; Aut(A6) 5 min; PSp(4,3) 5 min
//   3 Baer-Suzuki            2 min
//   4 pi-radical criterion   30 min
//   5 constructions          5 min
//   6 alpha values           2 min
//   7 property suites        10 min
//
// usage: acceptance [DATA_DIR] [--threads N] [--only SUITE]

#include <cstdio>
#include <cstring>
#include <string>

#include "bswidth/verify.hpp"

#ifndef BSWIDTH_DATA_DIR
#define BSWIDTH_DATA_DIR "data/atlas"
#endif

int main(int argc, char** argv) {
  bsw::verify::Options o;
  o.data_dir = BSWIDTH_DATA_DIR;
  std::string suite = "all";
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--threads") && i + 1 < argc)
      o.threads = static_cast<unsigned>(std::stoul(argv[++i]));
    else if (!std::strcmp(argv[i], "--only") && i + 1 < argc)
      suite = argv[++i];
    else
      o.data_dir = argv[i];
  }

  int failed = 0;
  int total = 0;
  for (const auto& name : bsw::verify::suite_names()) {
    if (suite != "all" && suite != name) continue;
    for (const auto& c : bsw::verify::run_suite(name, o)) {
      ++total;
      failed += !c.pass();
      std::printf("%s criterion %d: %s (%.2f s, limit %.0f s)\n", c.pass() ? "PASS" : "FAIL", c.id, c.title.c_str(),
                  c.seconds, c.budget_seconds);
      if (!c.error.empty()) std::printf("    error: %s\n", c.error.c_str());
      for (const auto& k : c.checks)
        std::printf("    [%s] %s: %s\n", k.pass ? "ok" : "FAIL", k.name.c_str(), k.detail.c_str());
      std::fflush(stdout);
    }
  }
  std::printf("%d of %d criteria passed\n", total - failed, total);
  return failed ? 1 : 0;
}
