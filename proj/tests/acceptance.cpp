// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Bounds are pinned here; the library-level suites do the work.
//
//   1  maximality of the canonical LH congruence over the corpus
//   2  Mal'cev membership agrees with the brute-force quotient search
//   3  DS ∩ Hbar coincides with LH (m) Sl membership
//   4  LH property and MPQ-ness transfer to the consolidation (both ways)
//   5  radical congruences restrict to local monoids exactly
//   6  kernel categories: full-subcategory embedding; MPQ LH-morphisms
//      have locally-H kernel categories
//   7  supertech round trip on small categories
//   8  structural oracles (Green's, Rees coordinates, Sylow radicals,
//      idempotent-restricted radical congruences)

#include <cstdio>
#include <string>
#include <vector>

#include "semicat/verify.hpp"

using namespace semicat;

namespace {

struct Criterion {
  int number;
  std::string description;
  std::vector<std::string> suites;
};

}  // namespace

int main() {
  VerifyOptions opt;  // defaults pin the documented bounds
  const std::vector<Criterion> criteria = {
      {1, "canonical LH congruence is the exact maximum", {"maximality"}},
      {2, "membership equals the brute-force quotient search", {"membership"}},
      {3, "DS ∩ Hbar identity", {"putcha-schutzenberger"}},
      {4, "consolidation equivalences", {"LHtocd", "toconsolidate"}},
      {5, "restriction of radical congruences", {"technical"}},
      {6, "kernel categories", {"kernelin", "passtocat"}},
      {7, "supertech round trip", {"supertech"}},
      {8,
       "structural oracles",
       {"greens-oracle", "rees-coords", "radical-sylow",
        "radcong-idempotents"}},
  };

  bool all_ok = true;
  for (const Criterion& c : criteria) {
    bool ok = true;
    long checks = 0;
    double seconds = 0;
    std::string detail;
    for (const std::string& suite : c.suites) {
      SuiteResult r = run_suite(suite, opt);
      ok = ok && r.passed;
      checks += r.checks;
      seconds += r.seconds;
      if (!r.passed && detail.empty()) detail = suite + ": " + r.detail;
    }
    std::printf("[%s] criterion %d: %-55s (%ld checks, %.1fs)\n",
                ok ? "PASS" : "FAIL", c.number, c.description.c_str(), checks,
                seconds);
    if (!ok) std::printf("       %s\n", detail.c_str());
    std::fflush(stdout);
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
