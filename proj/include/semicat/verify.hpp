#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace semicat {

/// Knobs for the verification suites.  The defaults pin the bounds the
/// acceptance run uses; the CLI can widen or shrink them for exploration.
struct VerifyOptions {
  int zoo_bound = 8;        // builtin monoid size bound for the main corpus
  int random_count = 200;   // random monoids in the main corpus
  int random_size = 6;      // their size bound
  uint64_t seed = 0;
  int structural_bound = 50;   // oracle suites (Green's, Rees, radcong)
  int structural_random = 32;  // random closures in the structural corpus
  int group_bound = 24;        // Sylow oracle bound
  int cat_objects = 3, cat_arrows = 12;  // category corpus
  int cat_random = 56;
  int min_morphisms = 100;     // generated quotient morphisms, lower bound
  int st_objects = 2, st_arrows = 10;  // supertech corpus limits
  std::vector<std::string> h_family = {"triv", "p:2", "sol", "all"};
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  long checks = 0;
  double seconds = 0.0;
  std::string detail;  // first failure, empty when passed
};

using SuiteFn = SuiteResult (*)(const VerifyOptions&);

/// Registered suites in a stable order.
const std::vector<std::pair<std::string, SuiteFn>>& verify_registry();

/// Runs one suite by name (UnknownName otherwise).
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt);

/// Runs every registered suite.
std::vector<SuiteResult> run_all_suites(const VerifyOptions& opt);

}  // namespace semicat
