// semicat - command line frontend for the finite semigroup / category
// toolkit.  One binary, subcommand style; JSON in, JSON out.
// Exit status: 0 success (or property true), 1 property false, 2 error.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "semicat/category.hpp"
#include "semicat/congruence.hpp"
#include "semicat/ggm.hpp"
#include "semicat/greens.hpp"
#include "semicat/group.hpp"
#include "semicat/json_io.hpp"
#include "semicat/kernel.hpp"
#include "semicat/lh.hpp"
#include "semicat/pvar.hpp"
#include "semicat/rees.hpp"
#include "semicat/supertech.hpp"
#include "semicat/verify.hpp"
#include "semicat/zoo.hpp"

using namespace semicat;
using nlohmann::json;

namespace {

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

FiniteMonoid load_monoid(const std::string& path) {
  json j = load_json_file(path);
  require(!json_is_category(j), "ParseError",
          path + " holds a category, expected a monoid");
  return monoid_from_json(j);
}

FiniteCategory load_category(const std::string& path) {
  json j = load_json_file(path);
  require(json_is_category(j), "ParseError",
          path + " holds a monoid, expected a category");
  return category_from_json(j);
}

std::vector<ElementId> parse_id_list(const std::string& s) {
  std::vector<ElementId> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      out.push_back(std::stoi(tok));
    } catch (...) {
      fail("ParseError", "bad element id '" + tok + "' in --n");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite semigroup, group and category toolkit"};
  app.require_subcommand(1);
  // --h is a pseudovariety option below, so help hangs off --help alone
  app.set_help_flag("--help", "print help");
  bool json_out = true;
  app.add_flag("--json", json_out, "JSON output (the only mode; default)");

  std::string in_path, cong_path, pvar_name, h_name, v_name, zoo_name, n_list;
  int jarg = -1, earg = -1;

  auto add_subcommand = [&](const char* name, const char* desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->set_help_flag("--help", "print help");
    return sub;
  };

  auto* zoo_cmd = add_subcommand("zoo", "print a builtin object");
  bool zoo_list = false;
  zoo_cmd->add_option("name", zoo_name, "builtin name");
  zoo_cmd->add_flag("--list", zoo_list, "list builtin names");

  auto* green_cmd = add_subcommand("green", "Green's relations");
  green_cmd->add_option("input", in_path)->required();

  auto* local_cmd = add_subcommand("localmonoid", "eSe at an idempotent");
  local_cmd->add_option("input", in_path)->required();
  local_cmd->add_option("--e", earg, "idempotent element id")->required();

  auto* rad_cmd = add_subcommand("radical", "H-radical of a group");
  rad_cmd->add_option("input", in_path)->required();
  rad_cmd->add_option("--pvar", pvar_name, "Fitting group pseudovariety")
      ->required();

  auto* rees_cmd = add_subcommand("rees", "Rees coordinates of a J-class");
  rees_cmd->add_option("input", in_path)->required();
  rees_cmd->add_option("--j", jarg, "regular J-class id (see `green`)")
      ->required();

  auto* ggm_cmd = add_subcommand("ggm", "radical congruence and quotient");
  ggm_cmd->add_option("input", in_path)->required();
  ggm_cmd->add_option("--j", jarg, "regular J-class id")->required();
  ggm_cmd->add_option("--pvar", pvar_name,
                      "use N = the pseudovariety radical of G_J");
  ggm_cmd->add_option("--n", n_list,
                      "generators of N inside G_J, comma-separated ids");

  auto* canon_cmd =
      add_subcommand("canon-lh", "maximal LH congruence and quotient");
  canon_cmd->add_option("input", in_path)->required();
  canon_cmd->add_option("--h", h_name, "Fitting group pseudovariety")
      ->required();

  auto* malcev_cmd = add_subcommand("malcev", "LH (m) V membership");
  malcev_cmd->add_option("input", in_path)->required();
  malcev_cmd->add_option("--h", h_name)->required();
  malcev_cmd->add_option("--v", v_name)->required();

  auto* cons_cmd = add_subcommand("consolidate", "category consolidation");
  cons_cmd->add_option("input", in_path)->required();

  auto* kernel_cmd =
      add_subcommand("kernel", "kernel category of a quotient");
  kernel_cmd->add_option("input", in_path)->required();
  kernel_cmd->add_option("--cong", cong_path, "congruence JSON")->required();

  auto* chk_cmd = app.add_subcommand(
      "check-lh", "is_in_LH of a table, or the LH property of a quotient");
  chk_cmd->add_option("input", in_path)->required();
  chk_cmd->add_option("--cong", cong_path, "congruence JSON (morphism mode)");
  chk_cmd->add_option("--h", h_name)->required();

  auto* fac_cmd = add_subcommand("factor-mpq", "factor into MPQs");
  fac_cmd->add_option("input", in_path)->required();
  fac_cmd->add_option("--cong", cong_path)->required();

  auto* st_cmd = add_subcommand("supertech", "canonical LH quotient of a"
                                                 " category");
  st_cmd->add_option("input", in_path)->required();
  st_cmd->add_option("--h", h_name)->required();
  st_cmd->add_option("--v", v_name, "optionally assert local V membership");

  auto* verify_cmd = add_subcommand("verify", "run invariant suites");
  bool run_all = false;
  std::vector<std::string> suites;
  VerifyOptions vopt;
  int jobs = 0, cap = 0;
  unsigned long long seed_arg = 0;
  verify_cmd->add_flag("--all", run_all, "run every suite");
  verify_cmd->add_option("--suite", suites, "suite name (repeatable)");
  verify_cmd->add_option("--bound", vopt.zoo_bound, "builtin size bound");
  verify_cmd->add_option("--random", vopt.random_count, "random monoid count");
  verify_cmd->add_option("--random-size", vopt.random_size,
                         "random monoid size bound");
  verify_cmd->add_option("--seed", seed_arg, "RNG seed (default 0)");
  verify_cmd->add_option("--jobs", jobs, "worker threads (default: all)");
  verify_cmd->add_option(
      "--cap", cap, "override every enumeration size cap (SEMICAT_SIZE_CAP)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*zoo_cmd) {
      if (zoo_list) {
        json names = json::array();
        for (const ZooEntry& e : zoo_catalogue()) names.push_back(e.name);
        emit(names);
        return 0;
      }
      require(!zoo_name.empty(), "UnknownName", "zoo needs a name or --list");
      ZooKind kind = zoo_kind(zoo_name);
      if (kind == ZooKind::category)
        emit(category_to_json(zoo_category(zoo_name)));
      else
        emit(monoid_to_json(zoo_monoid(zoo_name)));
      return 0;
    }
    if (*green_cmd) {
      FiniteMonoid m = load_monoid(in_path);
      emit(greens_to_json(greens(m)));
      return 0;
    }
    if (*local_cmd) {
      FiniteMonoid m = load_monoid(in_path);
      LocalMonoid lm = local_monoid(m, earg);
      emit(json{{"monoid", monoid_to_json(lm.monoid)},
                {"embedding", lm.embedding}});
      return 0;
    }
    if (*rad_cmd) {
      FiniteGroup g = group_from_json(load_json_file(in_path));
      FiniteGroup rad = h_radical(g, parse_pvar(pvar_name));
      emit(json{{"elements", rad.embedding},
                {"group", monoid_to_json(rad.monoid)}});
      return 0;
    }
    if (*rees_cmd) {
      FiniteMonoid m = load_monoid(in_path);
      GreensData g = greens(m);
      emit(rees_to_json(rees_representation(m, g, jarg)));
      return 0;
    }
    if (*ggm_cmd) {
      FiniteMonoid m = load_monoid(in_path);
      GreensData g = greens(m);
      ReesRepresentation rep = rees_representation(m, g, jarg);
      Subgroup n{rep.group.identity()};
      if (!pvar_name.empty())
        n = h_radical_set(rep.group, parse_pvar(pvar_name));
      else if (!n_list.empty())
        n = subgroup_closure(rep.group, parse_id_list(n_list));
      Congruence c = ggm_congruence(m, g, rep, n);
      QuotientResult q = quotient(m, c);
      emit(json{{"congruence", congruence_to_json(c)},
                {"quotient", monoid_to_json(q.monoid)},
                {"normal_subgroup", n}});
      return 0;
    }
    if (*canon_cmd) {
      FiniteMonoid m = load_monoid(in_path);
      Congruence c = lh_canonical_congruence(m, parse_pvar(h_name));
      QuotientResult q = quotient(m, c);
      emit(json{{"congruence", congruence_to_json(c)},
                {"quotient", monoid_to_json(q.monoid)}});
      return 0;
    }
    if (*malcev_cmd) {
      FiniteMonoid m = load_monoid(in_path);
      bool member =
          malcev_membership(m, parse_pvar(h_name), parse_pvar(v_name));
      emit(json{{"member", member}});
      return member ? 0 : 1;
    }
    if (*cons_cmd) {
      FiniteCategory c = load_category(in_path);
      Consolidation cons = consolidation(c);
      emit(json{{"monoid", monoid_to_json(cons.monoid)},
                {"zero", cons.zero},
                {"one", cons.one}});
      return 0;
    }
    if (*kernel_cmd) {
      json input = load_json_file(in_path);
      json cong = load_json_file(cong_path);
      KernelCategory K;
      if (json_is_category(input)) {
        FiniteCategory c = category_from_json(input);
        CatQuotient q = cat_quotient(c, cat_congruence_from_json(cong));
        K = kernel_category(q.projection);
      } else {
        FiniteMonoid m = monoid_from_json(input);
        MonoidMorphism phi =
            quotient_morphism(m, congruence_from_json(cong));
        K = kernel_category(phi);
      }
      json objects = json::array();
      for (auto [nl, nr] : K.objects) objects.push_back(json::array({nl, nr}));
      json reps = json::array();
      for (const auto& t : K.arrow_reps)
        reps.push_back(json::array({t[0], t[1], t[2]}));
      emit(json{{"category", category_to_json(K.cat)},
                {"objects", objects},
                {"arrow_reps", reps}});
      return 0;
    }
    if (*chk_cmd) {
      json input = load_json_file(in_path);
      Pvar h = parse_pvar(h_name);
      bool ok;
      if (cong_path.empty()) {
        require(!json_is_category(input), "ParseError",
                "check-lh without --cong expects a monoid table");
        ok = is_in_lh(monoid_from_json(input), h);
      } else if (json_is_category(input)) {
        FiniteCategory c = category_from_json(input);
        CatQuotient q = cat_quotient(
            c, cat_congruence_from_json(load_json_file(cong_path)));
        ok = is_lh_morphism_cat(q.projection, h);
      } else {
        FiniteMonoid m = monoid_from_json(input);
        MonoidMorphism phi = quotient_morphism(
            m, congruence_from_json(load_json_file(cong_path)));
        ok = is_lh_morphism(phi, h);
      }
      emit(json{{"holds", ok}});
      return ok ? 0 : 1;
    }
    if (*fac_cmd) {
      json input = load_json_file(in_path);
      CatMorphism phi;
      if (json_is_category(input)) {
        FiniteCategory c = category_from_json(input);
        phi = cat_quotient(c, cat_congruence_from_json(
                                  load_json_file(cong_path)))
                  .projection;
      } else {
        FiniteMonoid m = monoid_from_json(input);
        QuotientResult q =
            quotient(m, congruence_from_json(load_json_file(cong_path)));
        phi.source = cat_from_monoid(m);
        phi.target = cat_from_monoid(q.monoid);
        phi.arrow_map = q.projection;
      }
      std::vector<CatMorphism> chain = mpq_factorize(phi);
      json factors = json::array();
      for (const CatMorphism& f : chain)
        factors.push_back(
            json{{"classes", cat_kernel(f).class_of},
                 {"source_arrows", f.source.num_arrows()},
                 {"target_arrows", f.target.num_arrows()}});
      emit(json{{"factors", factors},
                {"length", static_cast<int>(chain.size())}});
      return 0;
    }
    if (*st_cmd) {
      FiniteCategory c = load_category(in_path);
      Pvar h = parse_pvar(h_name);
      SupertechResult res;
      if (!v_name.empty()) {
        Pvar v = parse_pvar(v_name);
        res = supertech_construct(c, h, &v);
      } else {
        res = supertech_construct(c, h, nullptr);
      }
      emit(json{{"category", category_to_json(res.quotient)},
                {"congruence", cat_congruence_to_json(res.congruence)}});
      return 0;
    }
    if (*verify_cmd) {
      vopt.seed = seed_arg;
      if (cap > 0) setenv("SEMICAT_SIZE_CAP", std::to_string(cap).c_str(), 1);
#ifdef _OPENMP
      if (jobs > 0) omp_set_num_threads(jobs);
#else
      (void)jobs;
#endif
      std::vector<SuiteResult> results;
      if (run_all || suites.empty()) {
        results = run_all_suites(vopt);
      } else {
        for (const std::string& s : suites) results.push_back(run_suite(s, vopt));
      }
      bool all_ok = true;
      json out = json::array();
      for (const SuiteResult& r : results) {
        all_ok = all_ok && r.passed;
        json jr{{"suite", r.name},
                {"passed", r.passed},
                {"checks", r.checks},
                {"seconds", r.seconds}};
        if (!r.detail.empty()) jr["detail"] = r.detail;
        out.push_back(std::move(jr));
      }
      emit(json{{"suites", out}, {"passed", all_ok}});
      return all_ok ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << json{{"error", e.code()},
                      {"detail", e.what()}}
                     .dump()
              << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "Internal"}, {"detail", e.what()}}.dump()
              << "\n";
    return 2;
  }
  return 2;
}
