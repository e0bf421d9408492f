#include "semicat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "semicat/category.hpp"
#include "semicat/congruence.hpp"
#include "semicat/corpus.hpp"
#include "semicat/ggm.hpp"
#include "semicat/greens.hpp"
#include "semicat/group.hpp"
#include "semicat/json_io.hpp"
#include "semicat/kernel.hpp"
#include "semicat/lh.hpp"
#include "semicat/rees.hpp"
#include "semicat/supertech.hpp"
#include "semicat/zoo.hpp"

#include <nlohmann/json.hpp>

namespace semicat {

namespace {

struct EntryOutcome {
  long checks = 0;
  std::string failure;  // empty = pass
};

// Fans the per-entry body out over OpenMP workers; failure reporting is
// deterministic (least entry index wins).
template <typename Body>
SuiteResult run_over(const std::string& name, size_t n, Body&& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<EntryOutcome> outcomes(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(n); ++i) {
    try {
      body(static_cast<size_t>(i), outcomes[i]);
    } catch (const Error& e) {
      outcomes[i].failure = std::string("exception ") + e.what();
    } catch (const std::exception& e) {
      outcomes[i].failure = std::string("exception ") + e.what();
    }
  }
  SuiteResult r;
  r.name = name;
  r.passed = true;
  for (size_t i = 0; i < n; ++i) {
    r.checks += outcomes[i].checks;
    if (!outcomes[i].failure.empty() && r.passed) {
      r.passed = false;
      r.detail = outcomes[i].failure;
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0)
                  .count();
  return r;
}

std::vector<Pvar> parse_family(const std::vector<std::string>& names) {
  std::vector<Pvar> out;
  for (const std::string& n : names) out.push_back(parse_pvar(n));
  return out;
}

void expect(EntryOutcome& o, bool cond, const std::string& what) {
  ++o.checks;
  if (!cond && o.failure.empty()) o.failure = what;
}

// ---------------------------------------------------------------- greens

SuiteResult suite_greens_oracle(const VerifyOptions& opt) {
  auto corpus = corpus_monoids_structural(opt.structural_bound,
                                          opt.structural_random, opt.seed);
  return run_over("greens-oracle", corpus.size(), [&](size_t i,
                                                      EntryOutcome& o) {
    const FiniteMonoid& m = corpus[i].monoid;
    GreensData g = greens(m);
    GreensData ref = greens_by_ideals(m);
    expect(o, greens_equal(g, ref), corpus[i].name + ": oracle mismatch");
    // egg-box: inside one J-class every R-class meets every L-class
    for (int j = 0; j < g.num_j && o.failure.empty(); ++j) {
      std::vector<int> rs, ls;
      for (ElementId x : g.j_members[j]) {
        rs.push_back(g.r_class[x]);
        ls.push_back(g.l_class[x]);
      }
      std::sort(rs.begin(), rs.end());
      rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
      std::sort(ls.begin(), ls.end());
      ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
      for (int r : rs)
        for (int l : ls) {
          bool found = false;
          for (ElementId x : g.j_members[j])
            if (g.r_class[x] == r && g.l_class[x] == l) {
              found = true;
              break;
            }
          expect(o, found, corpus[i].name + ": egg-box hole");
        }
    }
    // H = R meet L
    for (ElementId x = 0; x < m.size; ++x)
      for (ElementId y = x; y < m.size; ++y)
        expect(o,
               (g.h_class[x] == g.h_class[y]) ==
                   (g.r_class[x] == g.r_class[y] && g.l_class[x] == g.l_class[y]),
               corpus[i].name + ": H is not R meet L");
    // regular iff idempotent present; <=_J antisymmetric
    for (int j = 0; j < g.num_j; ++j) {
      bool has_idem = false;
      for (ElementId x : g.j_members[j])
        if (m.is_idempotent(x)) has_idem = true;
      expect(o, (g.j_regular[j] != 0) == has_idem,
             corpus[i].name + ": regular flag wrong");
    }
    for (int a = 0; a < g.num_j; ++a)
      for (int b = 0; b < g.num_j; ++b)
        if (a != b)
          expect(o, !(g.leq_j(a, b) && g.leq_j(b, a)),
                 corpus[i].name + ": <=_J not antisymmetric");
  });
}

// ------------------------------------------------------------------ rees

SuiteResult suite_rees_coords(const VerifyOptions& opt) {
  auto corpus = corpus_monoids_structural(opt.structural_bound,
                                          opt.structural_random, opt.seed);
  return run_over("rees-coords", corpus.size(), [&](size_t i, EntryOutcome& o) {
    const FiniteMonoid& m = corpus[i].monoid;
    GreensData g = greens(m);
    for (int j = 0; j < g.num_j; ++j) {
      if (!g.j_regular[j]) continue;
      // the constructor itself asserts coord bijectivity and
      // multiplicativity exhaustively
      ReesRepresentation rep = rees_representation(m, g, j);
      ++o.checks;
      // eta domain behavior on every element
      for (ElementId s = 0; s < m.size; ++s) {
        int js = g.j_class[s];
        if (js == j) {
          expect(o, !eta(rep, g, s).zero, corpus[i].name + ": eta on J");
        } else if (!g.leq_j(j, js)) {
          expect(o, eta(rep, g, s).zero, corpus[i].name + ": eta on F(J)");
        } else {
          bool threw = false;
          try {
            eta(rep, g, s);
          } catch (const Error& e) {
            threw = std::string(e.code()) == "NotInDomain";
          }
          expect(o, threw, corpus[i].name + ": eta above J must fail");
        }
      }
      // psi is a morphism of the reduced Rees semigroups, every normal N
      for (const Subgroup& n : all_normal_subgroup_sets(rep.group)) {
        for (ElementId x : rep.j_members)
          for (ElementId y : rep.j_members) {
            ReesElement rx = psi(rep, n, rep.coord(x));
            ReesElement ry = psi(rep, n, rep.coord(y));
            ReesElement lhs = rees_mul_mod(rep, n, rx, ry);
            ReesElement rhs = psi(rep, n, rep.mul(rep.coord(x), rep.coord(y)));
            expect(o, lhs == rhs, corpus[i].name + ": psi not multiplicative");
            if (!o.failure.empty()) return;
          }
      }
    }
  });
}

// --------------------------------------------------------------- radicals

FiniteGroup quotient_by_normal(const FiniteGroup& G, const Subgroup& n) {
  std::vector<ElementId> reps = coset_reps(G, n);
  std::vector<int> labels(reps.begin(), reps.end());
  Congruence c = canonical_partition(labels);
  return group_from_monoid(quotient(G.monoid, c).monoid);
}

SuiteResult suite_radical_sylow(const VerifyOptions& opt) {
  auto groups = zoo_groups_upto(opt.group_bound);
  return run_over("radical-sylow", groups.size(), [&](size_t i,
                                                      EntryOutcome& o) {
    const FiniteGroup& G = groups[i].second;
    for (int p : {2, 3}) {
      Subgroup rad = h_radical_set(G, pvar_p_group(p));
      Subgroup syl = sylow_p_intersection(G, p);
      expect(o, rad == syl,
             groups[i].first + ": p=" + std::to_string(p) +
                 " radical != Sylow intersection");
    }
  });
}

SuiteResult suite_group_props(const VerifyOptions& opt) {
  auto groups = zoo_groups_upto(opt.group_bound);
  std::vector<Pvar> flagged = {pvar_trivial_group(), pvar_p_group(2),
                               pvar_p_group(3),      pvar_nilpotent(),
                               pvar_solvable(),      pvar_all_groups()};
  return run_over("group-props", groups.size(), [&](size_t i,
                                                    EntryOutcome& o) {
    const FiniteGroup& G = groups[i].second;
    const std::string& name = groups[i].first;
    auto normals = all_normal_subgroup_sets(G);
    // radical maximality, independent recheck
    for (const Pvar& h : flagged) {
      Subgroup rad = h_radical_set(G, h);
      for (const Subgroup& n : normals)
        if (h.test(materialize_subgroup(G, n).monoid))
          expect(o,
                 std::includes(rad.begin(), rad.end(), n.begin(), n.end()),
                 name + ": radical misses a normal member of " + h.name);
      // Fitting: joins of normal members stay inside
      for (const Subgroup& n1 : normals)
        for (const Subgroup& n2 : normals) {
          if (!h.test(materialize_subgroup(G, n1).monoid) ||
              !h.test(materialize_subgroup(G, n2).monoid))
            continue;
          Subgroup both = n1;
          both.insert(both.end(), n2.begin(), n2.end());
          Subgroup joined = subgroup_closure(G, both);
          expect(o, h.test(materialize_subgroup(G, joined).monoid),
                 name + ": " + h.name + " not closed under normal joins");
        }
      // extension closure, where flagged
      if (h.extension_closed) {
        for (const Subgroup& n : normals) {
          if (!h.test(materialize_subgroup(G, n).monoid)) continue;
          if (!h.test(quotient_by_normal(G, n).monoid)) continue;
          expect(o, h.test(G.monoid),
                 name + ": " + h.name + " violated extension closure");
        }
      }
      // pseudovarieties are closed under subgroups and quotients
      if (h.test(G.monoid)) {
        for (const Subgroup& s : all_subgroups(G))
          expect(o, h.test(materialize_subgroup(G, s).monoid),
                 name + ": " + h.name + " not closed under subgroups");
        for (const Subgroup& n : normals)
          expect(o, h.test(quotient_by_normal(G, n).monoid),
                 name + ": " + h.name + " not closed under quotients");
      }
    }
    // series terminate and are descending
    auto ds = derived_series(G);
    auto lcs = lower_central_series(G);
    for (size_t k = 1; k < ds.size(); ++k)
      expect(o, ds[k].size() < ds[k - 1].size(), name + ": derived series");
    for (size_t k = 1; k < lcs.size(); ++k)
      expect(o, lcs[k].size() < lcs[k - 1].size(), name + ": central series");
    expect(o, is_solvable(G) == (ds.back().size() == 1), name + ": solvable");
    if (is_nilpotent(G))
      expect(o, is_solvable(G), name + ": nilpotent must be solvable");
    // membership is isomorphism-invariant: relabel and re-test
    std::mt19937_64 rng(opt.seed + i);
    for (int trial = 0; trial < 2; ++trial) {
      std::vector<ElementId> perm(G.size());
      for (ElementId x = 0; x < G.size(); ++x) perm[x] = x;
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<ElementId> flat(static_cast<size_t>(G.size()) * G.size());
      for (ElementId x = 0; x < G.size(); ++x)
        for (ElementId y = 0; y < G.size(); ++y)
          flat[static_cast<size_t>(perm[x]) * G.size() + perm[y]] =
              perm[G.mul(x, y)];
      FiniteMonoid relabeled = table_from_flat(G.size(), std::move(flat),
                                               perm[G.identity()], {}, false);
      for (const Pvar& h : flagged)
        expect(o, h.test(relabeled) == h.test(G.monoid),
               name + ": " + h.name + " not isomorphism-invariant");
    }
  });
}

// ----------------------------------------------------------- radcong oracle

SuiteResult suite_radcong_idempotents(const VerifyOptions& opt) {
  auto corpus = corpus_monoids_structural(opt.structural_bound,
                                          opt.structural_random, opt.seed);
  std::vector<Pvar> family = parse_family(opt.h_family);
  return run_over(
      "radcong-idempotents", corpus.size(), [&](size_t i, EntryOutcome& o) {
        const FiniteMonoid& m = corpus[i].monoid;
        GreensData g = greens(m);
        for (int j = 0; j < g.num_j; ++j) {
          if (!g.j_regular[j]) continue;
          ReesRepresentation rep = rees_representation(m, g, j);
          std::vector<Subgroup> normals;
          normals.push_back({rep.group.identity()});
          Subgroup whole;
          for (ElementId x = 0; x < rep.group.size(); ++x) whole.push_back(x);
          normals.push_back(whole);
          for (const Pvar& h : family)
            normals.push_back(h_radical_set(rep.group, h));
          std::sort(normals.begin(), normals.end());
          normals.erase(std::unique(normals.begin(), normals.end()),
                        normals.end());
          for (const Subgroup& n : normals) {
            Congruence fast = ggm_congruence(m, g, rep, n);
            Congruence slow = ggm_congruence_unrestricted(m, g, rep, n);
            Congruence serial = ggm_congruence_serial(m, g, rep, n);
            expect(o, fast == slow,
                   corpus[i].name + ": idempotent-restricted congruence "
                                    "differs from the unrestricted one");
            expect(o, fast == serial,
                   corpus[i].name + ": parallel and serial kernels differ");
          }
        }
      });
}

// ------------------------------------------------------- maximality (1)

SuiteResult suite_maximality(const VerifyOptions& opt) {
  auto corpus = corpus_monoids(opt.zoo_bound, opt.random_count,
                               opt.random_size, opt.seed);
  std::vector<Pvar> family = parse_family(opt.h_family);
  return run_over("maximality", corpus.size(), [&](size_t i, EntryOutcome& o) {
    const FiniteMonoid& m = corpus[i].monoid;
    auto congs = all_congruences(m);
    for (const Pvar& h : family) {
      Congruence canon = lh_canonical_congruence(m, h);
      bool canon_enumerated = false;
      for (const Congruence& c : congs) {
        MonoidMorphism phi = quotient_morphism(m, c);
        if (!is_lh_morphism(phi, h)) continue;
        expect(o, finer_or_equal(c, canon),
               corpus[i].name + "/" + h.name +
                   ": an LH congruence escapes the canonical one");
        if (c == canon) canon_enumerated = true;
      }
      expect(o, canon_enumerated,
             corpus[i].name + "/" + h.name +
                 ": canonical congruence not the exact maximum");
    }
  });
}

// ------------------------------------------------------- membership (2)

SuiteResult suite_membership(const VerifyOptions& opt) {
  auto corpus = corpus_monoids(opt.zoo_bound, opt.random_count,
                               opt.random_size, opt.seed);
  std::vector<Pvar> family = parse_family(opt.h_family);
  std::vector<Pvar> targets = {pvar_semilattice(), pvar_trivial_monoid(),
                               pvar_ds()};
  return run_over("membership", corpus.size(), [&](size_t i, EntryOutcome& o) {
    const FiniteMonoid& m = corpus[i].monoid;
    auto congs = all_congruences(m);
    for (const Pvar& h : family)
      for (const Pvar& v : targets) {
        bool via_ggm = malcev_membership(m, h, v);
        bool via_search = false;
        for (const Congruence& c : congs) {
          MonoidMorphism phi = quotient_morphism(m, c);
          if (v.test(phi.target) && is_lh_morphism(phi, h)) {
            via_search = true;
            break;
          }
        }
        expect(o, via_ggm == via_search,
               corpus[i].name + "/" + h.name + "/" + v.name +
                   ": membership discrepancy");
      }
  });
}

// --------------------------------------------- Putcha-Schutzenberger (3)

SuiteResult suite_putcha_schutzenberger(const VerifyOptions& opt) {
  auto corpus = corpus_monoids(opt.zoo_bound, opt.random_count,
                               opt.random_size, opt.seed);
  std::vector<Pvar> family = parse_family(opt.h_family);
  Pvar sl = pvar_semilattice();
  Pvar ds = pvar_ds();
  return run_over(
      "putcha-schutzenberger", corpus.size(), [&](size_t i, EntryOutcome& o) {
        const FiniteMonoid& m = corpus[i].monoid;
        bool in_ds = ds.test(m);
        for (const Pvar& h : family) {
          bool lhs = malcev_membership(m, h, sl);
          bool rhs = in_ds && subgroups_in(m, h);
          expect(o, lhs == rhs,
                 corpus[i].name + "/" + h.name + ": DS ∩ Hbar mismatch");
        }
      });
}

// ------------------------------------------------ LH locality of morphisms

// definitional route: the preimage of every idempotent arrow of the target
// is a sub-semigroup and must lie in LH
bool is_lh_morphism_cat_by_preimages(const CatMorphism& phi, const Pvar& h) {
  const FiniteCategory& C = phi.source;
  const FiniteCategory& D = phi.target;
  for (ElementId e = 0; e < D.num_arrows(); ++e) {
    if (D.src[e] != D.dst[e] || D.compose(e, e) != e) continue;
    LocalMonoid lm = local_monoid_at(C, D.src[e]);
    std::vector<ElementId> members;  // local indices hitting e
    for (ElementId x = 0; x < lm.monoid.size; ++x)
      if (phi.arrow_map[lm.embedding[x]] == e) members.push_back(x);
    ElementId id_local = kNone;
    if (phi.arrow_map[C.identity_arrow[D.src[e]]] == e)
      id_local = lm.monoid.identity;
    FiniteMonoid sub = induced_table(lm.monoid, members, id_local);
    if (!is_in_lh(sub, h)) return false;
  }
  return true;
}

SuiteResult suite_forgotten(const VerifyOptions& opt) {
  auto cats = corpus_categories(opt.cat_objects, opt.cat_arrows,
                                opt.cat_random, opt.seed);
  auto morphs = corpus_quotient_morphisms(cats);
  std::vector<Pvar> family = parse_family(opt.h_family);
  return run_over("forgotten", morphs.size(), [&](size_t i, EntryOutcome& o) {
    const CatMorphism& phi = morphs[i].morphism;
    for (const Pvar& h : family)
      expect(o,
             is_lh_morphism_cat(phi, h) ==
                 is_lh_morphism_cat_by_preimages(phi, h),
             morphs[i].name + "/" + h.name +
                 ": local-restriction and preimage routes disagree");
  });
}

// --------------------------------------------------- consolidation (4)

SuiteResult suite_lhtocd(const VerifyOptions& opt) {
  auto cats = corpus_categories(opt.cat_objects, opt.cat_arrows,
                                opt.cat_random, opt.seed);
  auto morphs = corpus_quotient_morphisms(cats);
  std::vector<Pvar> family = parse_family(opt.h_family);
  SuiteResult r =
      run_over("LHtocd", morphs.size(), [&](size_t i, EntryOutcome& o) {
        const CatMorphism& phi = morphs[i].morphism;
        MonoidMorphism cd = consolidation_morphism(phi);
        for (const Pvar& h : family)
          expect(o, is_lh_morphism_cat(phi, h) == is_lh_morphism(cd, h),
                 morphs[i].name + "/" + h.name +
                     ": LH differs between category and consolidation");
      });
  if (static_cast<int>(morphs.size()) < opt.min_morphisms) {
    r.passed = false;
    r.detail = "only " + std::to_string(morphs.size()) +
               " generated morphisms (need " +
               std::to_string(opt.min_morphisms) + ")";
  }
  return r;
}

SuiteResult suite_toconsolidate(const VerifyOptions& opt) {
  auto cats = corpus_categories(opt.cat_objects, opt.cat_arrows,
                                opt.cat_random, opt.seed);
  auto all_morphs = corpus_quotient_morphisms(cats);
  std::vector<NamedCatMorphism> morphs;
  for (auto& m : all_morphs)
    if (!cat_kernel(m.morphism).is_trivial()) morphs.push_back(std::move(m));
  SuiteResult r =
      run_over("toconsolidate", morphs.size(), [&](size_t i, EntryOutcome& o) {
        const CatMorphism& phi = morphs[i].morphism;
        MonoidMorphism cd = consolidation_morphism(phi);
        expect(o, is_mpq(phi) == is_mps(cd),
               morphs[i].name + ": MPQ and consolidated MPS disagree");
      });
  if (static_cast<int>(morphs.size()) < opt.min_morphisms) {
    r.passed = false;
    r.detail = "only " + std::to_string(morphs.size()) +
               " proper morphisms (need " + std::to_string(opt.min_morphisms) +
               ")";
  }
  return r;
}

// ------------------------------------------------------- restriction (5)

SuiteResult suite_technical(const VerifyOptions& opt) {
  auto cats = corpus_categories(opt.cat_objects, opt.cat_arrows,
                                opt.cat_random, opt.seed);
  std::vector<Pvar> family = parse_family(opt.h_family);
  return run_over("technical", cats.size(), [&](size_t i, EntryOutcome& o) {
    const FiniteCategory& C = cats[i].category;
    Consolidation cons = consolidation(C);
    const FiniteMonoid& M = cons.monoid;
    GreensData g = greens(M);
    // local monoids and their own Green's data, once per object
    std::vector<LocalMonoid> locals;
    std::vector<GreensData> local_greens;
    for (ElementId c = 0; c < C.num_objects; ++c) {
      locals.push_back(local_monoid_at(C, c));
      local_greens.push_back(greens(locals.back().monoid));
    }
    for (int j = 0; j < g.num_j; ++j) {
      if (!g.j_regular[j]) continue;
      ReesRepresentation rep = rees_representation(M, g, j);
      for (const Pvar& h : family) {
        Subgroup rad = h_radical_set(rep.group, h);
        Congruence big = ggm_congruence(M, g, rep, rad);
        for (ElementId c = 0; c < C.num_objects; ++c) {
          const LocalMonoid& lm = locals[c];
          int n_local = lm.monoid.size;
          std::vector<int> restricted(n_local);
          for (int x = 0; x < n_local; ++x)
            restricted[x] = big.class_of[lm.embedding[x]];
          Congruence lhs = canonical_partition(restricted);
          // does J meet this local monoid?
          ElementId witness = kNone;
          for (int x = 0; x < n_local; ++x)
            if (g.j_class[lm.embedding[x]] == j) {
              witness = x;
              break;
            }
          Congruence rhs = universal_congruence(n_local);
          if (witness != kNone) {
            int local_j = local_greens[c].j_class[witness];
            ReesRepresentation local_rep =
                rees_representation(lm.monoid, local_greens[c], local_j);
            Subgroup local_rad = h_radical_set(local_rep.group, h);
            rhs = ggm_congruence(lm.monoid, local_greens[c], local_rep,
                                 local_rad);
          }
          expect(o, lhs == rhs,
                 cats[i].name + "/" + h.name + ": restriction at object " +
                     std::to_string(c) + " of J-class " + std::to_string(j) +
                     " mismatches");
        }
      }
    }
  });
}

// -------------------------------------------------- kernel categories (6)

SuiteResult suite_kernelin(const VerifyOptions& opt) {
  auto cats = corpus_categories(opt.cat_objects, opt.cat_arrows,
                                opt.cat_random, opt.seed);
  auto morphs = corpus_quotient_morphisms(cats);
  return run_over("kernelin", morphs.size(), [&](size_t i, EntryOutcome& o) {
    const CatMorphism& phi = morphs[i].morphism;
    const FiniteCategory& D = phi.target;
    int narrD = D.num_arrows();
    KernelCategory K = kernel_category(phi);
    MonoidMorphism cd = consolidation_morphism(phi);
    KernelCategory Kcd = kernel_category(cd);

    // object correspondence: K objects are exactly the pairs of D-arrows
    // composable in D
    std::vector<int> obj_img(K.objects.size());
    for (size_t ob = 0; ob < K.objects.size(); ++ob)
      obj_img[ob] = Kcd.object_of_pair(K.objects[ob].first,
                                       K.objects[ob].second);
    // arrow map via representatives
    int nk = K.cat.num_arrows();
    std::vector<int> arr_img(nk, -1);
    for (int a = 0; a < nk; ++a)
      arr_img[a] = Kcd.class_of_triple(K.arrow_reps[a][0], K.arrow_reps[a][1],
                                       K.arrow_reps[a][2]);
    // well-defined on every triple, not only representatives
    for (const auto& [packed, cls] : K.triple_index) {
      ElementId nl = static_cast<ElementId>(packed >> 42);
      ElementId mm = static_cast<ElementId>((packed >> 21) & ((1 << 21) - 1));
      ElementId nr = static_cast<ElementId>(packed & ((1 << 21) - 1));
      expect(o, Kcd.class_of_triple(nl, mm, nr) == arr_img[cls],
             morphs[i].name + ": kernel identification differs");
      if (!o.failure.empty()) return;
    }
    // injectivity
    {
      std::vector<int> sorted = arr_img;
      std::sort(sorted.begin(), sorted.end());
      expect(o, std::adjacent_find(sorted.begin(), sorted.end()) ==
                    sorted.end(),
             morphs[i].name + ": arrow map not injective");
    }
    // endpoints and identities
    for (int a = 0; a < nk; ++a) {
      expect(o,
             obj_img[K.cat.src[a]] == Kcd.cat.src[arr_img[a]] &&
                 obj_img[K.cat.dst[a]] == Kcd.cat.dst[arr_img[a]],
             morphs[i].name + ": endpoints not preserved");
    }
    for (size_t ob = 0; ob < K.objects.size(); ++ob)
      expect(o,
             arr_img[K.cat.identity_arrow[ob]] ==
                 Kcd.cat.identity_arrow[obj_img[ob]],
             morphs[i].name + ": identities not matched");
    // composition preserved
    for (int a = 0; a < nk; ++a)
      for (int b = 0; b < nk; ++b) {
        if (K.cat.dst[a] != K.cat.src[b]) continue;
        expect(o,
               Kcd.cat.compose(arr_img[a], arr_img[b]) ==
                   arr_img[K.cat.compose(a, b)],
               morphs[i].name + ": composition not preserved");
        if (!o.failure.empty()) return;
      }
    // fullness: every Kcd arrow between embedded objects is hit
    {
      std::vector<char> is_img_obj(Kcd.objects.size(), 0);
      for (int v : obj_img) is_img_obj[v] = 1;
      std::vector<char> hit(Kcd.cat.num_arrows(), 0);
      for (int v : arr_img) hit[v] = 1;
      for (int a = 0; a < Kcd.cat.num_arrows(); ++a) {
        auto [nl, nr] = Kcd.objects[Kcd.cat.src[a]];
        auto [nl2, nr2] = Kcd.objects[Kcd.cat.dst[a]];
        bool between = is_img_obj[Kcd.cat.src[a]] &&
                       is_img_obj[Kcd.cat.dst[a]];
        (void)nl;
        (void)nr;
        (void)nl2;
        (void)nr2;
        if (between)
          expect(o, hit[a] != 0,
                 morphs[i].name + ": subcategory arrow not hit (fullness)");
      }
    }
    (void)narrD;
  });
}

SuiteResult suite_passtocat(const VerifyOptions& opt) {
  auto cats = corpus_categories(opt.cat_objects, opt.cat_arrows,
                                opt.cat_random, opt.seed);
  auto morphs = corpus_quotient_morphisms(cats);
  std::vector<Pvar> family = parse_family({"p:2", "sol", "all"});
  std::vector<EntryOutcome> found(morphs.size());
  SuiteResult r =
      run_over("passtocat", morphs.size(), [&](size_t i, EntryOutcome& o) {
        const CatMorphism& phi = morphs[i].morphism;
        if (cat_kernel(phi).is_trivial()) return;
        if (!is_mpq(phi)) return;
        bool built = false;
        KernelCategory K;
        for (const Pvar& h : family) {
          if (!is_lh_morphism_cat(phi, h)) continue;
          if (!built) {
            K = kernel_category(phi);
            built = true;
          }
          found[i].checks += 1;
          expect(o, ell_membership(K.cat, h),
                 morphs[i].name + "/" + h.name +
                     ": kernel category left l" + h.name);
        }
      });
  long hits = 0;
  for (const EntryOutcome& f : found) hits += f.checks;
  if (hits == 0 && r.passed) {
    r.passed = false;
    r.detail = "no MPQ LH-morphism found in the corpus";
  }
  r.checks += hits;
  return r;
}

// ------------------------------------------------------------ supertech (7)

SuiteResult suite_supertech(const VerifyOptions& opt) {
  auto cats_all = corpus_categories(opt.st_objects, opt.st_arrows,
                                    opt.cat_random, opt.seed + 1);
  std::vector<NamedCategory> cats;
  for (auto& c : cats_all)
    if (c.category.num_objects <= opt.st_objects &&
        c.category.num_arrows() <= opt.st_arrows)
      cats.push_back(std::move(c));
  std::vector<Pvar> family = parse_family(opt.h_family);
  Pvar sl = pvar_semilattice();
  return run_over("supertech", cats.size(), [&](size_t i, EntryOutcome& o) {
    const FiniteCategory& C = cats[i].category;
    std::vector<CatCongruence> congs;
    try {
      congs = all_cat_congruences(C);
    } catch (const Error&) {
      return;  // enumeration blowup: skip this entry
    }
    for (const Pvar& h : family) {
      bool locally_in = ell_malcev_membership(C, h, sl);
      bool witness = false;
      for (const CatCongruence& k : congs) {
        CatQuotient q = cat_quotient(C, k);
        if (ell_membership(q.category, sl) &&
            is_lh_morphism_cat(q.projection, h)) {
          witness = true;
          break;
        }
      }
      expect(o, locally_in == witness,
             cats[i].name + "/" + h.name +
                 ": local membership vs quotient witness mismatch");
      if (locally_in) {
        SupertechResult res = supertech_construct(C, h, &sl);
        expect(o, ell_membership(res.quotient, sl),
               cats[i].name + "/" + h.name + ": quotient not locally Sl");
        expect(o, is_lh_morphism_cat(res.projection, h),
               cats[i].name + "/" + h.name + ": projection not LH");
      }
    }
  });
}

// ----------------------------------------------------- remaining invariants

SuiteResult suite_comp(const VerifyOptions& opt) {
  auto corpus = corpus_monoids(std::min(opt.zoo_bound, 6),
                               std::min(opt.random_count, 50),
                               opt.random_size, opt.seed);
  std::vector<Pvar> family = parse_family(opt.h_family);
  return run_over("comp", corpus.size(), [&](size_t i, EntryOutcome& o) {
    const FiniteMonoid& m = corpus[i].monoid;
    auto congs = all_congruences(m);
    if (congs.size() > 60) congs.resize(60);
    for (const Pvar& h : family) {
      for (const Congruence& c2 : congs) {
        MonoidMorphism phi = quotient_morphism(m, c2);
        if (!is_lh_morphism(phi, h)) continue;
        for (const Congruence& c1 : congs) {
          if (!finer_or_equal(c1, c2)) continue;
          MonoidMorphism psi_m = quotient_morphism(m, c1);
          // induced map between the quotients
          MonoidMorphism gamma;
          gamma.source = psi_m.target;
          gamma.target = phi.target;
          gamma.map.assign(gamma.source.size, kNone);
          for (ElementId x = 0; x < m.size; ++x)
            gamma.map[c1.class_of[x]] = c2.class_of[x];
          expect(o, is_lh_morphism(psi_m, h),
                 corpus[i].name + "/" + h.name + ": first factor not LH");
          expect(o, is_lh_morphism(gamma, h),
                 corpus[i].name + "/" + h.name + ": second factor not LH");
          if (!o.failure.empty()) return;
        }
      }
    }
  });
}

SuiteResult suite_jrel_local(const VerifyOptions& opt) {
  auto cats = corpus_categories(opt.cat_objects, opt.cat_arrows,
                                opt.cat_random, opt.seed);
  return run_over("jrel-local", cats.size(), [&](size_t i, EntryOutcome& o) {
    const FiniteCategory& C = cats[i].category;
    Consolidation cons = consolidation(C);
    GreensData g = greens(cons.monoid);
    for (ElementId c = 0; c < C.num_objects; ++c) {
      LocalMonoid lm = local_monoid_at(C, c);
      GreensData gl = greens(lm.monoid);
      int n = lm.monoid.size;
      std::vector<char> in_local(cons.monoid.size, 0);
      std::vector<int> local_of(cons.monoid.size, -1);
      for (int x = 0; x < n; ++x) {
        in_local[lm.embedding[x]] = 1;
        local_of[lm.embedding[x]] = x;
      }
      // J agrees on the local monoid
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          expect(o,
                 (g.j_class[lm.embedding[x]] == g.j_class[lm.embedding[y]]) ==
                     (gl.j_class[x] == gl.j_class[y]),
                 cats[i].name + ": J-relation restriction differs");
      // the full H-class of a local element stays local and agrees
      for (int x = 0; x < n; ++x)
        for (ElementId y = 0; y < cons.monoid.size; ++y) {
          bool big_h = g.h_class[y] == g.h_class[lm.embedding[x]];
          bool local_h =
              in_local[y] && gl.h_class[local_of[y]] == gl.h_class[x];
          expect(o, big_h == local_h,
                 cats[i].name + ": H-class restriction differs");
          if (!o.failure.empty()) return;
        }
      // nonempty intersections are whole local J-classes of equal regularity
      for (int j = 0; j < g.num_j; ++j) {
        std::vector<int> inter;
        for (ElementId y : g.j_members[j])
          if (in_local[y]) inter.push_back(local_of[y]);
        if (inter.empty()) continue;
        int lj = gl.j_class[inter[0]];
        for (int x : inter)
          expect(o, gl.j_class[x] == lj,
                 cats[i].name + ": intersection spans local J-classes");
        expect(o,
               static_cast<size_t>(std::count(gl.j_class.begin(),
                                              gl.j_class.end(), lj)) ==
                   inter.size(),
               cats[i].name + ": intersection is not a full local J-class");
        expect(o, (g.j_regular[j] != 0) == (gl.j_regular[lj] != 0),
               cats[i].name + ": regularity differs on restriction");
      }
    }
  });
}

SuiteResult suite_mpq_chain(const VerifyOptions& opt) {
  auto cats = corpus_categories(opt.cat_objects, opt.cat_arrows,
                                opt.cat_random, opt.seed);
  auto all_morphs = corpus_quotient_morphisms(cats);
  std::vector<NamedCatMorphism> morphs;
  for (auto& m : all_morphs)
    if (!cat_kernel(m.morphism).is_trivial()) morphs.push_back(std::move(m));
  std::vector<Pvar> family = parse_family(opt.h_family);
  return run_over("mpq-chain", morphs.size(), [&](size_t i, EntryOutcome& o) {
    const CatMorphism& phi = morphs[i].morphism;
    std::vector<CatMorphism> chain = mpq_factorize(phi);
    expect(o, !chain.empty(), morphs[i].name + ": empty chain for a proper"
                                               " quotient");
    CatMorphism acc = chain[0];
    for (size_t k = 1; k < chain.size(); ++k)
      acc = compose_cat_morphisms(acc, chain[k]);
    expect(o, acc.arrow_map == phi.arrow_map,
           morphs[i].name + ": chain does not compose to the morphism");
    for (const CatMorphism& f : chain)
      expect(o, is_mpq(f), morphs[i].name + ": factor is not an MPQ");
    for (const Pvar& h : family) {
      if (!is_lh_morphism_cat(phi, h)) continue;
      for (const CatMorphism& f : chain)
        expect(o, is_lh_morphism_cat(f, h),
               morphs[i].name + "/" + h.name + ": factor lost the LH"
                                               " property");
    }
  });
}

SuiteResult suite_ggm_property(const VerifyOptions& opt) {
  auto corpus = corpus_monoids(opt.zoo_bound, std::min(opt.random_count, 60),
                               opt.random_size, opt.seed);
  std::vector<Pvar> family = parse_family(opt.h_family);
  return run_over("ggm-property", corpus.size(), [&](size_t i,
                                                     EntryOutcome& o) {
    const FiniteMonoid& m = corpus[i].monoid;
    GreensData g = greens(m);
    for (int j = 0; j < g.num_j; ++j) {
      if (!g.j_regular[j]) continue;
      ReesRepresentation rep = rees_representation(m, g, j);
      std::vector<Subgroup> normals{{rep.group.identity()}};
      for (const Pvar& h : family)
        normals.push_back(h_radical_set(rep.group, h));
      std::sort(normals.begin(), normals.end());
      normals.erase(std::unique(normals.begin(), normals.end()),
                    normals.end());
      for (const Subgroup& n : normals) {
        GgmResult res = ggm_quotient(m, g, j, n);
        auto ok = verify_ggm_property(m, g, j, res);
        if (ok.has_value())
          expect(o, *ok,
                 corpus[i].name + ": quotient at J-class " +
                     std::to_string(j) + " is not group-mapping");
        else
          ++o.checks;  // no zero context; skip counted
      }
    }
  });
}

SuiteResult suite_congruence_lattice(const VerifyOptions& opt) {
  auto corpus = corpus_monoids(opt.zoo_bound, std::min(opt.random_count, 80),
                               opt.random_size, opt.seed);
  return run_over(
      "congruence-lattice", corpus.size(), [&](size_t i, EntryOutcome& o) {
        const FiniteMonoid& m = corpus[i].monoid;
        auto congs = all_congruences(m);
        for (ElementId x = 0; x < m.size; ++x)
          for (ElementId y = x + 1; y < m.size; ++y) {
            Congruence pc = principal_congruence(m, x, y);
            expect(o, pc.class_of[x] == pc.class_of[y],
                   corpus[i].name + ": principal congruence misses its pair");
            QuotientResult q = quotient(m, pc);
            expect(o, q.projection[x] == q.projection[y],
                   corpus[i].name + ": quotient separates the merged pair");
            bool enumerated = false;
            for (const Congruence& c : congs) {
              if (c == pc) enumerated = true;
              if (c.class_of[x] == c.class_of[y])
                expect(o, finer_or_equal(pc, c),
                       corpus[i].name + ": principal congruence not minimal");
            }
            expect(o, enumerated,
                   corpus[i].name + ": principal congruence not enumerated");
            if (!o.failure.empty()) return;
          }
      });
}

SuiteResult suite_rees_independence(const VerifyOptions& opt) {
  auto corpus = corpus_monoids(12, 30, opt.random_size, opt.seed);
  std::vector<Pvar> family = parse_family({"triv", "sol"});
  return run_over(
      "rees-independence", corpus.size(), [&](size_t i, EntryOutcome& o) {
        const FiniteMonoid& m = corpus[i].monoid;
        GreensData g = greens(m);
        std::mt19937_64 rng(opt.seed * 1315423911u + i);
        for (int trial = 0; trial < 3; ++trial) {
          std::vector<ElementId> perm(m.size);
          for (ElementId x = 0; x < m.size; ++x) perm[x] = x;
          std::shuffle(perm.begin(), perm.end(), rng);
          std::vector<ElementId> flat(static_cast<size_t>(m.size) * m.size);
          for (ElementId x = 0; x < m.size; ++x)
            for (ElementId y = 0; y < m.size; ++y)
              flat[static_cast<size_t>(perm[x]) * m.size + perm[y]] =
                  perm[m.mul(x, y)];
          FiniteMonoid pm = table_from_flat(
              m.size, std::move(flat),
              m.has_identity() ? perm[m.identity] : kNone, {}, false);
          GreensData pg = greens(pm);
          for (int j = 0; j < g.num_j; ++j) {
            if (!g.j_regular[j]) continue;
            ReesRepresentation rep = rees_representation(m, g, j);
            int pj = pg.j_class[perm[g.j_members[j][0]]];
            ReesRepresentation prep = rees_representation(pm, pg, pj);
            for (const Pvar& h : family) {
              Congruence base =
                  ggm_congruence(m, g, rep, h_radical_set(rep.group, h));
              Congruence moved =
                  ggm_congruence(pm, pg, prep, h_radical_set(prep.group, h));
              // pull the relabeled congruence back along the permutation
              std::vector<int> pulled(m.size);
              for (ElementId x = 0; x < m.size; ++x)
                pulled[x] = moved.class_of[perm[x]];
              expect(o, canonical_partition(pulled) == base,
                     corpus[i].name +
                         ": radical congruence depends on the labeling");
            }
          }
        }
      });
}

SuiteResult suite_zoo_roundtrip(const VerifyOptions&) {
  const auto& entries = zoo_catalogue();
  return run_over("zoo-roundtrip", entries.size(), [&](size_t i,
                                                       EntryOutcome& o) {
    const ZooEntry& e = entries[i];
    if (e.kind == ZooKind::category) {
      FiniteCategory c = zoo_category(e.name);
      FiniteCategory back = category_from_json(category_to_json(c));
      expect(o,
             back.num_objects == c.num_objects && back.src == c.src &&
                 back.dst == c.dst &&
                 back.identity_arrow == c.identity_arrow &&
                 back.compose_table == c.compose_table,
             e.name + ": category does not round-trip");
    } else {
      FiniteMonoid m = zoo_monoid(e.name);
      FiniteMonoid back = monoid_from_json(monoid_to_json(m));
      expect(o, tables_equal(back, m) && back.labels == m.labels,
             e.name + ": monoid does not round-trip");
      if (e.kind == ZooKind::group) {
        FiniteGroup gr = group_from_json(monoid_to_json(m));
        expect(o, tables_equal(gr.monoid, m), e.name + ": group loader");
      }
    }
  });
}

}  // namespace

const std::vector<std::pair<std::string, SuiteFn>>& verify_registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> registry = {
      {"greens-oracle", suite_greens_oracle},
      {"rees-coords", suite_rees_coords},
      {"radical-sylow", suite_radical_sylow},
      {"group-props", suite_group_props},
      {"radcong-idempotents", suite_radcong_idempotents},
      {"maximality", suite_maximality},
      {"membership", suite_membership},
      {"putcha-schutzenberger", suite_putcha_schutzenberger},
      {"forgotten", suite_forgotten},
      {"LHtocd", suite_lhtocd},
      {"toconsolidate", suite_toconsolidate},
      {"technical", suite_technical},
      {"kernelin", suite_kernelin},
      {"passtocat", suite_passtocat},
      {"supertech", suite_supertech},
      {"comp", suite_comp},
      {"jrel-local", suite_jrel_local},
      {"mpq-chain", suite_mpq_chain},
      {"ggm-property", suite_ggm_property},
      {"congruence-lattice", suite_congruence_lattice},
      {"rees-independence", suite_rees_independence},
      {"zoo-roundtrip", suite_zoo_roundtrip},
  };
  return registry;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opt) {
  for (const auto& [n, fn] : verify_registry())
    if (n == name) return fn(opt);
  fail("UnknownName", "no suite named " + name);
}

std::vector<SuiteResult> run_all_suites(const VerifyOptions& opt) {
  std::vector<SuiteResult> out;
  for (const auto& [n, fn] : verify_registry()) out.push_back(fn(opt));
  return out;
}

}  // namespace semicat
