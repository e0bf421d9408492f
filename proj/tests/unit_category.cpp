#include <doctest.h>

#include <functional>

#include "semicat/category.hpp"
#include "semicat/lh.hpp"
#include "semicat/zoo.hpp"

using namespace semicat;

namespace {

bool fails_with(const std::string& code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("category validation") {
  CHECK(zoo_category("trivial_cat").num_arrows() == 1);
  // a monoid as a one-object category round-trips its table
  FiniteMonoid b21 = zoo_monoid("b21");
  FiniteCategory c = cat_from_monoid(b21);
  CHECK(c.num_arrows() == 6);
  CHECK(local_monoid_at(c, 0).monoid.table == b21.table);

  // composite of u: 0 -> 1 with id1
  FiniteCategory two = zoo_category("two_object_arrow_cat");
  CHECK(two.compose(2, 1) == 2);

  // missing composite entry
  CHECK(fails_with("BadComposition", [] {
    category_from_parts(2, {{0, 0}, {1, 1}, {0, 1}}, {0, 1},
                        {{{0, 0}, 0}, {{1, 1}, 1}, {{0, 2}, 2}});
  }));
  // identity arrow living at the wrong object
  CHECK(fails_with("BadIdentity", [] {
    category_from_parts(2, {{0, 0}, {1, 1}, {0, 1}}, {0, 0},
                        {{{0, 0}, 0}, {{1, 1}, 1}, {{0, 2}, 2}, {{2, 1}, 2}});
  }));
}

TEST_CASE("local monoids of categories") {
  FiniteCategory two = zoo_category("two_object_arrow_cat");
  CHECK(local_monoid_at(two, 0).monoid.size == 1);
  CHECK(local_monoid_at(two, 1).monoid.size == 1);

  FiniteCategory mix = zoo_category("c2_triv_cat");
  CHECK(monoids_isomorphic(local_monoid_at(mix, 0).monoid, zoo_monoid("c2")));
  CHECK(local_monoid_at(mix, 1).monoid.size == 1);
}

TEST_CASE("consolidation") {
  Consolidation triv = consolidation(zoo_category("trivial_cat"));
  CHECK(triv.monoid.size == 3);
  // the local identity stays a non-identity idempotent
  CHECK(triv.monoid.is_idempotent(0));
  CHECK(triv.monoid.identity == triv.one);
  CHECK(triv.monoid.mul(0, triv.one) == 0);

  FiniteCategory two = zoo_category("two_object_arrow_cat");
  Consolidation cons = consolidation(two);
  CHECK(cons.monoid.size == 5);
  ElementId u = 2;
  CHECK(cons.monoid.mul(u, u) == cons.zero);
  CHECK(cons.monoid.mul(0, u) == u);       // id0 · u = u
  CHECK(cons.monoid.mul(u, 1) == u);       // u · id1 = u
  CHECK(cons.monoid.mul(1, u) == cons.zero);  // id1 · u undefined -> 0

  // size is |Arr(C)| + 2, and the table passes full monoid validation
  for (const char* name : {"parallel_pair_cat", "path3_cat", "c2_triv_cat"}) {
    FiniteCategory c = zoo_category(name);
    Consolidation k = consolidation(c);
    CHECK(k.monoid.size == c.num_arrows() + 2);
    CHECK_NOTHROW(table_from_flat(k.monoid.size, k.monoid.table,
                                  k.monoid.identity, {}, true));
  }
}

TEST_CASE("category congruences and quotients") {
  FiniteCategory c2cat = cat_from_monoid(zoo_monoid("c2"));
  CatCongruence universal = cat_canonical_partition({0, 0});
  CatQuotient q = cat_quotient(c2cat, universal);
  CHECK(q.category.num_arrows() == 1);

  FiniteCategory two = zoo_category("two_object_arrow_cat");
  CatQuotient idq = cat_quotient(two, cat_trivial_congruence(3));
  CHECK(idq.category.num_arrows() == 3);

  // u and id0 are not coterminal: merging them is rejected
  CHECK(fails_with("NotCoterminal",
                   [&] { cat_principal_congruence(two, 0, 2); }));
  CatCongruence bad;
  bad.class_of = {0, 1, 0};
  bad.num_classes = 2;
  CHECK(fails_with("NonCoterminalClass",
                   [&] { validate_cat_congruence(two, bad); }));

  // parallel arrows can be merged
  FiniteCategory par = zoo_category("parallel_pair_cat");
  CatCongruence merge = cat_principal_congruence(par, 2, 3);
  CHECK(merge.num_classes == 3);
  CHECK(cat_quotient(par, merge).category.num_arrows() == 3);
}

TEST_CASE("is_lh_morphism_cat") {
  Pvar triv = parse_pvar("triv");
  Pvar p2 = parse_pvar("p:2");

  FiniteCategory mix = zoo_category("c2_triv_cat");
  CatQuotient idq = cat_quotient(mix, cat_trivial_congruence(4));
  CHECK(is_lh_morphism_cat(idq.projection, triv));

  // merging the C2 at object 0 is an LH-morphism for H = p:2 but not
  // for the trivial pseudovariety
  CatCongruence merge = cat_principal_congruence(mix, 0, 1);
  CatQuotient q = cat_quotient(mix, merge);
  CHECK(is_lh_morphism_cat(q.projection, p2));
  CHECK_FALSE(is_lh_morphism_cat(q.projection, triv));
}

TEST_CASE("mpq detection and factorization") {
  FiniteCategory c4cat = zoo_category("c4_cat");

  // collapse of exactly one minimal pair
  CatCongruence mod2 = cat_principal_congruence(c4cat, 0, 2);
  CHECK(is_mpq(cat_quotient(c4cat, mod2).projection));

  // the universal congruence factors through mod-C2
  CatCongruence universal = cat_canonical_partition({0, 0, 0, 0});
  CatQuotient to_point = cat_quotient(c4cat, universal);
  CHECK_FALSE(is_mpq(to_point.projection));

  CatQuotient idq = cat_quotient(c4cat, cat_trivial_congruence(4));
  CHECK(fails_with("Injective", [&] { is_mpq(idq.projection); }));

  // identity factors into the empty chain; an MPQ factors into itself
  CHECK(mpq_factorize(idq.projection).empty());
  std::vector<CatMorphism> single =
      mpq_factorize(cat_quotient(c4cat, mod2).projection);
  REQUIRE(single.size() == 1);
  CHECK(single[0].arrow_map == cat_quotient(c4cat, mod2).projection.arrow_map);

  // C4 -> 1 factors in two MPQ steps through C2
  std::vector<CatMorphism> chain = mpq_factorize(to_point.projection);
  REQUIRE(chain.size() == 2);
  CHECK(chain[0].target.num_arrows() == 2);
  for (const CatMorphism& f : chain) CHECK(is_mpq(f));
  CatMorphism acc = compose_cat_morphisms(chain[0], chain[1]);
  CHECK(acc.arrow_map == to_point.projection.arrow_map);
}

TEST_CASE("mps on monoids") {
  FiniteMonoid c4 = zoo_monoid("c4");
  MonoidMorphism mod2 = quotient_morphism(c4, principal_congruence(c4, 0, 2));
  CHECK(is_mps(mod2));
  MonoidMorphism collapse = quotient_morphism(c4, universal_congruence(4));
  CHECK_FALSE(is_mps(collapse));
}
