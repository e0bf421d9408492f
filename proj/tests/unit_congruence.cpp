#include <doctest.h>

#include <functional>

#include "semicat/congruence.hpp"
#include "semicat/group.hpp"
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

TEST_CASE("principal congruences") {
  FiniteMonoid triv = zoo_monoid("trivial");
  CHECK(fails_with("SamePair", [&] { principal_congruence(triv, 0, 0); }));

  FiniteMonoid u1 = zoo_monoid("u1");
  Congruence c = principal_congruence(u1, 0, 1);
  CHECK(c.num_classes == 1);

  // on B2^1 merging ab with 0 collapses the whole 0-minimal ideal
  FiniteMonoid b21 = zoo_monoid("b21");
  Congruence pc = principal_congruence(b21, 3, 5);
  CHECK(pc.num_classes == 2);
  CHECK(pc.class_of == std::vector<int>{0, 1, 1, 1, 1, 1});
}

TEST_CASE("all_congruences") {
  CHECK(all_congruences(zoo_monoid("trivial")).size() == 1);
  CHECK(all_congruences(zoo_monoid("u1")).size() == 2);
  CHECK(all_congruences(zoo_monoid("c2")).size() == 2);
  // congruences of a group are its normal subgroups: C4 has three
  CHECK(all_congruences(zoo_monoid("c4")).size() == 3);
  CHECK(all_congruences(zoo_monoid("b21")).size() == 3);

  FiniteMonoid t3 = zoo_monoid("t3");
  CHECK(fails_with("SizeLimitExceeded", [&] { all_congruences(t3); }));
}

TEST_CASE("quotients") {
  FiniteMonoid b21 = zoo_monoid("b21");
  QuotientResult iso = quotient(b21, trivial_congruence(6));
  CHECK(tables_equal(iso.monoid, FiniteMonoid{b21.size, b21.identity,
                                              b21.table, {}}));
  QuotientResult collapse = quotient(b21, universal_congruence(6));
  CHECK(collapse.monoid.size == 1);

  QuotientResult u1ish = quotient(b21, principal_congruence(b21, 3, 5));
  CHECK(u1ish.monoid.size == 2);
  ElementId z = u1ish.projection[5];
  CHECK(u1ish.monoid.mul(z, z) == z);
  CHECK(monoids_isomorphic(u1ish.monoid, zoo_monoid("u1")));

  // a partition that is no congruence is rejected
  Congruence bad;
  bad.class_of = {0, 0, 1, 1, 1, 1};
  bad.num_classes = 2;
  CHECK(fails_with("IncompatiblePartition", [&] { quotient(b21, bad); }));
}

TEST_CASE("is_lh_morphism") {
  Pvar triv = parse_pvar("triv");
  Pvar p2 = parse_pvar("p:2");

  // identity morphism: preimages are singletons
  FiniteMonoid c3 = zoo_monoid("c3");
  MonoidMorphism id = quotient_morphism(c3, trivial_congruence(3));
  CHECK(is_lh_morphism(id, triv));

  // B2^1 -> U1: the preimage of the zero is B2, whose local monoids
  // {e, 0} are not groups, so this is no LH-morphism for any H
  FiniteMonoid b21 = zoo_monoid("b21");
  MonoidMorphism onto_u1 =
      quotient_morphism(b21, principal_congruence(b21, 3, 5));
  CHECK_FALSE(is_lh_morphism(onto_u1, triv));
  CHECK_FALSE(is_lh_morphism(onto_u1, parse_pvar("all")));

  // C4 -> C2: the preimage of the identity is C2, a 2-group
  FiniteMonoid c4 = zoo_monoid("c4");
  MonoidMorphism mod2 = quotient_morphism(c4, principal_congruence(c4, 0, 2));
  CHECK(mod2.target.size == 2);
  CHECK(is_lh_morphism(mod2, p2));
  CHECK_FALSE(is_lh_morphism(mod2, triv));
}

TEST_CASE("is_in_lh") {
  Pvar triv = parse_pvar("triv");
  Pvar all = parse_pvar("all");
  CHECK(is_in_lh(zoo_monoid("c3"), all));
  CHECK_FALSE(is_in_lh(zoo_monoid("c3"), triv));
  CHECK(is_in_lh(zoo_monoid("trivial"), triv));
  // the local monoid of U1 at its identity is U1 itself, not a group
  CHECK_FALSE(is_in_lh(zoo_monoid("u1"), triv));
  CHECK_FALSE(is_in_lh(zoo_monoid("b21"), triv));
  CHECK(fails_with("WrongPredicateKind",
                   [&] { is_in_lh(zoo_monoid("c2"), parse_pvar("sl")); }));
}

TEST_CASE("membership in LG means every local monoid is a group") {
  Pvar all = parse_pvar("all");
  for (const auto& entry : zoo_monoids_upto(30)) {
    const std::string& name = entry.first;
    const FiniteMonoid& m = entry.second;
    bool locals_are_groups = true;
    for (ElementId e = 0; e < m.size; ++e) {
      if (!m.is_idempotent(e)) continue;
      if (!is_group_table(local_monoid(m, e).monoid))
        locals_are_groups = false;
    }
    CAPTURE(name);
    CHECK(is_in_lh(m, all) == locals_are_groups);
  }
}
