#include <doctest.h>

#include "semicat/lh.hpp"
#include "semicat/supertech.hpp"
#include "semicat/zoo.hpp"

using namespace semicat;

TEST_CASE("ell membership") {
  Pvar sl = parse_pvar("sl");
  Pvar mtriv = parse_pvar("mtriv");
  Pvar p2 = parse_pvar("p:2");

  CHECK(ell_membership(zoo_category("trivial_cat"), mtriv));
  CHECK(ell_membership(zoo_category("two_object_arrow_cat"), sl));
  CHECK_FALSE(ell_membership(zoo_category("b21_cat"), sl));
  // group-kind: local monoids must be groups in the class
  CHECK(ell_membership(cat_from_monoid(zoo_monoid("c2")), p2));
  CHECK_FALSE(ell_membership(cat_from_monoid(zoo_monoid("u1")), p2));
}

TEST_CASE("ell malcev membership") {
  Pvar triv = parse_pvar("triv");
  Pvar p2 = parse_pvar("p:2");
  Pvar sl = parse_pvar("sl");
  CHECK(ell_malcev_membership(zoo_category("two_object_arrow_cat"), triv, sl));
  CHECK(ell_malcev_membership(zoo_category("c2_triv_cat"), p2, sl));
  CHECK_FALSE(ell_malcev_membership(zoo_category("c2_triv_cat"), triv, sl));
  CHECK_FALSE(ell_malcev_membership(zoo_category("b21_cat"), p2, sl));
}

TEST_CASE("supertech on the trivial category") {
  Pvar triv = parse_pvar("triv");
  SupertechResult res =
      supertech_construct(zoo_category("trivial_cat"), triv, nullptr);
  CHECK(res.quotient.num_arrows() == 1);
  CHECK(res.congruence.is_trivial());
}

TEST_CASE("supertech on a one-object category is the canonical quotient") {
  Pvar p2 = parse_pvar("p:2");
  FiniteMonoid c4 = zoo_monoid("c4");
  SupertechResult res = supertech_construct(cat_from_monoid(c4), p2, nullptr);
  Congruence canon = lh_canonical_congruence(c4, p2);
  CHECK(res.congruence.class_of ==
        std::vector<int>(canon.class_of.begin(), canon.class_of.end()));
  CHECK(res.quotient.num_arrows() == canon.num_classes);
}

TEST_CASE("supertech collapses the C2 component under p:2") {
  Pvar p2 = parse_pvar("p:2");
  Pvar sl = parse_pvar("sl");
  FiniteCategory mix = zoo_category("c2_triv_cat");
  SupertechResult res = supertech_construct(mix, p2, &sl);
  CHECK(local_monoid_at(res.quotient, 0).monoid.size == 1);
  CHECK(local_monoid_at(res.quotient, 1).monoid.size == 1);
  CHECK(is_lh_morphism_cat(res.projection, p2));
  CHECK(ell_membership(res.quotient, sl));
}
