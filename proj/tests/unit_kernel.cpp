#include <doctest.h>

#include "semicat/kernel.hpp"
#include "semicat/lh.hpp"
#include "semicat/supertech.hpp"
#include "semicat/zoo.hpp"

using namespace semicat;

TEST_CASE("kernel of the collapse onto the trivial monoid") {
  // K has one object (1,1) and its local monoid recovers M, because the
  // liftings m_L = m_R = 1 separate everything
  FiniteMonoid m = zoo_monoid("t2");
  MonoidMorphism phi = quotient_morphism(m, universal_congruence(m.size));
  KernelCategory K = kernel_category(phi);
  CHECK(K.objects.size() == 1);
  CHECK(K.cat.num_arrows() == m.size);
  CHECK(monoids_isomorphic(local_monoid_at(K.cat, 0).monoid, m));
}

TEST_CASE("kernel of the identity on the trivial category") {
  FiniteCategory triv = zoo_category("trivial_cat");
  CatQuotient idq = cat_quotient(triv, cat_trivial_congruence(1));
  KernelCategory K = kernel_category(idq.projection);
  CHECK(K.objects.size() == 1);
  CHECK(K.cat.num_arrows() == 1);
}

TEST_CASE("kernel of C4 -> C2") {
  FiniteMonoid c4 = zoo_monoid("c4");
  MonoidMorphism phi = quotient_morphism(c4, principal_congruence(c4, 0, 2));
  KernelCategory K = kernel_category(phi);
  CHECK(K.objects.size() == 4);  // pairs over C2
  for (int ob = 0; ob < 4; ++ob) {
    FiniteMonoid local = local_monoid_at(K.cat, ob).monoid;
    CAPTURE(ob);
    CHECK(monoids_isomorphic(local, zoo_monoid("c2")));
  }
  // every local monoid is a 2-group
  CHECK(ell_membership(K.cat, parse_pvar("p:2")));
}

TEST_CASE("kernel object cap") {
  FiniteMonoid c4 = zoo_monoid("c4");
  MonoidMorphism phi = quotient_morphism(c4, principal_congruence(c4, 0, 2));
  CHECK_THROWS_AS(kernel_category(phi, 3), Error);
}
