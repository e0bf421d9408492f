#include <doctest.h>

#include <functional>

#include "semicat/ggm.hpp"
#include "semicat/lh.hpp"
#include "semicat/zoo.hpp"

using namespace semicat;

TEST_CASE("group case: the radical congruence is the coset partition") {
  FiniteMonoid c4 = zoo_monoid("c4");
  GreensData g = greens(c4);
  Congruence c = ggm_congruence(c4, g, 0, {0, 2});
  CHECK(c.num_classes == 2);
  CHECK(c.class_of == std::vector<int>{0, 1, 0, 1});
  GgmResult q = ggm_quotient(c4, g, 0, {0, 2});
  CHECK(monoids_isomorphic(q.quotient, zoo_monoid("c2")));
}

TEST_CASE("b21 is generalized group mapping at its middle class") {
  FiniteMonoid b21 = zoo_monoid("b21");
  GreensData g = greens(b21);
  int mid = g.j_class[1];
  GgmResult res = ggm_quotient(b21, g, mid, {0});
  CHECK(res.congruence.is_trivial());
  CHECK(tables_equal(res.quotient, FiniteMonoid{b21.size, b21.identity,
                                                b21.table, {}}));
  auto faithful = verify_ggm_property(b21, g, mid, res);
  REQUIRE(faithful.has_value());
  CHECK(*faithful);
}

TEST_CASE("degenerate idempotent contexts collapse u1") {
  // at J = {0} every product x·s·y equals 0, so the congruence is universal;
  // the unrestricted oracle resolves the case the same way
  FiniteMonoid u1 = zoo_monoid("u1");
  GreensData g = greens(u1);
  int j0 = g.j_class[1];
  ReesRepresentation rep = rees_representation(u1, g, j0);
  Congruence c = ggm_congruence(u1, g, rep, {0});
  CHECK(c.is_universal());
  CHECK(ggm_congruence_unrestricted(u1, g, rep, {0}) == c);
}

TEST_CASE("idempotent restriction agrees with the unrestricted definition") {
  for (const char* name : {"b21", "t2", "c3_0", "rb22_1", "s3", "t3"}) {
    FiniteMonoid m = zoo_monoid(name);
    GreensData g = greens(m);
    for (int j = 0; j < g.num_j; ++j) {
      if (!g.j_regular[j]) continue;
      ReesRepresentation rep = rees_representation(m, g, j);
      Subgroup triv{rep.group.identity()};
      CAPTURE(name);
      CHECK(ggm_congruence(m, g, rep, triv) ==
            ggm_congruence_unrestricted(m, g, rep, triv));
    }
  }
}

TEST_CASE("canonical LH congruence") {
  Pvar triv = parse_pvar("triv");
  Pvar p2 = parse_pvar("p:2");
  Pvar all = parse_pvar("all");

  // trivial monoid: nothing to collapse
  CHECK(lh_canonical_congruence(zoo_monoid("trivial"), triv).num_classes == 1);

  // a group: cosets of the radical
  FiniteMonoid c4 = zoo_monoid("c4");
  CHECK(lh_canonical_congruence(c4, p2).is_universal());
  CHECK(lh_canonical_congruence(c4, triv).is_trivial());

  // B2^1 admits no proper LH quotient for any H
  FiniteMonoid b21 = zoo_monoid("b21");
  CHECK(lh_canonical_congruence(b21, triv).is_trivial());
  CHECK(lh_canonical_congruence(b21, all).is_trivial());

  // U1 -> 1 is no LH-morphism (U1 is not in LI: its local monoid at the
  // identity is U1 itself), so only the identity congruence survives
  CHECK(lh_canonical_congruence(zoo_monoid("u1"), triv).is_trivial());
}

TEST_CASE("malcev membership") {
  Pvar triv = parse_pvar("triv");
  Pvar p2 = parse_pvar("p:2");
  Pvar sl = parse_pvar("sl");
  Pvar mtriv = parse_pvar("mtriv");

  // members of V are members of LH (m) V
  CHECK(malcev_membership(zoo_monoid("u1"), triv, sl));
  CHECK(malcev_membership(zoo_monoid("sl3"), triv, sl));

  CHECK_FALSE(malcev_membership(zoo_monoid("b21"), triv, sl));
  CHECK_FALSE(malcev_membership(zoo_monoid("b21"), parse_pvar("all"), sl));

  CHECK(malcev_membership(zoo_monoid("c2"), p2, mtriv));
  CHECK_FALSE(malcev_membership(zoo_monoid("c2"), triv, mtriv));
  CHECK(malcev_membership(zoo_monoid("c3_0"), parse_pvar("p:3"), sl));
  CHECK_FALSE(malcev_membership(zoo_monoid("c3_0"), p2, sl));

  // wrong predicate kinds are rejected
  CHECK_THROWS_AS(malcev_membership(zoo_monoid("u1"), sl, sl), Error);
  CHECK_THROWS_AS(malcev_membership(zoo_monoid("u1"), triv, p2), Error);
}

TEST_CASE("proper normal subgroup at a non-top J-class") {
  // B2^1 x C4: the middle J-class has 16 elements with structure group C4,
  // so N = C2 is proper; expected classes frozen from the unrestricted
  // oracle (2 unit cosets + 2*2*2 reduced coordinates + 1 zero class)
  FiniteMonoid m = direct_product(zoo_monoid("b21"), zoo_monoid("c4"));
  GreensData g = greens(m);
  int mid = g.j_class[1 * 4 + 0];
  CHECK(g.j_members[mid].size() == 16);
  ReesRepresentation rep = rees_representation(m, g, mid);
  CHECK(rep.group.size() == 4);
  ElementId half = kNone;
  for (ElementId x = 0; x < rep.group.size(); ++x)
    if (x != rep.group.identity() && rep.group.mul(x, x) == rep.group.identity())
      half = x;
  REQUIRE(half != kNone);
  Subgroup n{rep.group.identity(), half};
  Congruence c = ggm_congruence(m, g, rep, n);
  CHECK(c.num_classes == 11);
  CHECK(ggm_congruence_unrestricted(m, g, rep, n) == c);
  GgmResult res = ggm_quotient(m, g, mid, n);
  auto ok = verify_ggm_property(m, g, mid, res);
  REQUIRE(ok.has_value());
  CHECK(*ok);
  // under p:2 the whole C4 direction is radical, and the canonical
  // quotient collapses back onto B2^1
  Congruence canon = lh_canonical_congruence(m, parse_pvar("p:2"));
  CHECK(canon.num_classes == 6);
  CHECK(monoids_isomorphic(quotient(m, canon).monoid, zoo_monoid("b21")));
}

TEST_CASE("canonical congruence is the largest LH kernel on small monoids") {
  Pvar triv = parse_pvar("triv");
  for (const char* name : {"u1", "sl3", "c2", "b21", "t2"}) {
    FiniteMonoid m = zoo_monoid(name);
    Congruence canon = lh_canonical_congruence(m, triv);
    for (const Congruence& c : all_congruences(m)) {
      MonoidMorphism phi = quotient_morphism(m, c);
      if (is_lh_morphism(phi, triv)) {
        CAPTURE(name);
        CHECK(finer_or_equal(c, canon));
      }
    }
  }
}
