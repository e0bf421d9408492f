#include <doctest.h>

#include <functional>

#include "semicat/rees.hpp"
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

TEST_CASE("a group is its own single-H-class J-class") {
  FiniteMonoid c4 = zoo_monoid("c4");
  GreensData g = greens(c4);
  ReesRepresentation rep = rees_representation(c4, g, 0);
  CHECK(rep.num_a() == 1);
  CHECK(rep.num_b() == 1);
  CHECK(rep.group.size() == 4);
  CHECK(rep.c_entry(0, 0) == rep.group.identity());
  for (ElementId x = 0; x < 4; ++x) {
    ReesElement r = rep.coord(x);
    CHECK(r.a == 0);
    CHECK(r.b == 0);
    CHECK(rep.group.embedding[r.g] == x);
  }
}

TEST_CASE("b21 middle J-class coordinates") {
  FiniteMonoid b21 = zoo_monoid("b21");
  GreensData g = greens(b21);
  int mid = g.j_class[1];
  ReesRepresentation rep = rees_representation(b21, g, mid);
  CHECK(rep.num_a() == 2);
  CHECK(rep.num_b() == 2);
  CHECK(rep.group.size() == 1);
  CHECK(rep.base_idempotent == 3);  // ab is the least idempotent of the class
  // the structure matrix is a permutation pattern over {1, zero}
  int entries = 0;
  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < 2; ++a)
      if (rep.c_entry(b, a) != kNone) ++entries;
  CHECK(entries == 2);
  CHECK(rep.c_entry(rep.b_base, rep.a_base) == rep.group.identity());
  // frozen from the ideal structure: C = [[zero, 1], [1, zero]]
  CHECK(rep.c_entry(0, 0) == kNone);
  CHECK(rep.c_entry(0, 1) == 0);
  CHECK(rep.c_entry(1, 0) == 0);
  CHECK(rep.c_entry(1, 1) == kNone);
}

TEST_CASE("singleton regular J-class of u1") {
  FiniteMonoid u1 = zoo_monoid("u1");
  GreensData g = greens(u1);
  int j0 = g.j_class[1];
  ReesRepresentation rep = rees_representation(u1, g, j0);
  CHECK(rep.num_a() == 1);
  CHECK(rep.num_b() == 1);
  CHECK(rep.group.size() == 1);
  CHECK(rep.c_entry(0, 0) == rep.group.identity());
}

TEST_CASE("non-regular classes are rejected") {
  FiniteMonoid m = zoo_monoid("n2_1");
  GreensData g = greens(m);
  CHECK(fails_with("NotRegular",
                   [&] { rees_representation(m, g, g.j_class[1]); }));
}

TEST_CASE("eta domain") {
  FiniteMonoid b21 = zoo_monoid("b21");
  GreensData g = greens(b21);
  int mid = g.j_class[1];
  ReesRepresentation rep = rees_representation(b21, g, mid);
  CHECK_FALSE(eta(rep, g, 1).zero);  // a lies in J
  CHECK(eta(rep, g, 5).zero);        // 0 lies in F(J)
  CHECK(fails_with("NotInDomain", [&] { eta(rep, g, 0); }));  // 1 >_J J
}

TEST_CASE("psi reduces the group coordinate") {
  FiniteMonoid c4 = zoo_monoid("c4");
  GreensData g = greens(c4);
  ReesRepresentation rep = rees_representation(c4, g, 0);

  // N = G: all triples collapse onto the identity coset
  Subgroup whole{0, 1, 2, 3};
  for (ElementId x = 0; x < 4; ++x)
    CHECK(psi(rep, whole, rep.coord(x)).g == 0);

  // N trivial: injective
  Subgroup triv{0};
  CHECK(psi(rep, triv, rep.coord(3)).g == rep.coord(3).g);

  // N = C2 inside C4: two cosets, canonical least representatives
  Subgroup c2{0, 2};
  CHECK(psi(rep, c2, rep.coord(0)).g == psi(rep, c2, rep.coord(2)).g);
  CHECK(psi(rep, c2, rep.coord(1)).g == psi(rep, c2, rep.coord(3)).g);
  CHECK(psi(rep, c2, rep.coord(0)).g != psi(rep, c2, rep.coord(1)).g);

  Subgroup not_normal{0, 1};  // not even a subgroup of C4
  CHECK(fails_with("NotNormal",
                   [&] { psi(rep, not_normal, rep.coord(0)); }));
}

TEST_CASE("psi is multiplicative for the reduced structure matrix") {
  FiniteMonoid t3 = zoo_monoid("t3");
  GreensData g = greens(t3);
  for (int j = 0; j < g.num_j; ++j) {
    if (!g.j_regular[j]) continue;
    ReesRepresentation rep = rees_representation(t3, g, j);
    for (const Subgroup& n : all_normal_subgroup_sets(rep.group))
      for (ElementId x : rep.j_members)
        for (ElementId y : rep.j_members) {
          ReesElement lhs = rees_mul_mod(rep, n, psi(rep, n, rep.coord(x)),
                                         psi(rep, n, rep.coord(y)));
          ReesElement rhs =
              psi(rep, n, rep.mul(rep.coord(x), rep.coord(y)));
          REQUIRE(lhs == rhs);
        }
  }
}
