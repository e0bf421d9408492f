#include <doctest.h>

#include "semicat/greens.hpp"
#include "semicat/zoo.hpp"

using namespace semicat;

TEST_CASE("greens on the trivial monoid") {
  GreensData g = greens(zoo_monoid("trivial"));
  CHECK(g.num_j == 1);
  CHECK(g.j_regular[0] == 1);
}

TEST_CASE("greens on b21") {
  FiniteMonoid b21 = zoo_monoid("b21");
  GreensData g = greens(b21);
  // three J-classes {1} > {a,b,ab,ba} > {0}, all regular
  CHECK(g.num_j == 3);
  int top = g.j_class[0], mid = g.j_class[1], bot = g.j_class[5];
  CHECK(g.j_class[2] == mid);
  CHECK(g.j_class[3] == mid);
  CHECK(g.j_class[4] == mid);
  CHECK(g.j_members[mid].size() == 4);
  CHECK(g.j_regular[top] == 1);
  CHECK(g.j_regular[mid] == 1);
  CHECK(g.j_regular[bot] == 1);
  CHECK(g.leq_j(bot, mid));
  CHECK(g.leq_j(mid, top));
  CHECK(g.leq_j(bot, top));
  CHECK_FALSE(g.leq_j(top, mid));
  // H-classes in the middle J-class are singletons
  for (ElementId x : g.j_members[mid])
    for (ElementId y : g.j_members[mid])
      if (x != y) CHECK(g.h_class[x] != g.h_class[y]);
  CHECK(g.idempotents == std::vector<ElementId>{0, 3, 4, 5});
}

TEST_CASE("greens on a cyclic group") {
  GreensData g = greens(zoo_monoid("c3"));
  CHECK(g.num_j == 1);
  CHECK(g.num_h == 1);
  CHECK(g.j_regular[0] == 1);
}

TEST_CASE("non-regular J-class") {
  // {1, a, 0} with a^2 = 0: the class of a has no idempotent
  FiniteMonoid m = zoo_monoid("n2_1");
  GreensData g = greens(m);
  CHECK(g.num_j == 3);
  CHECK(g.j_regular[g.j_class[1]] == 0);
  CHECK(g.j_regular[g.j_class[0]] == 1);
  CHECK(g.j_regular[g.j_class[2]] == 1);
}

TEST_CASE("scc computation equals the ideal oracle on the zoo") {
  for (const auto& entry : zoo_monoids_upto(50)) {
    const std::string& name = entry.first;
    const FiniteMonoid& m = entry.second;
    CAPTURE(name);
    CHECK(greens_equal(greens(m), greens_by_ideals(m)));
  }
}
