#include <doctest.h>

#include <functional>

#include "semicat/monoid.hpp"
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

TEST_CASE("monoid_from_table validates") {
  CHECK(monoid_from_table({{0}}, 0).size == 1);

  // U1: two-element semilattice
  FiniteMonoid u1 = monoid_from_table({{0, 1}, {1, 1}}, 0);
  CHECK(u1.mul(1, 1) == 1);
  CHECK(u1.idempotents().size() == 2);

  CHECK(fails_with("BadIdentity",
                   [] { monoid_from_table({{0, 1}, {1, 1}}, 1); }));
  CHECK(fails_with("IndexOutOfRange",
                   [] { monoid_from_table({{0, 7}, {1, 1}}, 0); }));
  // (1·2)·2 = 0 but 1·(2·2) = 1 in this square
  CHECK(fails_with("NonAssociative", [] {
    monoid_from_table({{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}, 0);
  }));
}

TEST_CASE("b21 accepted with six elements") {
  FiniteMonoid b21 = zoo_monoid("b21");
  CHECK(b21.size == 6);
  // aba = a, bab = b, a^2 = b^2 = 0
  ElementId a = 1, b = 2, zero = 5;
  CHECK(b21.mul(b21.mul(a, b), a) == a);
  CHECK(b21.mul(b21.mul(b, a), b) == b);
  CHECK(b21.mul(a, a) == zero);
  CHECK(b21.mul(b, b) == zero);
}

TEST_CASE("monoid_from_generators") {
  // no generators: the trivial monoid on any ambient set
  FiniteMonoid t = monoid_from_generators({});
  CHECK(t.size == 1);

  // a single constant map: {id, c} with c idempotent
  FiniteMonoid c = monoid_from_generators({{0, 0}});
  CHECK(c.size == 2);
  CHECK(c.identity == 0);
  CHECK(c.mul(1, 1) == 1);

  // matrix-unit style maps on a 5-point set with sink 0 generate B2;
  // with the adjoined identity the result is B2^1
  FiniteMonoid b2 =
      monoid_from_generators({{0, 2, 0, 0, 0}, {0, 0, 1, 0, 0}});
  CHECK(b2.size == 6);
  CHECK(monoids_isomorphic(b2, zoo_monoid("b21")));

  CHECK(fails_with("DomainMismatch",
                   [] { monoid_from_generators({{0, 1}, {0, 1, 2}}); }));
  CHECK(fails_with("SizeLimitExceeded", [] {
    monoid_from_generators({{1, 2, 3, 0}, {1, 0, 2, 3}}, 5);
  }));
}

TEST_CASE("local_monoid") {
  FiniteMonoid b21 = zoo_monoid("b21");
  // at the identity: the whole monoid
  LocalMonoid whole = local_monoid(b21, 0);
  CHECK(whole.monoid.size == 6);
  CHECK(tables_equal(whole.monoid, b21));

  // at ab: the two-element semilattice {ab, 0}
  LocalMonoid at_ab = local_monoid(b21, 3);
  CHECK(at_ab.monoid.size == 2);
  CHECK(at_ab.embedding == std::vector<ElementId>{3, 5});
  CHECK(at_ab.monoid.is_idempotent(0));
  CHECK(at_ab.monoid.is_idempotent(1));

  // in a group only the identity is idempotent and eGe = G
  FiniteMonoid c3 = zoo_monoid("c3");
  CHECK(local_monoid(c3, 0).monoid.size == 3);
  CHECK(fails_with("NotIdempotent", [&] { local_monoid(c3, 1); }));
}

TEST_CASE("direct products and isomorphism search") {
  FiniteMonoid c2 = zoo_monoid("c2");
  FiniteMonoid c4 = zoo_monoid("c4");
  FiniteMonoid c2xc2 = direct_product(c2, c2);
  CHECK(c2xc2.size == 4);
  CHECK_FALSE(monoids_isomorphic(c4, c2xc2));
  CHECK(monoids_isomorphic(c2xc2, zoo_monoid("c2xc2")));
  CHECK(monoids_isomorphic(zoo_monoid("t2"), zoo_monoid("t2")));
  CHECK_FALSE(monoids_isomorphic(zoo_monoid("u1"), c2));
}
