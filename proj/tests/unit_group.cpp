#include <doctest.h>

#include <algorithm>
#include <functional>

#include "semicat/greens.hpp"
#include "semicat/group.hpp"
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

ElementId find_of_order(const FiniteGroup& g, int order) {
  for (ElementId x = 0; x < g.size(); ++x) {
    int k = 1;
    ElementId cur = x;
    while (cur != g.identity()) {
      cur = g.mul(cur, x);
      ++k;
    }
    if (k == order) return x;
  }
  return kNone;
}

}  // namespace

TEST_CASE("group loader rejects non-groups") {
  CHECK(fails_with("NotAGroup",
                   [] { group_from_monoid(zoo_monoid("u1")); }));
  CHECK(group_from_monoid(zoo_monoid("s3")).size() == 6);
}

TEST_CASE("maximal subgroups") {
  FiniteMonoid triv = zoo_monoid("trivial");
  CHECK(maximal_subgroup(triv, greens(triv), 0).size() == 1);

  FiniteMonoid b21 = zoo_monoid("b21");
  CHECK(maximal_subgroup(b21, greens(b21), 3).size() == 1);

  FiniteMonoid c3z = zoo_monoid("c3_0");
  FiniteGroup h1 = maximal_subgroup(c3z, greens(c3z), 0);
  CHECK(h1.size() == 3);
  CHECK(monoids_isomorphic(h1.monoid, zoo_monoid("c3")));
}

TEST_CASE("subgroup generation and normal closures") {
  FiniteGroup s3 = zoo_group("s3");
  CHECK(subgroup_generated(s3, {}).size() == 1);

  ElementId three_cycle = find_of_order(s3, 3);
  ElementId transposition = find_of_order(s3, 2);
  REQUIRE(three_cycle != kNone);
  REQUIRE(transposition != kNone);
  CHECK(subgroup_generated(s3, {three_cycle}).size() == 3);
  CHECK(subgroup_generated(s3, {three_cycle, transposition}).size() == 6);

  CHECK(normal_closure_set(s3, s3.identity()).size() == 1);
  CHECK(normal_closure_set(s3, three_cycle).size() == 3);
  CHECK(normal_closure_set(s3, transposition).size() == 6);
}

TEST_CASE("normal subgroup enumeration") {
  CHECK(all_normal_subgroup_sets(zoo_group("c5")).size() == 2);
  CHECK(all_normal_subgroup_sets(zoo_group("s3")).size() == 3);
  CHECK(all_normal_subgroup_sets(zoo_group("c2xc2")).size() == 5);
  CHECK(all_normal_subgroup_sets(zoo_group("q8")).size() == 6);
}

TEST_CASE("h_radical") {
  FiniteGroup s3 = zoo_group("s3");
  CHECK(h_radical_set(s3, parse_pvar("triv")).size() == 1);
  // the 3-group radical and the nilpotent radical of S3 are both A3
  Subgroup rad3 = h_radical_set(s3, parse_pvar("p:3"));
  CHECK(rad3.size() == 3);
  CHECK(h_radical_set(s3, parse_pvar("nil")) == rad3);
  CHECK(h_radical_set(s3, parse_pvar("sol")).size() == 6);
  CHECK(h_radical_set(s3, parse_pvar("p:2")).size() == 1);

  Pvar bounded;  // deliberately mislabeled: not a Fitting class
  bounded.name = "small";
  bounded.kind = PvarKind::group;
  bounded.fitting = false;
  bounded.member = [](const FiniteMonoid& m) { return m.size <= 2; };
  CHECK(fails_with("NotFitting", [&] { h_radical_set(s3, bounded); }));
}

TEST_CASE("sylow intersections match radicals") {
  for (const char* name : {"s3", "d4", "a4", "s4", "q8", "c6"}) {
    FiniteGroup g = zoo_group(name);
    for (int p : {2, 3}) {
      CAPTURE(name);
      CAPTURE(p);
      CHECK(h_radical_set(g, pvar_p_group(p)) == sylow_p_intersection(g, p));
    }
  }
}

TEST_CASE("builtin group predicates") {
  FiniteMonoid triv = zoo_monoid("trivial");
  for (const char* n : {"triv", "p:2", "p:3", "nil", "sol", "all"})
    CHECK(parse_pvar(n).test(triv));

  FiniteMonoid s3 = zoo_monoid("s3");
  CHECK(parse_pvar("sol").test(s3));
  CHECK_FALSE(parse_pvar("nil").test(s3));
  CHECK_FALSE(parse_pvar("p:2").test(s3));
  CHECK(parse_pvar("nil").test(zoo_monoid("q8")));
  CHECK(parse_pvar("p:2").test(zoo_monoid("d4")));

  CHECK(fails_with("UnknownPredicate", [] { parse_pvar("p:4"); }));
  CHECK(fails_with("UnknownPredicate", [] { parse_pvar("zzz"); }));
}

TEST_CASE("monoid predicates") {
  Pvar sl = parse_pvar("sl"), ds = parse_pvar("ds");
  CHECK(sl.test(zoo_monoid("u1")));
  CHECK(sl.test(zoo_monoid("sl3")));
  CHECK_FALSE(sl.test(zoo_monoid("c2")));
  CHECK_FALSE(sl.test(zoo_monoid("b21")));

  // B2^1 is not in DS: a·a = 0 leaves the middle J-class
  CHECK_FALSE(ds.test(zoo_monoid("b21")));
  CHECK(ds.test(zoo_monoid("u1")));
  CHECK(ds.test(zoo_monoid("rb22_1")));
  CHECK(ds.test(zoo_monoid("s3")));
  CHECK(ds.test(zoo_monoid("c3_0")));

  Pvar dsh = parse_pvar("dsh:triv");
  CHECK(dsh.test(zoo_monoid("u1")));
  CHECK_FALSE(dsh.test(zoo_monoid("s3")));
}

TEST_CASE("q8 sanity") {
  FiniteGroup q8 = zoo_group("q8");
  CHECK(q8.size() == 8);
  CHECK(is_nilpotent(q8));
  bool abelian = true;
  for (ElementId x = 0; x < 8; ++x)
    for (ElementId y = 0; y < 8; ++y)
      if (q8.mul(x, y) != q8.mul(y, x)) abelian = false;
  CHECK_FALSE(abelian);
  int order2 = 0;
  for (ElementId x = 0; x < 8; ++x)
    if (x != q8.identity() && q8.mul(x, x) == q8.identity()) ++order2;
  CHECK(order2 == 1);
}

TEST_CASE("series") {
  FiniteGroup s4 = zoo_group("s4");
  auto ds = derived_series(s4);
  // S4 > A4 > V4 > 1
  REQUIRE(ds.size() == 4);
  CHECK(ds[1].size() == 12);
  CHECK(ds[2].size() == 4);
  CHECK(ds[3].size() == 1);
  CHECK(is_solvable(s4));
  CHECK_FALSE(is_nilpotent(s4));
}
