#include <doctest.h>

#include <nlohmann/json.hpp>

#include "semicat/json_io.hpp"
#include "semicat/zoo.hpp"

using namespace semicat;
using nlohmann::json;

TEST_CASE("monoid JSON round trip") {
  for (const char* name : {"b21", "u1", "s3", "t3"}) {
    FiniteMonoid m = zoo_monoid(name);
    FiniteMonoid back = monoid_from_json(monoid_to_json(m));
    CAPTURE(name);
    CHECK(tables_equal(back, m));
    CHECK(back.labels == m.labels);
  }
}

TEST_CASE("semigroup identity serializes as null") {
  FiniteMonoid s = semigroup_from_table({{0, 0}, {0, 0}});
  json j = monoid_to_json(s);
  CHECK(j["identity"].is_null());
  FiniteMonoid back = monoid_from_json(j);
  CHECK_FALSE(back.has_identity());
  CHECK(tables_equal(back, s));
}

TEST_CASE("category JSON round trip") {
  for (const char* name :
       {"trivial_cat", "two_object_arrow_cat", "c2_triv_cat", "path3_cat"}) {
    FiniteCategory c = zoo_category(name);
    FiniteCategory back = category_from_json(category_to_json(c));
    CAPTURE(name);
    CHECK(back.num_objects == c.num_objects);
    CHECK(back.src == c.src);
    CHECK(back.dst == c.dst);
    CHECK(back.identity_arrow == c.identity_arrow);
    CHECK(back.compose_table == c.compose_table);
  }
}

TEST_CASE("congruence JSON") {
  Congruence c = congruence_from_json(json{{"classes", {5, 5, 7}}});
  CHECK(c.num_classes == 2);
  CHECK(c.class_of == std::vector<int>{0, 0, 1});
  json out = congruence_to_json(c);
  CHECK(out["classes"] == json({0, 0, 1}));
}

TEST_CASE("parse errors carry the ParseError code") {
  try {
    monoid_from_json(json{{"size", 2}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == "ParseError");
  }
  try {
    monoid_from_json(json{{"table", {{0, 1}, {1, 0}}}, {"size", 3}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == "ParseError");
  }
}

TEST_CASE("group loader verifies invertibility") {
  CHECK_THROWS_AS(group_from_json(monoid_to_json(zoo_monoid("u1"))), Error);
  FiniteGroup g = group_from_json(monoid_to_json(zoo_monoid("q8")));
  CHECK(g.size() == 8);
  CHECK(g.mul(g.inv(3), 3) == g.identity());
}
