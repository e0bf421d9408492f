#include "semicat/zoo.hpp"

#include <algorithm>

namespace semicat {

namespace {

FiniteMonoid cyclic(int n) {
  std::vector<std::vector<ElementId>> rows(n, std::vector<ElementId>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) rows[x][y] = (x + y) % n;
  return monoid_from_table(rows, 0);
}

FiniteMonoid brandt_b21() {
  // {1, a, b, ab, ba, 0} with aba = a, bab = b, a^2 = b^2 = 0
  return monoid_from_table({{0, 1, 2, 3, 4, 5},
                            {1, 5, 3, 5, 1, 5},
                            {2, 4, 5, 2, 5, 5},
                            {3, 1, 5, 3, 5, 5},
                            {4, 5, 2, 5, 4, 5},
                            {5, 5, 5, 5, 5, 5}},
                           0, {"1", "a", "b", "ab", "ba", "0"});
}

FiniteMonoid u1() {
  return monoid_from_table({{0, 1}, {1, 1}}, 0, {"1", "0"});
}

FiniteMonoid semilattice_chain3() {
  // chain 1 > e > 0 under meet
  return monoid_from_table({{0, 1, 2}, {1, 1, 2}, {2, 2, 2}}, 0,
                           {"1", "e", "0"});
}

FiniteMonoid null2_with_identity() {
  // {1, a, 0}, a^2 = 0: one non-regular J-class
  return monoid_from_table({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}, 0,
                           {"1", "a", "0"});
}

FiniteMonoid left_zero2_with_identity() {
  return monoid_from_table({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, 0,
                           {"1", "a", "b"});
}

FiniteMonoid right_zero2_with_identity() {
  return monoid_from_table({{0, 1, 2}, {1, 1, 2}, {2, 1, 2}}, 0,
                           {"1", "a", "b"});
}

FiniteMonoid rect_band22_with_identity() {
  // (i,j)(k,l) = (i,l) on {0,1}x{0,1}, identity adjoined
  std::vector<std::vector<ElementId>> rows(5, std::vector<ElementId>(5));
  auto enc = [](int i, int j) { return 1 + 2 * i + j; };
  for (int x = 0; x < 5; ++x) {
    rows[0][x] = x;
    rows[x][0] = x;
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) rows[enc(i, j)][enc(k, l)] = enc(i, l);
  return monoid_from_table(rows, 0);
}

FiniteMonoid c3_with_zero() {
  // C3 with a zero adjoined
  std::vector<std::vector<ElementId>> rows(4, std::vector<ElementId>(4));
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) rows[x][y] = (x + y) % 3;
  for (int x = 0; x < 4; ++x) {
    rows[3][x] = 3;
    rows[x][3] = 3;
  }
  return monoid_from_table(rows, 0);
}

FiniteMonoid quaternion8() {
  // {1, -1, i, -i, j, -j, k, -k} as 0..7
  auto neg = [](int x) { return x ^ 1; };
  int I = 2, J = 4, K = 6;
  std::vector<std::vector<ElementId>> rows(8, std::vector<ElementId>(8));
  auto set = [&](int a, int b, int c) { rows[a][b] = c; };
  for (int x = 0; x < 8; ++x) {
    set(0, x, x);
    set(x, 0, x);
    set(1, x, neg(x));
    set(x, 1, neg(x));
  }
  // i*i = j*j = k*k = -1; i*j = k, j*k = i, k*i = j and the flips
  auto fill = [&](int a, int b, int c) {
    set(a, b, c);
    set(a, neg(b), neg(c));
    set(neg(a), b, neg(c));
    set(neg(a), neg(b), c);
  };
  fill(I, I, 1);
  fill(J, J, 1);
  fill(K, K, 1);
  fill(I, J, K);
  fill(J, K, I);
  fill(K, I, J);
  fill(J, I, neg(K));
  fill(K, J, neg(I));
  fill(I, K, neg(J));
  return monoid_from_table(rows, 0,
                           {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

FiniteMonoid symmetric3() {
  return monoid_from_generators({{1, 0, 2}, {1, 2, 0}}, 16);
}
FiniteMonoid dihedral4() {
  return monoid_from_generators({{1, 2, 3, 0}, {3, 2, 1, 0}}, 16);
}
FiniteMonoid dihedral5() {
  return monoid_from_generators({{1, 2, 3, 4, 0}, {4, 3, 2, 1, 0}}, 16);
}
FiniteMonoid dihedral6() {
  return monoid_from_generators({{1, 2, 3, 4, 5, 0}, {5, 4, 3, 2, 1, 0}}, 16);
}
FiniteMonoid alternating4() {
  return monoid_from_generators({{1, 2, 0, 3}, {1, 0, 3, 2}}, 16);
}
FiniteMonoid symmetric4() {
  return monoid_from_generators({{1, 0, 2, 3}, {1, 2, 3, 0}}, 32);
}
FiniteMonoid full_transformation2() {
  return monoid_from_generators({{1, 0}, {0, 0}}, 8);
}
FiniteMonoid full_transformation3() {
  return monoid_from_generators({{1, 0, 2}, {1, 2, 0}, {0, 0, 2}}, 32);
}

FiniteCategory trivial_cat() {
  return category_from_parts(1, {{0, 0}}, {0}, {{{0, 0}, 0}});
}

FiniteCategory two_object_arrow_cat() {
  // id0, id1, u: 0 -> 1
  return category_from_parts(
      2, {{0, 0}, {1, 1}, {0, 1}}, {0, 1},
      {{{0, 0}, 0}, {{1, 1}, 1}, {{0, 2}, 2}, {{2, 1}, 2}});
}

FiniteCategory parallel_pair_cat() {
  // id0, id1, u, v: 0 -> 1 parallel
  return category_from_parts(2, {{0, 0}, {1, 1}, {0, 1}, {0, 1}}, {0, 1},
                             {{{0, 0}, 0},
                              {{1, 1}, 1},
                              {{0, 2}, 2},
                              {{2, 1}, 2},
                              {{0, 3}, 3},
                              {{3, 1}, 3}});
}

FiniteCategory path3_cat() {
  // 0 -> 1 -> 2 with the composite arrow
  return category_from_parts(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}, {0, 2}},
                             {0, 1, 2},
                             {{{0, 0}, 0},
                              {{1, 1}, 1},
                              {{2, 2}, 2},
                              {{0, 3}, 3},
                              {{3, 1}, 3},
                              {{1, 4}, 4},
                              {{4, 2}, 4},
                              {{0, 5}, 5},
                              {{5, 2}, 5},
                              {{3, 4}, 5}});
}

FiniteCategory c2_triv_cat() {
  // local monoids C2 at object 0 and the trivial monoid at object 1, with
  // a connecting arrow u: 0 -> 1 absorbed by the C2 action
  return category_from_parts(2, {{0, 0}, {0, 0}, {1, 1}, {0, 1}}, {0, 2},
                             {{{0, 0}, 0},
                              {{0, 1}, 1},
                              {{1, 0}, 1},
                              {{1, 1}, 0},
                              {{2, 2}, 2},
                              {{0, 3}, 3},
                              {{1, 3}, 3},
                              {{3, 2}, 3}});
}

FiniteCategory one_object_b21_cat() { return cat_from_monoid(brandt_b21()); }
FiniteCategory one_object_c4_cat() { return cat_from_monoid(cyclic(4)); }

}  // namespace

const std::vector<ZooEntry>& zoo_catalogue() {
  static const std::vector<ZooEntry> entries = {
      {"trivial", ZooKind::group},
      {"u1", ZooKind::monoid},
      {"sl3", ZooKind::monoid},
      {"n2_1", ZooKind::monoid},
      {"lz2_1", ZooKind::monoid},
      {"rz2_1", ZooKind::monoid},
      {"rb22_1", ZooKind::monoid},
      {"b21", ZooKind::monoid},
      {"c3_0", ZooKind::monoid},
      {"t2", ZooKind::monoid},
      {"t3", ZooKind::monoid},
      {"c2", ZooKind::group},
      {"c3", ZooKind::group},
      {"c4", ZooKind::group},
      {"c5", ZooKind::group},
      {"c6", ZooKind::group},
      {"c7", ZooKind::group},
      {"c8", ZooKind::group},
      {"c2xc2", ZooKind::group},
      {"c2xc4", ZooKind::group},
      {"c2xc2xc2", ZooKind::group},
      {"c3xc3", ZooKind::group},
      {"s3", ZooKind::group},
      {"d4", ZooKind::group},
      {"q8", ZooKind::group},
      {"d5", ZooKind::group},
      {"d6", ZooKind::group},
      {"a4", ZooKind::group},
      {"s4", ZooKind::group},
      {"trivial_cat", ZooKind::category},
      {"two_object_arrow_cat", ZooKind::category},
      {"parallel_pair_cat", ZooKind::category},
      {"path3_cat", ZooKind::category},
      {"c2_triv_cat", ZooKind::category},
      {"b21_cat", ZooKind::category},
      {"c4_cat", ZooKind::category},
  };
  return entries;
}

bool zoo_has(const std::string& name) {
  for (const ZooEntry& e : zoo_catalogue())
    if (e.name == name) return true;
  return false;
}

ZooKind zoo_kind(const std::string& name) {
  for (const ZooEntry& e : zoo_catalogue())
    if (e.name == name) return e.kind;
  fail("UnknownName", "no builtin named " + name);
}

FiniteMonoid zoo_monoid(const std::string& name) {
  if (name == "trivial") return monoid_from_table({{0}}, 0);
  if (name == "u1") return u1();
  if (name == "sl3") return semilattice_chain3();
  if (name == "n2_1") return null2_with_identity();
  if (name == "lz2_1") return left_zero2_with_identity();
  if (name == "rz2_1") return right_zero2_with_identity();
  if (name == "rb22_1") return rect_band22_with_identity();
  if (name == "b21") return brandt_b21();
  if (name == "c3_0") return c3_with_zero();
  if (name == "t2") return full_transformation2();
  if (name == "t3") return full_transformation3();
  if (name == "c2") return cyclic(2);
  if (name == "c3") return cyclic(3);
  if (name == "c4") return cyclic(4);
  if (name == "c5") return cyclic(5);
  if (name == "c6") return cyclic(6);
  if (name == "c7") return cyclic(7);
  if (name == "c8") return cyclic(8);
  if (name == "c2xc2") return direct_product(cyclic(2), cyclic(2));
  if (name == "c2xc4") return direct_product(cyclic(2), cyclic(4));
  if (name == "c2xc2xc2")
    return direct_product(cyclic(2), direct_product(cyclic(2), cyclic(2)));
  if (name == "c3xc3") return direct_product(cyclic(3), cyclic(3));
  if (name == "s3") return symmetric3();
  if (name == "d4") return dihedral4();
  if (name == "q8") return quaternion8();
  if (name == "d5") return dihedral5();
  if (name == "d6") return dihedral6();
  if (name == "a4") return alternating4();
  if (name == "s4") return symmetric4();
  fail("UnknownName", "no builtin monoid named " + name);
}

FiniteGroup zoo_group(const std::string& name) {
  require(zoo_kind(name) == ZooKind::group, "UnknownName",
          name + " is not a group");
  return group_from_monoid(zoo_monoid(name));
}

FiniteCategory zoo_category(const std::string& name) {
  if (name == "trivial_cat") return trivial_cat();
  if (name == "two_object_arrow_cat") return two_object_arrow_cat();
  if (name == "parallel_pair_cat") return parallel_pair_cat();
  if (name == "path3_cat") return path3_cat();
  if (name == "c2_triv_cat") return c2_triv_cat();
  if (name == "b21_cat") return one_object_b21_cat();
  if (name == "c4_cat") return one_object_c4_cat();
  fail("UnknownName", "no builtin category named " + name);
}

std::vector<std::pair<std::string, FiniteMonoid>> zoo_monoids_upto(int bound) {
  std::vector<std::pair<std::string, FiniteMonoid>> out;
  for (const ZooEntry& e : zoo_catalogue()) {
    if (e.kind == ZooKind::category) continue;
    FiniteMonoid m = zoo_monoid(e.name);
    if (m.size <= bound) out.emplace_back(e.name, std::move(m));
  }
  return out;
}

std::vector<std::pair<std::string, FiniteGroup>> zoo_groups_upto(int bound) {
  std::vector<std::pair<std::string, FiniteGroup>> out;
  for (const ZooEntry& e : zoo_catalogue()) {
    if (e.kind != ZooKind::group) continue;
    FiniteGroup g = zoo_group(e.name);
    if (g.size() <= bound) out.emplace_back(e.name, std::move(g));
  }
  return out;
}

std::vector<std::pair<std::string, FiniteCategory>> zoo_categories_upto(
    int max_objects, int max_arrows) {
  std::vector<std::pair<std::string, FiniteCategory>> out;
  for (const ZooEntry& e : zoo_catalogue()) {
    if (e.kind != ZooKind::category) continue;
    FiniteCategory c = zoo_category(e.name);
    if (c.num_objects <= max_objects && c.num_arrows() <= max_arrows)
      out.emplace_back(e.name, std::move(c));
  }
  return out;
}

}  // namespace semicat
