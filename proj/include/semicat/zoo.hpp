#pragma once

#include <string>
#include <vector>

#include "semicat/category.hpp"
#include "semicat/group.hpp"
#include "semicat/monoid.hpp"

namespace semicat {

enum class ZooKind { monoid, group, category };

struct ZooEntry {
  std::string name;
  ZooKind kind;
};

/// Stable catalogue of builtin objects (tables are fixed across versions).
const std::vector<ZooEntry>& zoo_catalogue();

bool zoo_has(const std::string& name);
ZooKind zoo_kind(const std::string& name);  // UnknownName when absent

FiniteMonoid zoo_monoid(const std::string& name);      // monoid or group name
FiniteGroup zoo_group(const std::string& name);        // group names only
FiniteCategory zoo_category(const std::string& name);  // category names only

/// All zoo monoids (including the groups, as monoids) of size <= bound.
std::vector<std::pair<std::string, FiniteMonoid>> zoo_monoids_upto(int bound);

/// All zoo groups of size <= bound.
std::vector<std::pair<std::string, FiniteGroup>> zoo_groups_upto(int bound);

/// All zoo categories with at most the given objects and arrows.
std::vector<std::pair<std::string, FiniteCategory>> zoo_categories_upto(
    int max_objects, int max_arrows);

}  // namespace semicat
