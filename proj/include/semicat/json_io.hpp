#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "semicat/category.hpp"
#include "semicat/congruence.hpp"
#include "semicat/greens.hpp"
#include "semicat/group.hpp"
#include "semicat/monoid.hpp"
#include "semicat/rees.hpp"

namespace semicat {

using nlohmann::json;

// Monoid: {"size": n, "identity": i|null, "table": [[..]], "labels": [..]?}
json monoid_to_json(const FiniteMonoid& m);
FiniteMonoid monoid_from_json(const json& j);

// Group: monoid JSON; the loader verifies invertibility.
FiniteGroup group_from_json(const json& j);

// Category: {"objects": k, "arrows": [{"src":i,"dst":j}],
//            "identities": [..], "compose": {"i,j": k}}
json category_to_json(const FiniteCategory& c);
FiniteCategory category_from_json(const json& j);

// Congruences: {"classes": [class id per element/arrow]}
json congruence_to_json(const Congruence& c);
Congruence congruence_from_json(const json& j);
json cat_congruence_to_json(const CatCongruence& c);
CatCongruence cat_congruence_from_json(const json& j);

json greens_to_json(const GreensData& g);
json rees_to_json(const ReesRepresentation& r);

/// Reads a file that may hold either a monoid or a category.
json load_json_file(const std::string& path);
bool json_is_category(const json& j);

}  // namespace semicat
