#pragma once

#include <vector>

#include "semicat/greens.hpp"
#include "semicat/monoid.hpp"
#include "semicat/pvar.hpp"

namespace semicat {

/// A finite group: a monoid table in which every element is invertible,
/// with the inverse map materialized.  `embedding` maps local ids into the
/// structure the group was carved out of (identity map for standalone
/// groups).
struct FiniteGroup {
  FiniteMonoid monoid;
  std::vector<ElementId> inverse;
  std::vector<ElementId> embedding;

  int size() const { return monoid.size; }
  ElementId mul(ElementId x, ElementId y) const { return monoid.mul(x, y); }
  ElementId identity() const { return monoid.identity; }
  ElementId inv(ElementId x) const { return inverse[x]; }
};

/// Fails with NotAGroup when some element has no two-sided inverse.
FiniteGroup group_from_monoid(FiniteMonoid m,
                              std::vector<ElementId> embedding = {});

/// True iff the table is a group; fills `inverse` when given.
bool is_group_table(const FiniteMonoid& m,
                    std::vector<ElementId>* inverse = nullptr);

/// The H-class of an idempotent e, as a group embedded in S.
FiniteGroup maximal_subgroup(const FiniteMonoid& S, const GreensData& g,
                             ElementId e);

/// Subgroups are ascending element-id lists relative to a parent group.
using Subgroup = std::vector<ElementId>;

Subgroup subgroup_closure(const FiniteGroup& G, std::vector<ElementId> gens);
FiniteGroup materialize_subgroup(const FiniteGroup& G, const Subgroup& elems);
FiniteGroup subgroup_generated(const FiniteGroup& G,
                               const std::vector<ElementId>& gens);

Subgroup normal_closure_set(const FiniteGroup& G, ElementId x);
FiniteGroup normal_closure(const FiniteGroup& G, ElementId x);
bool is_subgroup(const FiniteGroup& G, const Subgroup& elems);
bool is_normal(const FiniteGroup& G, const Subgroup& elems);

/// Every normal subgroup, as the join-closure of element normal closures.
std::vector<Subgroup> all_normal_subgroup_sets(const FiniteGroup& G,
                                               int cap = 0);
std::vector<FiniteGroup> all_normal_subgroups(const FiniteGroup& G,
                                              int cap = 0);

/// Largest normal subgroup lying in h (h must be group-kind and Fitting).
/// Asserts membership, normality and maximality of the result.
Subgroup h_radical_set(const FiniteGroup& G, const Pvar& h, int cap = 0);
FiniteGroup h_radical(const FiniteGroup& G, const Pvar& h, int cap = 0);

/// Commutator subgroup [A, B] and the two standard series.
Subgroup commutator_subgroup(const FiniteGroup& G, const Subgroup& a,
                             const Subgroup& b);
std::vector<Subgroup> derived_series(const FiniteGroup& G);
std::vector<Subgroup> lower_central_series(const FiniteGroup& G);
bool is_solvable(const FiniteGroup& G);
bool is_nilpotent(const FiniteGroup& G);

/// Brute-force subgroup enumeration (oracle-only; default cap 24).
std::vector<Subgroup> all_subgroups(const FiniteGroup& G, int cap = 0);

/// Intersection of all Sylow p-subgroups, via all_subgroups.
Subgroup sylow_p_intersection(const FiniteGroup& G, int p);

}  // namespace semicat
