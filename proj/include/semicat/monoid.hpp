#pragma once

#include <string>
#include <vector>

#include "semicat/error.hpp"
#include "semicat/util.hpp"

namespace semicat {

/// A finite monoid (or plain semigroup) given by its full multiplication
/// table over dense element ids 0..size-1.  Products read left to right:
/// mul(x, y) is x·y.  A plain semigroup is the same table with
/// identity == kNone; everything downstream that only needs a table
/// accepts both.
struct FiniteMonoid {
  int size = 0;
  ElementId identity = kNone;
  std::vector<ElementId> table;     // row-major, size*size
  std::vector<std::string> labels;  // empty, or one label per element

  ElementId mul(ElementId x, ElementId y) const {
    return table[static_cast<size_t>(x) * size + y];
  }
  bool has_identity() const { return identity != kNone; }
  bool is_idempotent(ElementId x) const { return mul(x, x) == x; }
  std::vector<ElementId> idempotents() const;
  std::string label(ElementId x) const;
};

/// Validates index ranges, the identity laws and full associativity.
FiniteMonoid monoid_from_table(const std::vector<std::vector<ElementId>>& rows,
                               ElementId identity,
                               std::vector<std::string> labels = {});

/// Same validation with no designated identity.
FiniteMonoid semigroup_from_table(const std::vector<std::vector<ElementId>>& rows,
                                  std::vector<std::string> labels = {});

/// Internal variant taking a flat table; set check_assoc = false only for
/// tables that are associative by construction.
FiniteMonoid table_from_flat(int size, std::vector<ElementId> flat,
                             ElementId identity,
                             std::vector<std::string> labels = {},
                             bool check_assoc = true);

/// Closure of a set of total self-maps of {0..degree-1} under left-to-right
/// composition (x·y means "apply x, then y"), with the identity map adjoined
/// when it is not itself a composite.  Elements are numbered in discovery
/// order: identity, generators, then products breadth-first.
FiniteMonoid monoid_from_generators(const std::vector<std::vector<int>>& maps,
                                    int max_size = 0 /* 0: default cap */);

struct LocalMonoid {
  FiniteMonoid monoid;
  std::vector<ElementId> embedding;  // local id -> parent id
};

/// The local monoid eSe at an idempotent e, with its embedding into S.
LocalMonoid local_monoid(const FiniteMonoid& S, ElementId e);

/// Induced table on a product-closed subset (ascending parent ids).
/// identity_parent may be kNone for a plain sub-semigroup.
FiniteMonoid induced_table(const FiniteMonoid& S,
                           const std::vector<ElementId>& elems,
                           ElementId identity_parent);

/// Table-level equality; labels are ignored.
bool tables_equal(const FiniteMonoid& a, const FiniteMonoid& b);

/// Brute-force isomorphism search with invariant pruning.  Desk scale only.
bool monoids_isomorphic(const FiniteMonoid& a, const FiniteMonoid& b);

FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b);

}  // namespace semicat
