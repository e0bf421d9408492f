#pragma once

#include <vector>

#include "semicat/monoid.hpp"

namespace semicat {

/// A compatible partition of a monoid's elements.  class_of is canonical:
/// classes are numbered by first occurrence, so equal partitions compare
/// equal as structs.
struct Congruence {
  std::vector<int> class_of;
  int num_classes = 0;

  bool operator==(const Congruence& o) const {
    return class_of == o.class_of;
  }
  bool is_trivial() const {
    return num_classes == static_cast<int>(class_of.size());
  }
  bool is_universal() const { return num_classes <= 1; }
};

/// Renumbers an arbitrary labeling into canonical form.
Congruence canonical_partition(const std::vector<int>& labels);

Congruence trivial_congruence(int n);
Congruence universal_congruence(int n);

/// True iff the partition is compatible with multiplication.
bool is_congruence(const FiniteMonoid& S, const Congruence& c);
void validate_congruence(const FiniteMonoid& S, const Congruence& c);

/// Smallest congruence identifying x and y, by pair-propagation over
/// one-sided translation contexts (all elements, not generators).
Congruence principal_congruence(const FiniteMonoid& S, ElementId x,
                                ElementId y);

/// Every congruence of S, as the join-closure of the principal ones.
/// Exponential in general; guarded by a size cap (default 10).
std::vector<Congruence> all_congruences(const FiniteMonoid& S, int cap = 0);

/// Join (smallest common coarsening; still a congruence for congruences)
/// and meet (common refinement) in the congruence lattice.
Congruence join_congruence(const Congruence& a, const Congruence& b);
Congruence meet_congruence(const Congruence& a, const Congruence& b);

/// a <= b in the lattice: every a-class sits inside one b-class.
bool finer_or_equal(const Congruence& a, const Congruence& b);

struct MonoidMorphism {
  FiniteMonoid source;
  FiniteMonoid target;
  std::vector<ElementId> map;
};

/// Checks multiplicativity and identity preservation; optionally
/// surjectivity (error NotSurjective).
void validate_morphism(const MonoidMorphism& phi, bool require_surjective);

Congruence kernel_congruence(const MonoidMorphism& phi);

struct QuotientResult {
  FiniteMonoid monoid;
  std::vector<ElementId> projection;  // element -> class id
};

/// Quotient table with the projection; validates compatibility
/// (IncompatiblePartition).
QuotientResult quotient(const FiniteMonoid& S, const Congruence& c);
MonoidMorphism quotient_morphism(const FiniteMonoid& S, const Congruence& c);

}  // namespace semicat
