#pragma once

#include <optional>

#include "semicat/congruence.hpp"
#include "semicat/greens.hpp"
#include "semicat/pvar.hpp"
#include "semicat/rees.hpp"

namespace semicat {

/// Radical congruence at a regular J-class and a normal subgroup N of its
/// structure group: s ~ t iff x·s·y and x·t·y project to the same element
/// of the reduced Rees semigroup for every pair of idempotents x, y of J.
/// Computed by grouping per-element signatures; the signature pass is an
/// OpenMP kernel.  The result is asserted to be a congruence.
Congruence ggm_congruence(const FiniteMonoid& S, const GreensData& g,
                          const ReesRepresentation& rep,
                          const Subgroup& normal);

/// Convenience overload building the representation itself.
Congruence ggm_congruence(const FiniteMonoid& S, const GreensData& g,
                          int jclass, const Subgroup& normal_in_gj);

/// Serial reference: the raw definition with x, y ranging over the whole
/// J-class (not only idempotents), decided pairwise.  Kept for testing.
Congruence ggm_congruence_unrestricted(const FiniteMonoid& S,
                                       const GreensData& g,
                                       const ReesRepresentation& rep,
                                       const Subgroup& normal);

/// Same signature route as ggm_congruence but restricted to one thread;
/// the benchmark compares the two.
Congruence ggm_congruence_serial(const FiniteMonoid& S, const GreensData& g,
                                 const ReesRepresentation& rep,
                                 const Subgroup& normal);

struct GgmResult {
  Congruence congruence;
  FiniteMonoid quotient;
  std::vector<ElementId> projection;
};

GgmResult ggm_quotient(const FiniteMonoid& S, const GreensData& g, int jclass,
                       const Subgroup& normal_in_gj);

/// Checks the generalized-group-mapping property of a quotient: a zero
/// exists, the image of J ∪ F(J) is a 0-minimal ideal, and the quotient
/// acts faithfully on it from both sides.  Returns nullopt when F(J) is
/// empty (no zero context; the check does not apply).
std::optional<bool> verify_ggm_property(const FiniteMonoid& S,
                                        const GreensData& g, int jclass,
                                        const GgmResult& result);

/// Intersection over all regular J-classes of the radical congruences at
/// the h-radical of each structure group; the associated quotient map is
/// asserted to be an LH-morphism.
Congruence lh_canonical_congruence(const FiniteMonoid& S, const Pvar& h);

/// Mal'cev product membership M ∈ LH ⓜ V, decided via the quotients by the
/// per-J-class radical congruences.
bool malcev_membership(const FiniteMonoid& M, const Pvar& h, const Pvar& v);

}  // namespace semicat
