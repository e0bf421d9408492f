#pragma once

#include "semicat/category.hpp"
#include "semicat/ggm.hpp"

namespace semicat {

/// All local monoids of C lie in p.  For a group-kind p each local monoid
/// must in addition be a group.
bool ell_membership(const FiniteCategory& C, const Pvar& p);

/// Every local monoid of C lies in LH ⓜ V.
bool ell_malcev_membership(const FiniteCategory& C, const Pvar& h,
                           const Pvar& v);

struct SupertechResult {
  FiniteCategory quotient;
  CatCongruence congruence;
  CatMorphism projection;
};

/// Quotients C by the congruence induced through the consolidation: arrows
/// are identified when they are coterminal and fall together under the
/// canonical LH congruence of C^cd.  Asserts that the restriction to every
/// local monoid equals the locally computed canonical congruence, and that
/// the projection is an LH-morphism.  When v is supplied and C lies locally
/// in LH ⓜ V, the quotient is asserted to lie locally in v.
SupertechResult supertech_construct(const FiniteCategory& C, const Pvar& h,
                                    const Pvar* v = nullptr);

}  // namespace semicat
