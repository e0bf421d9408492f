#pragma once

#include "semicat/congruence.hpp"
#include "semicat/monoid.hpp"
#include "semicat/pvar.hpp"

namespace semicat {

/// S (monoid or plain semigroup) lies in LH iff every local monoid eSe at
/// an idempotent e is a group belonging to h.
bool is_in_lh(const FiniteMonoid& S, const Pvar& h);

/// phi must be a surjective morphism; true iff the preimage of every
/// idempotent of the target lies in LH.
bool is_lh_morphism(const MonoidMorphism& phi, const Pvar& h);

/// Preimage of one element, as an induced sub-semigroup table
/// (only valid when the element is idempotent, so the preimage is closed).
FiniteMonoid idempotent_preimage(const MonoidMorphism& phi, ElementId e);

}  // namespace semicat
