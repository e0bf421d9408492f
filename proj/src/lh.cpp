#include "semicat/lh.hpp"

#include "semicat/group.hpp"

namespace semicat {

bool is_in_lh(const FiniteMonoid& S, const Pvar& h) {
  require(h.kind == PvarKind::group, "WrongPredicateKind",
          h.name + " is not a group pseudovariety");
  for (ElementId e = 0; e < S.size; ++e) {
    if (!S.is_idempotent(e)) continue;
    LocalMonoid local = local_monoid(S, e);
    std::vector<ElementId> inverse;
    if (!is_group_table(local.monoid, &inverse)) return false;
    if (!h.test(local.monoid)) return false;
  }
  return true;
}

FiniteMonoid idempotent_preimage(const MonoidMorphism& phi, ElementId e) {
  require(phi.target.is_idempotent(e), "NotIdempotent",
          "preimage taken at a non-idempotent");
  std::vector<ElementId> elems;
  for (ElementId x = 0; x < phi.source.size; ++x)
    if (phi.map[x] == e) elems.push_back(x);
  ElementId id_parent = kNone;
  if (phi.source.has_identity() && phi.map[phi.source.identity] == e)
    id_parent = phi.source.identity;
  return induced_table(phi.source, elems, id_parent);
}

bool is_lh_morphism(const MonoidMorphism& phi, const Pvar& h) {
  validate_morphism(phi, /*require_surjective=*/true);
  for (ElementId e = 0; e < phi.target.size; ++e) {
    if (!phi.target.is_idempotent(e)) continue;
    if (!is_in_lh(idempotent_preimage(phi, e), h)) return false;
  }
  return true;
}

}  // namespace semicat
