#include "semicat/supertech.hpp"

#include "semicat/group.hpp"
#include "semicat/lh.hpp"

namespace semicat {

bool ell_membership(const FiniteCategory& C, const Pvar& p) {
  for (ElementId c = 0; c < C.num_objects; ++c) {
    LocalMonoid lm = local_monoid_at(C, c);
    if (p.kind == PvarKind::monoid) {
      if (!p.test(lm.monoid)) return false;
    } else {
      if (!is_group_table(lm.monoid)) return false;
      if (!p.test(lm.monoid)) return false;
    }
  }
  return true;
}

bool ell_malcev_membership(const FiniteCategory& C, const Pvar& h,
                           const Pvar& v) {
  for (ElementId c = 0; c < C.num_objects; ++c)
    if (!malcev_membership(local_monoid_at(C, c).monoid, h, v)) return false;
  return true;
}

SupertechResult supertech_construct(const FiniteCategory& C, const Pvar& h,
                                    const Pvar* v) {
  require(h.kind == PvarKind::group, "WrongPredicateKind",
          h.name + " is not a group pseudovariety");
  require(h.fitting, "NotFitting", h.name + " is not flagged Fitting");

  Consolidation cons = consolidation(C);
  Congruence canon = lh_canonical_congruence(cons.monoid, h);

  // induced congruence on C: coterminal arrows identified by canon
  int narr = C.num_arrows();
  std::vector<int> labels(narr);
  for (ElementId i = 0; i < narr; ++i)
    labels[i] = (C.src[i] * C.num_objects + C.dst[i]) * (narr + 2) +
                canon.class_of[i];
  CatCongruence k = cat_canonical_partition(labels);
  validate_cat_congruence(C, k);

  SupertechResult out;
  CatQuotient q = cat_quotient(C, k);
  out.quotient = std::move(q.category);
  out.projection = std::move(q.projection);
  out.congruence = std::move(k);

  // the restriction to each local monoid must agree with the canonical
  // congruence computed inside that local monoid on its own
  for (ElementId c = 0; c < C.num_objects; ++c) {
    LocalMonoid lm = local_monoid_at(C, c);
    Congruence local_canon = lh_canonical_congruence(lm.monoid, h);
    std::vector<int> restricted(lm.monoid.size);
    for (ElementId i = 0; i < lm.monoid.size; ++i)
      restricted[i] = out.congruence.class_of[lm.embedding[i]];
    require(canonical_partition(restricted) == local_canon,
            "IncompatiblePartition",
            "restriction mismatch at object " + std::to_string(c) +
                " (internal)");
  }

  require(is_lh_morphism_cat(out.projection, h), "NotFitting",
          "projection failed the LH check (internal)");

  if (v != nullptr && ell_malcev_membership(C, h, *v)) {
    require(ell_membership(out.quotient, *v), "IncompatiblePartition",
            "quotient left " + v->name + " locally (internal)");
  }
  return out;
}

}  // namespace semicat
