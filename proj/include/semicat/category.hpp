#pragma once

#include <map>
#include <utility>
#include <vector>

#include "semicat/congruence.hpp"
#include "semicat/monoid.hpp"
#include "semicat/pvar.hpp"

namespace semicat {

/// A finite category: objects 0..num_objects-1, arrows with endpoints and a
/// partial composition table.  compose(i, j) is "i then j" and is defined
/// exactly when dst(i) == src(j); kNone marks undefined entries.
struct FiniteCategory {
  int num_objects = 0;
  std::vector<ElementId> src, dst;        // per arrow
  std::vector<ElementId> identity_arrow;  // per object
  std::vector<ElementId> compose_table;   // narr*narr, kNone when undefined

  int num_arrows() const { return static_cast<int>(src.size()); }
  ElementId compose(ElementId i, ElementId j) const {
    return compose_table[static_cast<size_t>(i) * num_arrows() + j];
  }
  bool composable(ElementId i, ElementId j) const { return dst[i] == src[j]; }
  bool coterminal(ElementId i, ElementId j) const {
    return src[i] == src[j] && dst[i] == dst[j];
  }
  bool is_idempotent_arrow(ElementId i) const {
    return src[i] == dst[i] && compose(i, i) == i;
  }
};

/// Full validation: composition defined exactly on composable pairs,
/// endpoints respected, identities neutral, associativity on all
/// composable triples.
FiniteCategory category_from_parts(
    int num_objects, const std::vector<std::pair<ElementId, ElementId>>& arrows,
    const std::vector<ElementId>& identities,
    const std::map<std::pair<ElementId, ElementId>, ElementId>& compose);

/// A monoid viewed as a one-object category.
FiniteCategory cat_from_monoid(const FiniteMonoid& m);

/// The endomorphism monoid at an object, with its arrow embedding.
LocalMonoid local_monoid_at(const FiniteCategory& C, ElementId c);

/// The consolidation: a monoid on Arr(C) ∪ {0, 1} where undefined
/// composites become 0.  Local identities are kept distinct from the
/// adjoined 1; arrows keep their ids, zero = narr, one = narr + 1.
struct Consolidation {
  FiniteMonoid monoid;
  ElementId zero = kNone;
  ElementId one = kNone;
};
Consolidation consolidation(const FiniteCategory& C);

/// A partition of arrows into coterminal, composition-compatible classes.
struct CatCongruence {
  std::vector<int> class_of;
  int num_classes = 0;
  bool operator==(const CatCongruence& o) const {
    return class_of == o.class_of;
  }
  bool is_trivial() const {
    return num_classes == static_cast<int>(class_of.size());
  }
};

CatCongruence cat_canonical_partition(const std::vector<int>& labels);
CatCongruence cat_trivial_congruence(int narr);
bool is_cat_congruence(const FiniteCategory& C, const CatCongruence& k);
void validate_cat_congruence(const FiniteCategory& C, const CatCongruence& k);

/// Smallest congruence identifying two distinct coterminal arrows.
CatCongruence cat_principal_congruence(const FiniteCategory& C, ElementId x,
                                       ElementId y);

/// Join-closure of the principal congruences; guarded by a result-count cap.
std::vector<CatCongruence> all_cat_congruences(const FiniteCategory& C,
                                               int max_count = 20000);

CatCongruence join_cat_congruence(const FiniteCategory& C,
                                  const CatCongruence& a,
                                  const CatCongruence& b);
bool cat_finer_or_equal(const CatCongruence& a, const CatCongruence& b);

/// Identity-on-objects morphism determined by its arrow map.
struct CatMorphism {
  FiniteCategory source;
  FiniteCategory target;
  std::vector<ElementId> arrow_map;
};

/// Endpoint/identity/composition preservation; surjectivity on arrows when
/// quotient is required (error NotQuotient).
void validate_cat_morphism(const CatMorphism& phi, bool require_quotient);

CatCongruence cat_kernel(const CatMorphism& phi);

struct CatQuotient {
  FiniteCategory category;
  CatMorphism projection;
};
CatQuotient cat_quotient(const FiniteCategory& C, const CatCongruence& k);

CatMorphism compose_cat_morphisms(const CatMorphism& f, const CatMorphism& g);

/// The induced monoid morphism between consolidations (0 -> 0, 1 -> 1).
MonoidMorphism consolidation_morphism(const CatMorphism& phi);

/// LH check per object: every local restriction must be an LH-morphism of
/// monoids.
bool is_lh_morphism_cat(const CatMorphism& phi, const Pvar& h);

/// Maximal proper quotient: the kernel is minimal among nontrivial
/// congruences (error Injective when the kernel is trivial).
bool is_mpq(const CatMorphism& phi);

/// Monoid counterpart (maximal proper surmorphism).
bool is_mps(const MonoidMorphism& phi);

/// Factors a quotient morphism into a chain of MPQs whose composite equals
/// phi; the identity factors into the empty chain.  Greedy: at each stage
/// the least (by lexicographic arrow pair) minimal principal congruence
/// below the remaining kernel is split off.
std::vector<CatMorphism> mpq_factorize(const CatMorphism& phi);

}  // namespace semicat
