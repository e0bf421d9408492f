#pragma once

#include <array>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semicat/category.hpp"

namespace semicat {

/// Kernel category of a quotient morphism phi: C -> D.  Objects are the
/// composable pairs (n_L, n_R) of target arrows; arrows are classes of
/// triples (n_L, m, n_R) with m an arrow of C running from the end of n_L
/// to the start of n_R, two coterminal triples identified when
/// m_L·m·m_R = m_L·m'·m_R for every lifting m_L of n_L and m_R of n_R.
struct KernelCategory {
  FiniteCategory cat;
  std::vector<std::pair<ElementId, ElementId>> objects;   // (n_L, n_R)
  std::vector<std::array<ElementId, 3>> arrow_reps;       // least triple

  int object_of_pair(ElementId nl, ElementId nr) const;
  /// Class of a W-triple; the triple must be one of the enumerated arrows.
  int class_of_triple(ElementId nl, ElementId m, ElementId nr) const;

  std::unordered_map<int64_t, int> object_index;  // nl * narrD + nr
  std::unordered_map<int64_t, int> triple_index;  // packed triple -> class
  int64_t pack_triple(ElementId nl, ElementId m, ElementId nr) const;
};

/// Builds K_phi; asserts that the identification is a congruence of the
/// triple category.  Guarded by an object-count cap (default 2000).
KernelCategory kernel_category(const CatMorphism& phi, int object_cap = 0);

/// Kernel category of a monoid quotient, via the one-object viewpoint.
KernelCategory kernel_category(const MonoidMorphism& phi, int object_cap = 0);

}  // namespace semicat
