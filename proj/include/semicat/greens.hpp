#pragma once

#include <vector>

#include "semicat/monoid.hpp"

namespace semicat {

/// Green's relations of a finite monoid or semigroup.  Class ids are dense
/// and numbered by least member, so two runs over the same table agree.
struct GreensData {
  int num_r = 0, num_l = 0, num_j = 0, num_h = 0;
  std::vector<int> r_class, l_class, j_class, h_class;  // element -> class
  std::vector<uint8_t> j_leq;  // num_j*num_j; leq(a,b) means J_a <=_J J_b
  std::vector<uint8_t> j_regular;
  std::vector<ElementId> idempotents;
  std::vector<std::vector<ElementId>> j_members;  // ascending per class

  bool leq_j(int a, int b) const {
    return j_leq[static_cast<size_t>(a) * num_j + b] != 0;
  }
};

/// Computes R/L/J as strongly connected components of the right, left and
/// two-sided Cayley graphs (edges by multiplication with every element);
/// H as the meet of R and L.
GreensData greens(const FiniteMonoid& S);

/// Definitional oracle: x R y iff xS^1 = yS^1 etc., by explicit ideal
/// comparison.  Cubic; kept for cross-checking greens() at desk scale.
GreensData greens_by_ideals(const FiniteMonoid& S);

bool greens_equal(const GreensData& a, const GreensData& b);

/// Members of one R-class within one J-class etc. (ascending).
std::vector<ElementId> class_members(const std::vector<int>& class_of, int cls);

}  // namespace semicat
