#pragma once

#include <vector>

#include "semicat/greens.hpp"
#include "semicat/group.hpp"
#include "semicat/monoid.hpp"

namespace semicat {

/// Element of a Rees matrix semigroup over a group with zero: either the
/// zero, or a triple (a, g, b) with a an R-class index, b an L-class index
/// and g an element of the structure group.
struct ReesElement {
  bool zero = true;
  int a = -1;
  ElementId g = kNone;
  int b = -1;

  static ReesElement zero_elem() { return {}; }
  static ReesElement triple(int a, ElementId g, int b) {
    ReesElement r;
    r.zero = false;
    r.a = a;
    r.g = g;
    r.b = b;
    return r;
  }
  bool operator==(const ReesElement& o) const {
    if (zero != o.zero) return false;
    if (zero) return true;
    return a == o.a && g == o.g && b == o.b;
  }
};

/// Coordinatization of a regular J-class J as a Rees matrix semigroup over
/// its structure group G = H_e.  Rows A index the R-classes of J, columns B
/// its L-classes; all choices are deterministic (least ids, with the base
/// H-class representatives pinned to e itself so that C(b_e, a_e) = 1).
/// Every invariant (bijectivity and multiplicativity of coord) is asserted
/// exhaustively over J x J at construction time.
struct ReesRepresentation {
  int jclass = -1;
  ElementId base_idempotent = kNone;
  FiniteGroup group;                 // H_e, embedded in the parent monoid
  std::vector<int> a_rclasses;       // A index -> R-class id of the parent
  std::vector<int> b_lclasses;       // B index -> L-class id
  int a_base = -1, b_base = -1;      // coordinates of e
  std::vector<ElementId> row_rep;    // p_a, parent ids
  std::vector<ElementId> col_rep;    // q_b
  std::vector<ElementId> row_inv;    // p_a' with p_a'·p_a = e
  std::vector<ElementId> col_inv;    // q_b' with q_b·q_b' = e
  std::vector<ElementId> structure;  // C, |B| x |A|, group id or kNone
  std::vector<ElementId> j_members;  // ascending parent ids

  int num_a() const { return static_cast<int>(a_rclasses.size()); }
  int num_b() const { return static_cast<int>(b_lclasses.size()); }
  ElementId c_entry(int b, int a) const {
    return structure[static_cast<size_t>(b) * num_a() + a];
  }

  /// coord/uncoord between parent elements of J and triples.
  ReesElement coord(ElementId s) const;
  ElementId uncoord(const ReesElement& r) const;

  /// Product of two triples using the structure matrix.
  ReesElement mul(const ReesElement& x, const ReesElement& y) const;

 private:
  friend ReesRepresentation rees_representation(const FiniteMonoid&,
                                                const GreensData&, int);
  std::vector<int> coord_a_, coord_b_;       // parent element -> index or -1
  std::vector<ElementId> coord_g_;           // parent element -> group id
  std::vector<ElementId> uncoord_;           // (a*|G|+g)*|B|+b -> parent id
};

/// Builds the representation for a regular J-class (error NotRegular).
ReesRepresentation rees_representation(const FiniteMonoid& S,
                                       const GreensData& g, int jclass);

/// eta: F(J) ∪ J -> J^0.  Elements of J map to their triple, elements of
/// F(J) to zero, anything J-above the class is out of domain (NotInDomain).
ReesElement eta(const ReesRepresentation& rep, const GreensData& g,
                ElementId s);

/// psi: reduce the group coordinate modulo a normal subgroup N of the
/// structure group (error NotNormal); coset representatives are canonical
/// (least group id).
ReesElement psi(const ReesRepresentation& rep, const Subgroup& normal,
                const ReesElement& x);

/// Product in the reduced Rees semigroup over G/N with the reduced matrix:
/// inputs and output carry canonical coset representatives.
ReesElement rees_mul_mod(const ReesRepresentation& rep, const Subgroup& normal,
                         const ReesElement& x, const ReesElement& y);

/// Canonical coset representative table for a normal subgroup: g -> least
/// element of gN.
std::vector<ElementId> coset_reps(const FiniteGroup& G, const Subgroup& normal);

/// Compact eta-then-psi tokens per parent element: -1 encodes zero, values
/// >= 0 encode (a, b, coset) injectively, kInvalidToken marks elements
/// outside F(J) ∪ J (never legal to read).
inline constexpr int64_t kZeroToken = -1;
inline constexpr int64_t kInvalidToken = -2;
std::vector<int64_t> eta_psi_tokens(const FiniteMonoid& S, const GreensData& g,
                                    const ReesRepresentation& rep,
                                    const Subgroup& normal);

}  // namespace semicat
