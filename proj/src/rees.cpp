#include "semicat/rees.hpp"

#include <algorithm>
#include <unordered_map>

namespace semicat {

namespace {

// least member of the intersection of an R-class and an L-class inside J
ElementId least_in_hclass(const GreensData& g,
                          const std::vector<ElementId>& j_members, int rcls,
                          int lcls) {
  for (ElementId x : j_members)  // ascending
    if (g.r_class[x] == rcls && g.l_class[x] == lcls) return x;
  return kNone;
}

}  // namespace

ReesElement ReesRepresentation::coord(ElementId s) const {
  ReesElement r;
  r.zero = false;
  r.a = coord_a_[s];
  r.b = coord_b_[s];
  r.g = coord_g_[s];
  require(r.a >= 0 && r.b >= 0 && r.g != kNone, "NotInDomain",
          "element not in the J-class");
  return r;
}

ElementId ReesRepresentation::uncoord(const ReesElement& r) const {
  require(!r.zero, "NotInDomain", "zero has no parent element");
  require(r.a >= 0 && r.a < num_a() && r.b >= 0 && r.b < num_b() && r.g >= 0 &&
              r.g < group.size(),
          "IndexOutOfRange", "triple out of range");
  return uncoord_[(static_cast<size_t>(r.a) * group.size() + r.g) * num_b() +
                  r.b];
}

ReesElement ReesRepresentation::mul(const ReesElement& x,
                                    const ReesElement& y) const {
  if (x.zero || y.zero) return ReesElement::zero_elem();
  ElementId c = c_entry(x.b, y.a);
  if (c == kNone) return ReesElement::zero_elem();
  return ReesElement::triple(x.a, group.mul(group.mul(x.g, c), y.g), y.b);
}

ReesRepresentation rees_representation(const FiniteMonoid& S,
                                       const GreensData& g, int jclass) {
  require(jclass >= 0 && jclass < g.num_j, "IndexOutOfRange",
          "no such J-class");
  require(g.j_regular[jclass], "NotRegular",
          "J-class " + std::to_string(jclass) + " has no idempotent");

  ReesRepresentation rep;
  rep.jclass = jclass;
  rep.j_members = g.j_members[jclass];

  ElementId e = kNone;
  for (ElementId x : rep.j_members)
    if (S.is_idempotent(x)) {
      e = x;
      break;
    }
  rep.base_idempotent = e;
  rep.group = maximal_subgroup(S, g, e);

  // A: R-classes of J ordered by least member; B: L-classes likewise.
  for (ElementId x : rep.j_members) {
    if (std::find(rep.a_rclasses.begin(), rep.a_rclasses.end(),
                  g.r_class[x]) == rep.a_rclasses.end())
      rep.a_rclasses.push_back(g.r_class[x]);
    if (std::find(rep.b_lclasses.begin(), rep.b_lclasses.end(),
                  g.l_class[x]) == rep.b_lclasses.end())
      rep.b_lclasses.push_back(g.l_class[x]);
  }
  int nA = rep.num_a(), nB = rep.num_b();
  rep.a_base = static_cast<int>(
      std::find(rep.a_rclasses.begin(), rep.a_rclasses.end(), g.r_class[e]) -
      rep.a_rclasses.begin());
  rep.b_base = static_cast<int>(
      std::find(rep.b_lclasses.begin(), rep.b_lclasses.end(), g.l_class[e]) -
      rep.b_lclasses.begin());

  // Row representatives p_a in R_a ∩ L_e, column representatives q_b in
  // R_e ∩ L_b; the base H-class representative is pinned to e so that the
  // structure matrix carries the identity at (b_base, a_base).
  rep.row_rep.assign(nA, kNone);
  rep.col_rep.assign(nB, kNone);
  for (int a = 0; a < nA; ++a) {
    rep.row_rep[a] = (a == rep.a_base)
                         ? e
                         : least_in_hclass(g, rep.j_members, rep.a_rclasses[a],
                                           g.l_class[e]);
    require(rep.row_rep[a] != kNone, "NotRegular",
            "egg-box row without representative (internal)");
  }
  for (int b = 0; b < nB; ++b) {
    rep.col_rep[b] = (b == rep.b_base)
                         ? e
                         : least_in_hclass(g, rep.j_members, g.r_class[e],
                                           rep.b_lclasses[b]);
    require(rep.col_rep[b] != kNone, "NotRegular",
            "egg-box column without representative (internal)");
  }

  // Local inverses: row_inv[a]·p_a = e and q_b·col_inv[b] = e, found by
  // search over J among the weak inverses x x' x = x, x' x x' = x'.
  rep.row_inv.assign(nA, kNone);
  rep.col_inv.assign(nB, kNone);
  for (int a = 0; a < nA; ++a) {
    ElementId p = rep.row_rep[a];
    for (ElementId x : rep.j_members) {
      if (S.mul(S.mul(p, x), p) == p && S.mul(S.mul(x, p), x) == x &&
          S.mul(x, p) == e) {
        rep.row_inv[a] = x;
        break;
      }
    }
    require(rep.row_inv[a] != kNone, "NotRegular",
            "no local inverse for a row representative (internal)");
  }
  for (int b = 0; b < nB; ++b) {
    ElementId q = rep.col_rep[b];
    for (ElementId x : rep.j_members) {
      if (S.mul(S.mul(q, x), q) == q && S.mul(S.mul(x, q), x) == x &&
          S.mul(q, x) == e) {
        rep.col_inv[b] = x;
        break;
      }
    }
    require(rep.col_inv[b] != kNone, "NotRegular",
            "no local inverse for a column representative (internal)");
  }

  // group index of a parent element of H_e
  std::unordered_map<ElementId, ElementId> gidx;
  for (ElementId i = 0; i < rep.group.size(); ++i)
    gidx[rep.group.embedding[i]] = i;

  // structure matrix: C(b, a) = q_b · p_a when the product stays in J
  rep.structure.assign(static_cast<size_t>(nB) * nA, kNone);
  for (int b = 0; b < nB; ++b)
    for (int a = 0; a < nA; ++a) {
      ElementId prod = S.mul(rep.col_rep[b], rep.row_rep[a]);
      if (g.j_class[prod] == jclass) {
        auto it = gidx.find(prod);
        require(it != gidx.end(), "NotRegular",
                "structure entry escaped the base H-class (internal)");
        rep.structure[static_cast<size_t>(b) * nA + a] = it->second;
      }
    }
  require(rep.c_entry(rep.b_base, rep.a_base) == rep.group.identity(),
          "NotRegular", "base structure entry is not the identity (internal)");

  // coordinates, with p_a · g · q_b recomputed in the parent as the
  // independent check that the factorization is genuine
  rep.coord_a_.assign(S.size, -1);
  rep.coord_b_.assign(S.size, -1);
  rep.coord_g_.assign(S.size, kNone);
  rep.uncoord_.assign(static_cast<size_t>(nA) * rep.group.size() * nB, kNone);
  for (ElementId x : rep.j_members) {
    int a = static_cast<int>(
        std::find(rep.a_rclasses.begin(), rep.a_rclasses.end(), g.r_class[x]) -
        rep.a_rclasses.begin());
    int b = static_cast<int>(
        std::find(rep.b_lclasses.begin(), rep.b_lclasses.end(), g.l_class[x]) -
        rep.b_lclasses.begin());
    ElementId gpart = S.mul(S.mul(rep.row_inv[a], x), rep.col_inv[b]);
    auto it = gidx.find(gpart);
    require(it != gidx.end(), "NotRegular",
            "coordinate escaped the base H-class (internal)");
    ElementId gid = it->second;
    ElementId back = S.mul(S.mul(rep.row_rep[a], rep.group.embedding[gid]),
                           rep.col_rep[b]);
    require(back == x, "NotRegular", "p_a·g·q_b did not recover the element");
    rep.coord_a_[x] = a;
    rep.coord_b_[x] = b;
    rep.coord_g_[x] = gid;
    size_t slot = (static_cast<size_t>(a) * rep.group.size() + gid) * nB + b;
    require(rep.uncoord_[slot] == kNone, "NotRegular",
            "coord not injective (internal)");
    rep.uncoord_[slot] = x;
  }
  for (ElementId v : rep.uncoord_)
    require(v != kNone, "NotRegular", "coord not onto A x G x B (internal)");

  // exhaustive multiplicativity over J x J
  for (ElementId x : rep.j_members)
    for (ElementId y : rep.j_members) {
      ElementId xy = S.mul(x, y);
      ReesElement prod = rep.mul(rep.coord(x), rep.coord(y));
      if (g.j_class[xy] == jclass) {
        require(!prod.zero && prod == rep.coord(xy), "NotRegular",
                "multiplicativity failed (internal)");
      } else {
        require(prod.zero, "NotRegular",
                "product should have left the J-class (internal)");
      }
    }
  return rep;
}

ReesElement eta(const ReesRepresentation& rep, const GreensData& g,
                ElementId s) {
  require(s >= 0 && s < static_cast<ElementId>(g.j_class.size()),
          "IndexOutOfRange", "element out of range");
  int js = g.j_class[s];
  if (js == rep.jclass) return rep.coord(s);
  if (!g.leq_j(rep.jclass, js)) return ReesElement::zero_elem();
  fail("NotInDomain", "element lies strictly J-above the class");
}

std::vector<ElementId> coset_reps(const FiniteGroup& G,
                                  const Subgroup& normal) {
  std::vector<ElementId> rep(G.size(), kNone);
  for (ElementId g = 0; g < G.size(); ++g) {
    ElementId least = g;
    for (ElementId n : normal) least = std::min(least, G.mul(g, n));
    rep[g] = least;
  }
  return rep;
}

ReesElement psi(const ReesRepresentation& rep, const Subgroup& normal,
                const ReesElement& x) {
  require(is_normal(rep.group, normal), "NotNormal",
          "subgroup is not normal in the structure group");
  if (x.zero) return x;
  std::vector<ElementId> reps = coset_reps(rep.group, normal);
  return ReesElement::triple(x.a, reps[x.g], x.b);
}

ReesElement rees_mul_mod(const ReesRepresentation& rep, const Subgroup& normal,
                         const ReesElement& x, const ReesElement& y) {
  if (x.zero || y.zero) return ReesElement::zero_elem();
  ElementId c = rep.c_entry(x.b, y.a);
  if (c == kNone) return ReesElement::zero_elem();
  std::vector<ElementId> reps = coset_reps(rep.group, normal);
  return ReesElement::triple(
      x.a, reps[rep.group.mul(rep.group.mul(x.g, c), y.g)], y.b);
}

std::vector<int64_t> eta_psi_tokens(const FiniteMonoid& S, const GreensData& g,
                                    const ReesRepresentation& rep,
                                    const Subgroup& normal) {
  require(is_normal(rep.group, normal), "NotNormal",
          "subgroup is not normal in the structure group");
  std::vector<ElementId> reps = coset_reps(rep.group, normal);
  // dense coset ids in order of ascending representative
  std::vector<ElementId> uniq = reps;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  std::unordered_map<ElementId, int64_t> coset_id;
  for (size_t i = 0; i < uniq.size(); ++i) coset_id[uniq[i]] = i;

  std::vector<int64_t> token(S.size, kInvalidToken);
  int64_t ncosets = static_cast<int64_t>(uniq.size());
  for (ElementId s = 0; s < S.size; ++s) {
    int js = g.j_class[s];
    if (js == rep.jclass) {
      ReesElement r = rep.coord(s);
      token[s] =
          (static_cast<int64_t>(r.a) * rep.num_b() + r.b) * ncosets +
          coset_id[reps[r.g]];
    } else if (!g.leq_j(rep.jclass, js)) {
      token[s] = kZeroToken;
    }
  }
  // the tokened set F(J) ∪ J must be a two-sided ideal; the signature
  // kernels rely on context products never reading an invalid token
  bool ideal = true;
#pragma omp parallel for schedule(static) reduction(&& : ideal)
  for (ElementId z = 0; z < S.size; ++z) {
    if (token[z] == kInvalidToken) continue;
    for (ElementId u = 0; u < S.size; ++u)
      if (token[S.mul(z, u)] == kInvalidToken ||
          token[S.mul(u, z)] == kInvalidToken)
        ideal = false;
  }
  require(ideal, "NotInDomain", "F(J) ∪ J is not an ideal (internal)");
  return token;
}

}  // namespace semicat
