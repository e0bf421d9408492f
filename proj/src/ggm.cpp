#include "semicat/ggm.hpp"

#include <algorithm>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "semicat/lh.hpp"

namespace semicat {

namespace {

struct SigHash {
  uint64_t h1 = 0, h2 = 0;
  bool operator==(const SigHash& o) const { return h1 == o.h1 && h2 == o.h2; }
};

// context pairs (x, y) and the token table fully determine the signature of
// an element; stream it without materializing
template <typename Fn>
void stream_signature(const FiniteMonoid& S,
                      const std::vector<ElementId>& xs,
                      const std::vector<ElementId>& ys,
                      const std::vector<int64_t>& token, ElementId s, Fn&& fn) {
  for (ElementId x : xs) {
    ElementId xs_prod = S.mul(x, s);
    for (ElementId y : ys) fn(token[S.mul(xs_prod, y)]);
  }
}

bool signatures_equal(const FiniteMonoid& S, const std::vector<ElementId>& xs,
                      const std::vector<ElementId>& ys,
                      const std::vector<int64_t>& token, ElementId s,
                      ElementId t) {
  for (ElementId x : xs) {
    ElementId a = S.mul(x, s), b = S.mul(x, t);
    for (ElementId y : ys)
      if (token[S.mul(a, y)] != token[S.mul(b, y)]) return false;
  }
  return true;
}

Congruence group_by_signature(const FiniteMonoid& S,
                              const std::vector<ElementId>& xs,
                              const std::vector<ElementId>& ys,
                              const std::vector<int64_t>& token) {
  int n = S.size;
  std::vector<SigHash> hashes(n);

#pragma omp parallel for schedule(static)
  for (int s = 0; s < n; ++s) {
    SigHash h{0x9ae16a3b2f90404fULL, 0xc949d7c7509e6557ULL};
    stream_signature(S, xs, ys, token, s, [&](int64_t tok) {
      h.h1 = hash_mix(h.h1, static_cast<uint64_t>(tok));
      h.h2 = h.h2 * 0x100000001b3ULL ^ static_cast<uint64_t>(tok + 7);
    });
    hashes[s] = h;
  }

  // provisional grouping by exact hash pair, in ascending element order
  std::vector<int> labels(n, -1);
  std::vector<ElementId> rep_of;
  {
    std::unordered_map<uint64_t, std::vector<int>> buckets;
    for (ElementId s = 0; s < n; ++s) {
      uint64_t key = hashes[s].h1 ^ (hashes[s].h2 << 1);
      auto& cand = buckets[key];
      int found = -1;
      for (int cls : cand)
        if (hashes[rep_of[cls]] == hashes[s]) {
          found = cls;
          break;
        }
      if (found == -1) {
        found = static_cast<int>(rep_of.size());
        rep_of.push_back(s);
        cand.push_back(found);
      }
      labels[s] = found;
    }
  }

  // verify each element against its class representative in parallel;
  // a mismatch would mean a hash collision
  std::vector<char> ok(n, 1);
#pragma omp parallel for schedule(static)
  for (int s = 0; s < n; ++s)
    ok[s] = signatures_equal(S, xs, ys, token, rep_of[labels[s]], s) ? 1 : 0;

  // split collision victims off into genuine classes (serial; rare)
  std::vector<std::vector<ElementId>> extra(rep_of.size());
  for (ElementId s = 0; s < n; ++s) {
    if (ok[s]) continue;
    int cls = labels[s];
    int found = -1;
    for (size_t k = 0; k < extra[cls].size(); ++k)
      if (signatures_equal(S, xs, ys, token, extra[cls][k], s)) {
        found = static_cast<int>(k);
        break;
      }
    if (found == -1) {
      extra[cls].push_back(s);
      found = static_cast<int>(extra[cls].size()) - 1;
    }
    labels[s] = static_cast<int>(rep_of.size()) + cls * n + found;
  }
  return canonical_partition(labels);
}

std::vector<ElementId> j_idempotents(const FiniteMonoid& S,
                                     const ReesRepresentation& rep) {
  std::vector<ElementId> out;
  for (ElementId x : rep.j_members)
    if (S.is_idempotent(x)) out.push_back(x);
  return out;
}

}  // namespace

Congruence ggm_congruence(const FiniteMonoid& S, const GreensData& g,
                          const ReesRepresentation& rep,
                          const Subgroup& normal) {
  std::vector<int64_t> token = eta_psi_tokens(S, g, rep, normal);
  std::vector<ElementId> idems = j_idempotents(S, rep);
  Congruence c = group_by_signature(S, idems, idems, token);
  validate_congruence(S, c);
  return c;
}

Congruence ggm_congruence_serial(const FiniteMonoid& S, const GreensData& g,
                                 const ReesRepresentation& rep,
                                 const Subgroup& normal) {
#ifdef _OPENMP
  int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  Congruence c = ggm_congruence(S, g, rep, normal);
  omp_set_num_threads(saved);
  return c;
#else
  return ggm_congruence(S, g, rep, normal);
#endif
}

Congruence ggm_congruence(const FiniteMonoid& S, const GreensData& g,
                          int jclass, const Subgroup& normal_in_gj) {
  ReesRepresentation rep = rees_representation(S, g, jclass);
  return ggm_congruence(S, g, rep, normal_in_gj);
}

Congruence ggm_congruence_unrestricted(const FiniteMonoid& S,
                                       const GreensData& g,
                                       const ReesRepresentation& rep,
                                       const Subgroup& normal) {
  std::vector<int64_t> token = eta_psi_tokens(S, g, rep, normal);
  const std::vector<ElementId>& all = rep.j_members;
  int n = S.size;
  std::vector<int> labels(n, -1);
  std::vector<ElementId> reps;
  for (ElementId s = 0; s < n; ++s) {
    int found = -1;
    for (ElementId r : reps) {
      if (signatures_equal(S, all, all, token, r, s)) {
        found = labels[r];
        break;
      }
    }
    if (found == -1) {
      labels[s] = static_cast<int>(reps.size());
      reps.push_back(s);
    } else {
      labels[s] = found;
    }
  }
  return canonical_partition(labels);
}

GgmResult ggm_quotient(const FiniteMonoid& S, const GreensData& g, int jclass,
                       const Subgroup& normal_in_gj) {
  GgmResult out;
  out.congruence = ggm_congruence(S, g, jclass, normal_in_gj);
  QuotientResult q = quotient(S, out.congruence);
  out.quotient = std::move(q.monoid);
  out.projection = std::move(q.projection);
  return out;
}

std::optional<bool> verify_ggm_property(const FiniteMonoid& S,
                                        const GreensData& g, int jclass,
                                        const GgmResult& result) {
  // F(J) nonempty is exactly the case where the quotient owns a zero class
  bool has_f = false;
  for (ElementId s = 0; s < S.size && !has_f; ++s)
    if (!g.leq_j(jclass, g.j_class[s])) has_f = true;
  if (!has_f) return std::nullopt;

  const FiniteMonoid& Q = result.quotient;
  ElementId zero = kNone;
  for (ElementId s = 0; s < S.size; ++s)
    if (!g.leq_j(jclass, g.j_class[s])) {
      zero = result.projection[s];
      break;
    }
  // zero must absorb
  for (ElementId q = 0; q < Q.size; ++q)
    if (Q.mul(zero, q) != zero || Q.mul(q, zero) != zero) return false;

  // ideal = image of J plus the zero
  std::vector<char> in_ideal(Q.size, 0);
  in_ideal[zero] = 1;
  for (ElementId x : g.j_members[jclass]) in_ideal[result.projection[x]] = 1;
  std::vector<ElementId> ideal;
  for (ElementId q = 0; q < Q.size; ++q)
    if (in_ideal[q]) ideal.push_back(q);

  // it is an ideal and it is 0-minimal: each nonzero member regenerates it
  for (ElementId m : ideal)
    for (ElementId q = 0; q < Q.size; ++q)
      if (!in_ideal[Q.mul(m, q)] || !in_ideal[Q.mul(q, m)]) return false;
  for (ElementId m : ideal) {
    if (m == zero) continue;
    std::vector<char> gen(Q.size, 0);
    gen[m] = 1;
    gen[zero] = 1;
    std::vector<ElementId> todo{m};
    while (!todo.empty()) {
      ElementId y = todo.back();
      todo.pop_back();
      for (ElementId q = 0; q < Q.size; ++q)
        for (ElementId z : {Q.mul(y, q), Q.mul(q, y)})
          if (in_ideal[z] && !gen[z]) {
            gen[z] = 1;
            todo.push_back(z);
          }
    }
    for (ElementId q : ideal)
      if (!gen[q]) return false;
  }

  // faithful action on the ideal from both sides
  for (ElementId s = 0; s < Q.size; ++s)
    for (ElementId t = s + 1; t < Q.size; ++t) {
      bool left = false, right = false;
      for (ElementId m : ideal) {
        if (Q.mul(s, m) != Q.mul(t, m)) right = true;
        if (Q.mul(m, s) != Q.mul(m, t)) left = true;
        if (left && right) break;
      }
      if (!left || !right) return false;
    }
  return true;
}

Congruence lh_canonical_congruence(const FiniteMonoid& S, const Pvar& h) {
  require(h.kind == PvarKind::group, "WrongPredicateKind",
          h.name + " is not a group pseudovariety");
  require(h.fitting, "NotFitting", h.name + " is not flagged Fitting");
  GreensData g = greens(S);
  Congruence acc = universal_congruence(S.size);
  for (int j = 0; j < g.num_j; ++j) {
    if (!g.j_regular[j]) continue;
    ReesRepresentation rep = rees_representation(S, g, j);
    Subgroup radical = h_radical_set(rep.group, h);
    acc = meet_congruence(acc, ggm_congruence(S, g, rep, radical));
  }
  validate_congruence(S, acc);
  // the canonical projection is itself an LH-morphism
  require(is_lh_morphism(quotient_morphism(S, acc), h), "NotFitting",
          "canonical projection failed the LH check (internal)");
  return acc;
}

bool malcev_membership(const FiniteMonoid& M, const Pvar& h, const Pvar& v) {
  require(M.has_identity(), "BadIdentity",
          "Mal'cev membership is defined for monoids");
  require(h.kind == PvarKind::group, "WrongPredicateKind",
          h.name + " is not a group pseudovariety");
  require(h.fitting, "NotFitting", h.name + " is not flagged Fitting");
  require(v.kind == PvarKind::monoid, "WrongPredicateKind",
          v.name + " is not a monoid pseudovariety");
  GreensData g = greens(M);
  for (int j = 0; j < g.num_j; ++j) {
    if (!g.j_regular[j]) continue;
    ReesRepresentation rep = rees_representation(M, g, j);
    Subgroup radical = h_radical_set(rep.group, h);
    Congruence c = ggm_congruence(M, g, rep, radical);
    if (!v.test(quotient(M, c).monoid)) return false;
  }
  return true;
}

}  // namespace semicat
