#include "semicat/category.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "semicat/lh.hpp"

namespace semicat {

FiniteCategory category_from_parts(
    int num_objects,
    const std::vector<std::pair<ElementId, ElementId>>& arrows,
    const std::vector<ElementId>& identities,
    const std::map<std::pair<ElementId, ElementId>, ElementId>& compose) {
  require(num_objects >= 1, "IndexOutOfRange", "need at least one object");
  FiniteCategory C;
  C.num_objects = num_objects;
  int narr = static_cast<int>(arrows.size());
  for (auto [s, d] : arrows) {
    require(s >= 0 && s < num_objects && d >= 0 && d < num_objects,
            "IndexOutOfRange", "arrow endpoint out of range");
    C.src.push_back(s);
    C.dst.push_back(d);
  }
  require(static_cast<int>(identities.size()) == num_objects, "BadIdentity",
          "need one identity arrow per object");
  C.identity_arrow = identities;
  for (ElementId c = 0; c < num_objects; ++c) {
    ElementId e = identities[c];
    require(e >= 0 && e < narr && C.src[e] == c && C.dst[e] == c,
            "BadIdentity", "identity arrow of object " + std::to_string(c) +
                               " is not an endo-arrow there");
  }
  C.compose_table.assign(static_cast<size_t>(narr) * narr, kNone);
  for (const auto& [key, val] : compose) {
    auto [i, j] = key;
    require(i >= 0 && i < narr && j >= 0 && j < narr && val >= 0 && val < narr,
            "IndexOutOfRange", "composition entry out of range");
    require(C.dst[i] == C.src[j], "BadComposition",
            "composite defined on a non-composable pair");
    C.compose_table[static_cast<size_t>(i) * narr + j] = val;
  }
  for (ElementId i = 0; i < narr; ++i)
    for (ElementId j = 0; j < narr; ++j) {
      ElementId v = C.compose(i, j);
      if (C.dst[i] != C.src[j]) continue;
      require(v != kNone, "BadComposition",
              "missing composite of a composable pair (" + std::to_string(i) +
                  "," + std::to_string(j) + ")");
      require(C.src[v] == C.src[i] && C.dst[v] == C.dst[j], "BadComposition",
              "composite endpoints wrong");
    }
  for (ElementId i = 0; i < narr; ++i) {
    require(C.compose(C.identity_arrow[C.src[i]], i) == i &&
                C.compose(i, C.identity_arrow[C.dst[i]]) == i,
            "BadIdentity", "identity arrows are not neutral");
  }
  for (ElementId i = 0; i < narr; ++i)
    for (ElementId j = 0; j < narr; ++j) {
      if (C.dst[i] != C.src[j]) continue;
      ElementId ij = C.compose(i, j);
      for (ElementId k = 0; k < narr; ++k) {
        if (C.dst[j] != C.src[k]) continue;
        require(C.compose(ij, k) == C.compose(i, C.compose(j, k)),
                "NonAssociative", "triple (" + std::to_string(i) + "," +
                                      std::to_string(j) + "," +
                                      std::to_string(k) + ")");
      }
    }
  return C;
}

FiniteCategory cat_from_monoid(const FiniteMonoid& m) {
  require(m.has_identity(), "BadIdentity",
          "a one-object category needs a monoid identity");
  FiniteCategory C;
  C.num_objects = 1;
  C.src.assign(m.size, 0);
  C.dst.assign(m.size, 0);
  C.identity_arrow = {m.identity};
  C.compose_table = m.table;
  return C;
}

LocalMonoid local_monoid_at(const FiniteCategory& C, ElementId c) {
  require(c >= 0 && c < C.num_objects, "IndexOutOfRange", "no such object");
  LocalMonoid out;
  for (ElementId i = 0; i < C.num_arrows(); ++i)
    if (C.src[i] == c && C.dst[i] == c) out.embedding.push_back(i);
  int n = static_cast<int>(out.embedding.size());
  std::vector<ElementId> flat(static_cast<size_t>(n) * n);
  std::unordered_map<ElementId, ElementId> pos;
  for (ElementId i = 0; i < n; ++i) pos[out.embedding[i]] = i;
  for (ElementId i = 0; i < n; ++i)
    for (ElementId j = 0; j < n; ++j)
      flat[static_cast<size_t>(i) * n + j] =
          pos.at(C.compose(out.embedding[i], out.embedding[j]));
  out.monoid = table_from_flat(n, std::move(flat),
                               pos.at(C.identity_arrow[c]), {}, false);
  return out;
}

Consolidation consolidation(const FiniteCategory& C) {
  int narr = C.num_arrows();
  int n = narr + 2;
  ElementId zero = narr, one = narr + 1;
  std::vector<ElementId> flat(static_cast<size_t>(n) * n, zero);
  for (ElementId i = 0; i < narr; ++i)
    for (ElementId j = 0; j < narr; ++j) {
      ElementId v = C.dst[i] == C.src[j] ? C.compose(i, j) : zero;
      flat[static_cast<size_t>(i) * n + j] = v;
    }
  for (ElementId i = 0; i < n; ++i) {
    flat[static_cast<size_t>(one) * n + i] = i;
    flat[static_cast<size_t>(i) * n + one] = i;
    flat[static_cast<size_t>(zero) * n + i] = zero;
    flat[static_cast<size_t>(i) * n + zero] = zero;
  }
  Consolidation out;
  out.zero = zero;
  out.one = one;
  out.monoid = table_from_flat(n, std::move(flat), one, {}, false);
  return out;
}

CatCongruence cat_canonical_partition(const std::vector<int>& labels) {
  Congruence c = canonical_partition(labels);
  CatCongruence k;
  k.class_of = std::move(c.class_of);
  k.num_classes = c.num_classes;
  return k;
}

CatCongruence cat_trivial_congruence(int narr) {
  CatCongruence k;
  k.class_of.resize(narr);
  for (int i = 0; i < narr; ++i) k.class_of[i] = i;
  k.num_classes = narr;
  return k;
}

bool is_cat_congruence(const FiniteCategory& C, const CatCongruence& k) {
  int narr = C.num_arrows();
  if (static_cast<int>(k.class_of.size()) != narr) return false;
  std::vector<ElementId> rep(k.num_classes, kNone);
  for (ElementId i = 0; i < narr; ++i) {
    int cl = k.class_of[i];
    if (cl < 0 || cl >= k.num_classes) return false;
    if (rep[cl] == kNone) rep[cl] = i;
  }
  for (int cl = 0; cl < k.num_classes; ++cl)
    if (rep[cl] == kNone) return false;
  for (ElementId i = 0; i < narr; ++i) {
    ElementId r = rep[k.class_of[i]];
    if (!C.coterminal(i, r)) return false;
    if (r == i) continue;
    for (ElementId u = 0; u < narr; ++u) {
      if (C.dst[u] == C.src[i] &&
          k.class_of[C.compose(u, i)] != k.class_of[C.compose(u, r)])
        return false;
      if (C.dst[i] == C.src[u] &&
          k.class_of[C.compose(i, u)] != k.class_of[C.compose(r, u)])
        return false;
    }
  }
  return true;
}

void validate_cat_congruence(const FiniteCategory& C, const CatCongruence& k) {
  int narr = C.num_arrows();
  require(static_cast<int>(k.class_of.size()) == narr, "IndexOutOfRange",
          "congruence has wrong length");
  std::vector<ElementId> first(k.num_classes, kNone);
  for (ElementId i = 0; i < narr; ++i) {
    int cl = k.class_of[i];
    require(cl >= 0 && cl < k.num_classes, "IndexOutOfRange",
            "class id out of range");
    if (first[cl] == kNone)
      first[cl] = i;
    else
      require(C.coterminal(i, first[cl]), "NonCoterminalClass",
              "class " + std::to_string(cl) + " mixes non-coterminal arrows");
  }
  require(is_cat_congruence(C, k), "IncompatiblePartition",
          "partition is not a category congruence");
}

CatCongruence cat_principal_congruence(const FiniteCategory& C, ElementId x,
                                       ElementId y) {
  int narr = C.num_arrows();
  require(x >= 0 && x < narr && y >= 0 && y < narr, "IndexOutOfRange",
          "arrow out of range");
  require(x != y, "SamePair", "need two distinct arrows");
  require(C.coterminal(x, y), "NotCoterminal",
          "principal congruences need coterminal arrows");
  std::vector<int> parent(narr);
  for (int i = 0; i < narr; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  };
  std::vector<std::pair<ElementId, ElementId>> work{{x, y}};
  unite(x, y);
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    for (ElementId u = 0; u < narr; ++u) {
      if (C.dst[u] == C.src[a] && unite(C.compose(u, a), C.compose(u, b)))
        work.emplace_back(C.compose(u, a), C.compose(u, b));
      if (C.dst[a] == C.src[u] && unite(C.compose(a, u), C.compose(b, u)))
        work.emplace_back(C.compose(a, u), C.compose(b, u));
    }
  }
  std::vector<int> labels(narr);
  for (int i = 0; i < narr; ++i) labels[i] = find(i);
  return cat_canonical_partition(labels);
}

CatCongruence join_cat_congruence(const FiniteCategory& C,
                                  const CatCongruence& a,
                                  const CatCongruence& b) {
  (void)C;
  int n = static_cast<int>(a.class_of.size());
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (x > y) std::swap(x, y);
    parent[y] = x;
  };
  std::vector<int> fa(a.num_classes, -1), fb(b.num_classes, -1);
  for (int i = 0; i < n; ++i) {
    if (fa[a.class_of[i]] == -1)
      fa[a.class_of[i]] = i;
    else
      unite(fa[a.class_of[i]], i);
    if (fb[b.class_of[i]] == -1)
      fb[b.class_of[i]] = i;
    else
      unite(fb[b.class_of[i]], i);
  }
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = find(i);
  return cat_canonical_partition(labels);
}

bool cat_finer_or_equal(const CatCongruence& a, const CatCongruence& b) {
  std::vector<int> img(a.num_classes, -1);
  for (size_t x = 0; x < a.class_of.size(); ++x) {
    int ca = a.class_of[x];
    if (img[ca] == -1)
      img[ca] = b.class_of[x];
    else if (img[ca] != b.class_of[x])
      return false;
  }
  return true;
}

std::vector<CatCongruence> all_cat_congruences(const FiniteCategory& C,
                                               int max_count) {
  int narr = C.num_arrows();
  std::vector<CatCongruence> out;
  std::unordered_set<std::vector<int32_t>, VecHash> seen;
  auto add = [&](const CatCongruence& k) {
    std::vector<int32_t> key(k.class_of.begin(), k.class_of.end());
    if (seen.insert(std::move(key)).second) {
      require(static_cast<int>(out.size()) < max_count, "SizeLimitExceeded",
              "congruence enumeration exceeded " + std::to_string(max_count));
      out.push_back(k);
    }
  };
  add(cat_trivial_congruence(narr));
  for (ElementId x = 0; x < narr; ++x)
    for (ElementId y = x + 1; y < narr; ++y)
      if (C.coterminal(x, y)) add(cat_principal_congruence(C, x, y));
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      add(join_cat_congruence(C, out[i], out[j]));
  return out;
}

void validate_cat_morphism(const CatMorphism& phi, bool require_quotient) {
  const FiniteCategory& C = phi.source;
  const FiniteCategory& D = phi.target;
  require(C.num_objects == D.num_objects, "NotQuotient",
          "morphisms here are identity on objects");
  require(static_cast<int>(phi.arrow_map.size()) == C.num_arrows(),
          "IndexOutOfRange", "arrow map has wrong length");
  for (ElementId i = 0; i < C.num_arrows(); ++i) {
    ElementId v = phi.arrow_map[i];
    require(v >= 0 && v < D.num_arrows(), "IndexOutOfRange",
            "arrow image out of range");
    require(C.src[i] == D.src[v] && C.dst[i] == D.dst[v], "NotQuotient",
            "arrow map does not preserve endpoints");
  }
  for (ElementId c = 0; c < C.num_objects; ++c)
    require(phi.arrow_map[C.identity_arrow[c]] == D.identity_arrow[c],
            "NotQuotient", "identity arrows not preserved");
  for (ElementId i = 0; i < C.num_arrows(); ++i)
    for (ElementId j = 0; j < C.num_arrows(); ++j)
      if (C.dst[i] == C.src[j])
        require(phi.arrow_map[C.compose(i, j)] ==
                    D.compose(phi.arrow_map[i], phi.arrow_map[j]),
                "NotQuotient", "composition not preserved");
  if (require_quotient) {
    std::vector<char> hit(D.num_arrows(), 0);
    for (ElementId v : phi.arrow_map) hit[v] = 1;
    for (ElementId v = 0; v < D.num_arrows(); ++v)
      require(hit[v] != 0, "NotQuotient", "morphism not surjective on arrows");
  }
}

CatCongruence cat_kernel(const CatMorphism& phi) {
  return cat_canonical_partition(
      std::vector<int>(phi.arrow_map.begin(), phi.arrow_map.end()));
}

CatQuotient cat_quotient(const FiniteCategory& C, const CatCongruence& k) {
  validate_cat_congruence(C, k);
  int narr = C.num_arrows();
  int m = k.num_classes;
  std::vector<ElementId> rep(m, kNone);
  for (ElementId i = 0; i < narr; ++i)
    if (rep[k.class_of[i]] == kNone) rep[k.class_of[i]] = i;

  FiniteCategory D;
  D.num_objects = C.num_objects;
  D.src.resize(m);
  D.dst.resize(m);
  for (int cl = 0; cl < m; ++cl) {
    D.src[cl] = C.src[rep[cl]];
    D.dst[cl] = C.dst[rep[cl]];
  }
  D.identity_arrow.resize(C.num_objects);
  for (ElementId c = 0; c < C.num_objects; ++c)
    D.identity_arrow[c] = k.class_of[C.identity_arrow[c]];
  D.compose_table.assign(static_cast<size_t>(m) * m, kNone);
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      if (D.dst[p] == D.src[q])
        D.compose_table[static_cast<size_t>(p) * m + q] =
            k.class_of[C.compose(rep[p], rep[q])];

  CatQuotient out;
  out.category = std::move(D);
  out.projection.source = C;
  out.projection.target = out.category;
  out.projection.arrow_map.assign(k.class_of.begin(), k.class_of.end());
  validate_cat_morphism(out.projection, /*require_quotient=*/true);
  return out;
}

CatMorphism compose_cat_morphisms(const CatMorphism& f, const CatMorphism& g) {
  require(f.target.num_arrows() == g.source.num_arrows() &&
              f.target.num_objects == g.source.num_objects,
          "NotQuotient", "morphisms do not compose");
  CatMorphism h;
  h.source = f.source;
  h.target = g.target;
  h.arrow_map.resize(f.arrow_map.size());
  for (size_t i = 0; i < f.arrow_map.size(); ++i)
    h.arrow_map[i] = g.arrow_map[f.arrow_map[i]];
  return h;
}

MonoidMorphism consolidation_morphism(const CatMorphism& phi) {
  Consolidation cs = consolidation(phi.source);
  Consolidation ct = consolidation(phi.target);
  MonoidMorphism out;
  out.map.resize(cs.monoid.size);
  for (ElementId i = 0; i < phi.source.num_arrows(); ++i)
    out.map[i] = phi.arrow_map[i];
  out.map[cs.zero] = ct.zero;
  out.map[cs.one] = ct.one;
  out.source = std::move(cs.monoid);
  out.target = std::move(ct.monoid);
  return out;
}

bool is_lh_morphism_cat(const CatMorphism& phi, const Pvar& h) {
  validate_cat_morphism(phi, /*require_quotient=*/true);
  for (ElementId c = 0; c < phi.source.num_objects; ++c) {
    LocalMonoid lc = local_monoid_at(phi.source, c);
    LocalMonoid dc = local_monoid_at(phi.target, c);
    std::unordered_map<ElementId, ElementId> dpos;
    for (ElementId i = 0; i < dc.monoid.size; ++i) dpos[dc.embedding[i]] = i;
    MonoidMorphism restricted;
    restricted.source = lc.monoid;
    restricted.target = dc.monoid;
    restricted.map.resize(lc.monoid.size);
    for (ElementId i = 0; i < lc.monoid.size; ++i)
      restricted.map[i] = dpos.at(phi.arrow_map[lc.embedding[i]]);
    if (!is_lh_morphism(restricted, h)) return false;
  }
  return true;
}

namespace {

// kernel minimality: every pair inside the kernel must regenerate it
bool kernel_is_minimal_cat(const FiniteCategory& C, const CatCongruence& ker) {
  for (ElementId x = 0; x < C.num_arrows(); ++x)
    for (ElementId y = x + 1; y < C.num_arrows(); ++y) {
      if (ker.class_of[x] != ker.class_of[y]) continue;
      if (!(cat_principal_congruence(C, x, y) == ker)) return false;
    }
  return true;
}

}  // namespace

bool is_mpq(const CatMorphism& phi) {
  validate_cat_morphism(phi, /*require_quotient=*/true);
  CatCongruence ker = cat_kernel(phi);
  require(!ker.is_trivial(), "Injective",
          "an injective quotient is not a proper quotient");
  return kernel_is_minimal_cat(phi.source, ker);
}

bool is_mps(const MonoidMorphism& phi) {
  validate_morphism(phi, /*require_surjective=*/true);
  Congruence ker = kernel_congruence(phi);
  require(!ker.is_trivial(), "Injective",
          "an injective surmorphism is not proper");
  for (ElementId x = 0; x < phi.source.size; ++x)
    for (ElementId y = x + 1; y < phi.source.size; ++y) {
      if (ker.class_of[x] != ker.class_of[y]) continue;
      if (!(principal_congruence(phi.source, x, y) == ker)) return false;
    }
  return true;
}

std::vector<CatMorphism> mpq_factorize(const CatMorphism& phi) {
  validate_cat_morphism(phi, /*require_quotient=*/true);
  std::vector<CatMorphism> chain;
  FiniteCategory current = phi.source;
  CatCongruence ker = cat_kernel(phi);
  // remaining[i]: kernel class of arrow i of `current` under phi
  std::vector<int> remaining = ker.class_of;

  while (true) {
    CatCongruence rem = cat_canonical_partition(remaining);
    if (rem.is_trivial()) break;
    // principal congruences of kernel pairs, in lexicographic pair order
    CatCongruence best;
    bool have = false;
    std::vector<std::pair<ElementId, ElementId>> pairs;
    std::vector<CatCongruence> pcs;
    for (ElementId x = 0; x < current.num_arrows(); ++x)
      for (ElementId y = x + 1; y < current.num_arrows(); ++y) {
        if (rem.class_of[x] != rem.class_of[y]) continue;
        pairs.emplace_back(x, y);
        pcs.push_back(cat_principal_congruence(current, x, y));
      }
    for (size_t i = 0; i < pairs.size() && !have; ++i) {
      bool minimal = true;
      for (size_t j = 0; j < pairs.size() && minimal; ++j) {
        if (j == i) continue;
        if (cat_finer_or_equal(pcs[j], pcs[i]) && !(pcs[j] == pcs[i]))
          minimal = false;
      }
      if (minimal) {
        best = pcs[i];
        have = true;
      }
    }
    require(have, "SizeLimitExceeded", "no minimal factor found (internal)");
    CatQuotient q = cat_quotient(current, best);
    // push the remaining kernel through the factor
    std::vector<int> next(q.category.num_arrows(), -1);
    for (ElementId i = 0; i < current.num_arrows(); ++i)
      next[q.projection.arrow_map[i]] = rem.class_of[i];
    chain.push_back(q.projection);
    current = q.category;
    remaining = std::move(next);
  }

  if (!chain.empty()) {
    // retarget the last factor onto phi.target so the chain composes to phi
    CatMorphism& last = chain.back();
    std::vector<ElementId> into_d(last.target.num_arrows(), kNone);
    // arrows of the accumulated quotient correspond to kernel classes;
    // map each to the image under phi of any original preimage
    CatMorphism acc = chain[0];
    for (size_t i = 1; i < chain.size(); ++i)
      acc = compose_cat_morphisms(acc, chain[i]);
    for (ElementId i = 0; i < phi.source.num_arrows(); ++i)
      into_d[acc.arrow_map[i]] = phi.arrow_map[i];
    for (ElementId v : into_d)
      require(v != kNone, "NotQuotient", "factorization incomplete (internal)");
    CatMorphism retarget;
    retarget.source = last.source;
    retarget.target = phi.target;
    retarget.arrow_map.resize(last.arrow_map.size());
    for (size_t i = 0; i < last.arrow_map.size(); ++i)
      retarget.arrow_map[i] = into_d[last.arrow_map[i]];
    validate_cat_morphism(retarget, /*require_quotient=*/true);
    chain.back() = std::move(retarget);
  }
  return chain;
}

}  // namespace semicat
