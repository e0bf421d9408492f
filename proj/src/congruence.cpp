#include "semicat/congruence.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace semicat {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;  // keep least id as root
    return true;
  }
};

Congruence from_union_find(UnionFind& uf) {
  std::vector<int> labels(uf.parent.size());
  for (size_t x = 0; x < uf.parent.size(); ++x)
    labels[x] = uf.find(static_cast<int>(x));
  return canonical_partition(labels);
}

}  // namespace

Congruence canonical_partition(const std::vector<int>& labels) {
  Congruence c;
  c.class_of.assign(labels.size(), -1);
  std::unordered_map<int, int> remap;
  int next = 0;
  for (size_t x = 0; x < labels.size(); ++x) {
    auto it = remap.find(labels[x]);
    if (it == remap.end()) {
      remap.emplace(labels[x], next);
      c.class_of[x] = next++;
    } else {
      c.class_of[x] = it->second;
    }
  }
  c.num_classes = next;
  return c;
}

Congruence trivial_congruence(int n) {
  Congruence c;
  c.class_of.resize(n);
  for (int i = 0; i < n; ++i) c.class_of[i] = i;
  c.num_classes = n;
  return c;
}

Congruence universal_congruence(int n) {
  Congruence c;
  c.class_of.assign(n, 0);
  c.num_classes = n > 0 ? 1 : 0;
  return c;
}

bool is_congruence(const FiniteMonoid& S, const Congruence& c) {
  int n = S.size;
  if (static_cast<int>(c.class_of.size()) != n) return false;
  std::vector<ElementId> rep(c.num_classes, kNone);
  for (ElementId x = 0; x < n; ++x) {
    int cl = c.class_of[x];
    if (cl < 0 || cl >= c.num_classes) return false;
    if (rep[cl] == kNone) rep[cl] = x;
  }
  for (int cl = 0; cl < c.num_classes; ++cl)
    if (rep[cl] == kNone) return false;
  // compatibility via one-sided translations against the class rep
  for (ElementId x = 0; x < n; ++x) {
    ElementId r = rep[c.class_of[x]];
    if (r == x) continue;
    for (ElementId u = 0; u < n; ++u) {
      if (c.class_of[S.mul(u, x)] != c.class_of[S.mul(u, r)]) return false;
      if (c.class_of[S.mul(x, u)] != c.class_of[S.mul(r, u)]) return false;
    }
  }
  return true;
}

void validate_congruence(const FiniteMonoid& S, const Congruence& c) {
  require(is_congruence(S, c), "IncompatiblePartition",
          "partition is not a congruence");
}

Congruence principal_congruence(const FiniteMonoid& S, ElementId x,
                                ElementId y) {
  require(x >= 0 && x < S.size && y >= 0 && y < S.size, "IndexOutOfRange",
          "element out of range");
  require(x != y, "SamePair", "need two distinct elements");
  UnionFind uf(S.size);
  std::vector<std::pair<ElementId, ElementId>> worklist;
  uf.unite(x, y);
  worklist.emplace_back(x, y);
  while (!worklist.empty()) {
    auto [a, b] = worklist.back();
    worklist.pop_back();
    for (ElementId u = 0; u < S.size; ++u) {
      if (uf.unite(S.mul(u, a), S.mul(u, b)))
        worklist.emplace_back(S.mul(u, a), S.mul(u, b));
      if (uf.unite(S.mul(a, u), S.mul(b, u)))
        worklist.emplace_back(S.mul(a, u), S.mul(b, u));
    }
  }
  return from_union_find(uf);
}

std::vector<Congruence> all_congruences(const FiniteMonoid& S, int cap) {
  int limit = cap > 0 ? cap : size_cap(kAllCongruencesCap);
  require(S.size <= limit, "SizeLimitExceeded",
          "all_congruences capped at size " + std::to_string(limit));

  std::vector<Congruence> out;
  std::unordered_set<std::vector<int32_t>, VecHash> seen;
  auto add = [&](const Congruence& c) {
    std::vector<int32_t> key(c.class_of.begin(), c.class_of.end());
    if (seen.insert(std::move(key)).second) {
      out.push_back(c);
      return true;
    }
    return false;
  };

  add(trivial_congruence(S.size));
  for (ElementId x = 0; x < S.size; ++x)
    for (ElementId y = x + 1; y < S.size; ++y)
      add(principal_congruence(S, x, y));

  // join-closure: process every pair of known congruences until stable
  for (size_t i = 0; i < out.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      Congruence joined = join_congruence(out[i], out[j]);
      add(joined);
    }
  }
  return out;
}

Congruence join_congruence(const Congruence& a, const Congruence& b) {
  int n = static_cast<int>(a.class_of.size());
  UnionFind uf(n);
  std::vector<int> first_a(a.num_classes, -1), first_b(b.num_classes, -1);
  for (int x = 0; x < n; ++x) {
    if (first_a[a.class_of[x]] == -1)
      first_a[a.class_of[x]] = x;
    else
      uf.unite(first_a[a.class_of[x]], x);
    if (first_b[b.class_of[x]] == -1)
      first_b[b.class_of[x]] = x;
    else
      uf.unite(first_b[b.class_of[x]], x);
  }
  return from_union_find(uf);
}

Congruence meet_congruence(const Congruence& a, const Congruence& b) {
  int n = static_cast<int>(a.class_of.size());
  std::vector<int> labels(n);
  for (int x = 0; x < n; ++x)
    labels[x] = a.class_of[x] * (b.num_classes + 1) + b.class_of[x];
  return canonical_partition(labels);
}

bool finer_or_equal(const Congruence& a, const Congruence& b) {
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

void validate_morphism(const MonoidMorphism& phi, bool require_surjective) {
  const auto& S = phi.source;
  const auto& T = phi.target;
  require(static_cast<int>(phi.map.size()) == S.size, "IndexOutOfRange",
          "morphism map has wrong length");
  for (ElementId v : phi.map)
    require(v >= 0 && v < T.size, "IndexOutOfRange",
            "morphism image out of range");
  if (S.has_identity()) {
    require(T.has_identity() && phi.map[S.identity] == T.identity,
            "BadIdentity", "morphism does not preserve the identity");
  }
  for (ElementId x = 0; x < S.size; ++x)
    for (ElementId y = 0; y < S.size; ++y)
      require(phi.map[S.mul(x, y)] == T.mul(phi.map[x], phi.map[y]),
              "IncompatiblePartition", "map is not multiplicative");
  if (require_surjective) {
    std::vector<char> hit(T.size, 0);
    for (ElementId v : phi.map) hit[v] = 1;
    for (ElementId t = 0; t < T.size; ++t)
      require(hit[t] != 0, "NotSurjective", "morphism is not surjective");
  }
}

Congruence kernel_congruence(const MonoidMorphism& phi) {
  return canonical_partition(
      std::vector<int>(phi.map.begin(), phi.map.end()));
}

QuotientResult quotient(const FiniteMonoid& S, const Congruence& c) {
  validate_congruence(S, c);
  int k = c.num_classes;
  std::vector<ElementId> rep(k, kNone);
  for (ElementId x = 0; x < S.size; ++x)
    if (rep[c.class_of[x]] == kNone) rep[c.class_of[x]] = x;
  std::vector<ElementId> flat(static_cast<size_t>(k) * k);
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q)
      flat[static_cast<size_t>(p) * k + q] = c.class_of[S.mul(rep[p], rep[q])];
  ElementId id = S.has_identity() ? c.class_of[S.identity] : kNone;
  QuotientResult out;
  out.monoid = table_from_flat(k, std::move(flat), id, {}, false);
  out.projection.assign(c.class_of.begin(), c.class_of.end());
  return out;
}

MonoidMorphism quotient_morphism(const FiniteMonoid& S, const Congruence& c) {
  QuotientResult q = quotient(S, c);
  MonoidMorphism phi;
  phi.source = S;
  phi.target = std::move(q.monoid);
  phi.map = std::move(q.projection);
  return phi;
}

}  // namespace semicat
