#include "semicat/monoid.hpp"

#include <algorithm>
#include <functional>
#include <tuple>
#include <unordered_map>

namespace semicat {

std::vector<ElementId> FiniteMonoid::idempotents() const {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < size; ++x)
    if (is_idempotent(x)) out.push_back(x);
  return out;
}

std::string FiniteMonoid::label(ElementId x) const {
  if (x >= 0 && static_cast<size_t>(x) < labels.size() && !labels[x].empty())
    return labels[x];
  return "e" + std::to_string(x);
}

FiniteMonoid table_from_flat(int size, std::vector<ElementId> flat,
                             ElementId identity,
                             std::vector<std::string> labels,
                             bool check_assoc) {
  require(size >= 1, "IndexOutOfRange", "empty table");
  require(static_cast<size_t>(size) * size == flat.size(), "IndexOutOfRange",
          "table is not square");
  for (ElementId v : flat)
    require(v >= 0 && v < size, "IndexOutOfRange",
            "table entry " + std::to_string(v) + " out of range");
  FiniteMonoid m;
  m.size = size;
  m.identity = identity;
  m.table = std::move(flat);
  m.labels = std::move(labels);
  require(m.labels.empty() || static_cast<int>(m.labels.size()) == size,
          "IndexOutOfRange", "label count mismatch");
  if (identity != kNone) {
    require(identity >= 0 && identity < size, "BadIdentity",
            "identity id out of range");
    for (ElementId x = 0; x < size; ++x)
      require(m.mul(identity, x) == x && m.mul(x, identity) == x, "BadIdentity",
              "element " + std::to_string(identity) + " is not an identity");
  }
  if (check_assoc) {
    for (ElementId x = 0; x < size; ++x)
      for (ElementId y = 0; y < size; ++y) {
        ElementId xy = m.mul(x, y);
        for (ElementId z = 0; z < size; ++z)
          require(m.mul(xy, z) == m.mul(x, m.mul(y, z)), "NonAssociative",
                  "(x,y,z) = (" + std::to_string(x) + "," + std::to_string(y) +
                      "," + std::to_string(z) + ")");
      }
  }
  return m;
}

static std::vector<ElementId> flatten(
    const std::vector<std::vector<ElementId>>& rows) {
  std::vector<ElementId> flat;
  size_t n = rows.size();
  flat.reserve(n * n);
  for (const auto& row : rows) {
    require(row.size() == n, "IndexOutOfRange", "table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return flat;
}

FiniteMonoid monoid_from_table(const std::vector<std::vector<ElementId>>& rows,
                               ElementId identity,
                               std::vector<std::string> labels) {
  require(identity != kNone, "BadIdentity", "monoid needs an identity");
  return table_from_flat(static_cast<int>(rows.size()), flatten(rows), identity,
                         std::move(labels));
}

FiniteMonoid semigroup_from_table(
    const std::vector<std::vector<ElementId>>& rows,
    std::vector<std::string> labels) {
  return table_from_flat(static_cast<int>(rows.size()), flatten(rows), kNone,
                         std::move(labels));
}

FiniteMonoid monoid_from_generators(const std::vector<std::vector<int>>& maps,
                                    int max_size) {
  int cap = max_size > 0 ? max_size : size_cap(kGeneratorClosureCap);
  size_t degree = maps.empty() ? 1 : maps[0].size();
  for (const auto& f : maps) {
    require(f.size() == degree, "DomainMismatch",
            "generators act on sets of different sizes");
    for (int v : f)
      require(v >= 0 && static_cast<size_t>(v) < degree, "DomainMismatch",
              "map value out of range");
  }

  auto compose = [&](const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> h(degree);
    for (size_t i = 0; i < degree; ++i) h[i] = g[f[i]];  // f, then g
    return h;
  };

  std::vector<int> id(degree);
  for (size_t i = 0; i < degree; ++i) id[i] = static_cast<int>(i);

  std::vector<std::vector<int>> elems;
  std::unordered_map<std::vector<int32_t>, ElementId, VecHash> index;
  auto key = [](const std::vector<int>& f) {
    return std::vector<int32_t>(f.begin(), f.end());
  };
  auto add = [&](const std::vector<int>& f) -> ElementId {
    auto it = index.find(key(f));
    if (it != index.end()) return it->second;
    ElementId id_new = static_cast<ElementId>(elems.size());
    require(id_new < cap, "SizeLimitExceeded",
            "generated monoid exceeds cap " + std::to_string(cap));
    index.emplace(key(f), id_new);
    elems.push_back(f);
    return id_new;
  };

  add(id);
  std::vector<std::vector<int>> gens;
  for (const auto& f : maps) {
    add(f);
    gens.push_back(f);
  }
  // breadth-first closure under right multiplication by generators
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      std::vector<int> f = elems[i];  // elems may reallocate inside add()
      add(compose(f, g));
    }
  }

  int n = static_cast<int>(elems.size());
  std::vector<ElementId> flat(static_cast<size_t>(n) * n);
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y) {
      auto it = index.find(key(compose(elems[x], elems[y])));
      require(it != index.end(), "SizeLimitExceeded",
              "closure incomplete (internal)");
      flat[static_cast<size_t>(x) * n + y] = it->second;
    }
  // associative by construction (function composition)
  return table_from_flat(n, std::move(flat), 0, {}, false);
}

LocalMonoid local_monoid(const FiniteMonoid& S, ElementId e) {
  require(e >= 0 && e < S.size, "IndexOutOfRange", "element out of range");
  require(S.is_idempotent(e), "NotIdempotent",
          "element " + std::to_string(e) + " is not idempotent");
  std::vector<char> seen(S.size, 0);
  for (ElementId x = 0; x < S.size; ++x) seen[S.mul(S.mul(e, x), e)] = 1;
  std::vector<ElementId> elems;
  for (ElementId x = 0; x < S.size; ++x)
    if (seen[x]) elems.push_back(x);
  LocalMonoid out;
  out.monoid = induced_table(S, elems, e);
  out.embedding = std::move(elems);
  return out;
}

FiniteMonoid induced_table(const FiniteMonoid& S,
                           const std::vector<ElementId>& elems,
                           ElementId identity_parent) {
  int n = static_cast<int>(elems.size());
  require(n >= 1, "IndexOutOfRange", "empty carrier");
  std::unordered_map<ElementId, ElementId> pos;
  for (ElementId i = 0; i < n; ++i) pos[elems[i]] = i;
  std::vector<ElementId> flat(static_cast<size_t>(n) * n);
  for (ElementId i = 0; i < n; ++i)
    for (ElementId j = 0; j < n; ++j) {
      auto it = pos.find(S.mul(elems[i], elems[j]));
      require(it != pos.end(), "IncompatiblePartition",
              "subset not closed under products");
      flat[static_cast<size_t>(i) * n + j] = it->second;
    }
  ElementId id_local = kNone;
  if (identity_parent != kNone) {
    auto it = pos.find(identity_parent);
    require(it != pos.end(), "BadIdentity", "identity not in carrier");
    id_local = it->second;
  }
  std::vector<std::string> labels;
  if (!S.labels.empty()) {
    for (ElementId p : elems) labels.push_back(S.label(p));
  }
  return table_from_flat(n, std::move(flat), id_local, std::move(labels),
                         false);
}

bool tables_equal(const FiniteMonoid& a, const FiniteMonoid& b) {
  return a.size == b.size && a.identity == b.identity && a.table == b.table;
}

namespace {

// per-element invariants used to prune the isomorphism search
struct ElemProfile {
  int idem;
  int cyclic_size;  // |{x, x^2, ...}|
  int row_fixed;    // |{y : xy == y}|
  bool operator<(const ElemProfile& o) const {
    return std::tie(idem, cyclic_size, row_fixed) <
           std::tie(o.idem, o.cyclic_size, o.row_fixed);
  }
  bool operator==(const ElemProfile& o) const {
    return idem == o.idem && cyclic_size == o.cyclic_size &&
           row_fixed == o.row_fixed;
  }
};

ElemProfile profile_of(const FiniteMonoid& m, ElementId x) {
  ElemProfile p{};
  p.idem = m.is_idempotent(x) ? 1 : 0;
  std::vector<char> seen(m.size, 0);
  ElementId cur = x;
  int count = 0;
  while (!seen[cur]) {
    seen[cur] = 1;
    ++count;
    cur = m.mul(cur, x);
  }
  p.cyclic_size = count;
  p.row_fixed = 0;
  for (ElementId y = 0; y < m.size; ++y)
    if (m.mul(x, y) == y) ++p.row_fixed;
  return p;
}

}  // namespace

bool monoids_isomorphic(const FiniteMonoid& a, const FiniteMonoid& b) {
  if (a.size != b.size) return false;
  if (a.has_identity() != b.has_identity()) return false;
  std::vector<ElemProfile> pa, pb;
  for (ElementId x = 0; x < a.size; ++x) pa.push_back(profile_of(a, x));
  for (ElementId x = 0; x < b.size; ++x) pb.push_back(profile_of(b, x));
  auto sa = pa, sb = pb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  for (size_t i = 0; i < sa.size(); ++i)
    if (!(sa[i] == sb[i])) return false;
  std::vector<ElementId> map(a.size, kNone);
  std::vector<char> used(a.size, 0);
  if (a.has_identity()) {
    map[a.identity] = b.identity;
    used[b.identity] = 1;
  }
  // search order is plain 0..n-1; identity is pinned above when present
  std::function<bool(ElementId)> rec = [&](ElementId next) -> bool {
    while (next < a.size && map[next] != kNone) ++next;
    if (next == a.size) {
      for (ElementId x = 0; x < a.size; ++x)
        for (ElementId y = 0; y < a.size; ++y)
          if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
      return true;
    }
    for (ElementId img = 0; img < a.size; ++img) {
      if (used[img] || !(pa[next] == pb[img])) continue;
      map[next] = img;
      used[img] = 1;
      bool ok = true;
      for (ElementId x = 0; x < a.size && ok; ++x) {
        if (map[x] == kNone) continue;
        ElementId p = a.mul(next, x);
        if (map[p] != kNone && b.mul(img, map[x]) != map[p]) ok = false;
        if (ok) {
          p = a.mul(x, next);
          if (map[p] != kNone && b.mul(map[x], img) != map[p]) ok = false;
        }
      }
      if (ok && rec(next + 1)) return true;
      used[img] = 0;
      map[next] = kNone;
    }
    return false;
  };
  return rec(0);
}

FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b) {
  require(a.has_identity() && b.has_identity(), "BadIdentity",
          "direct product of monoids needs identities");
  int n = a.size * b.size;
  std::vector<ElementId> flat(static_cast<size_t>(n) * n);
  auto enc = [&](ElementId x, ElementId y) { return x * b.size + y; };
  for (ElementId x1 = 0; x1 < a.size; ++x1)
    for (ElementId y1 = 0; y1 < b.size; ++y1)
      for (ElementId x2 = 0; x2 < a.size; ++x2)
        for (ElementId y2 = 0; y2 < b.size; ++y2)
          flat[static_cast<size_t>(enc(x1, y1)) * n + enc(x2, y2)] =
              enc(a.mul(x1, x2), b.mul(y1, y2));
  return table_from_flat(n, std::move(flat), enc(a.identity, b.identity), {},
                         false);
}

}  // namespace semicat
