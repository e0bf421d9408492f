#include "semicat/group.hpp"

#include <algorithm>
#include <unordered_set>

namespace semicat {

bool is_group_table(const FiniteMonoid& m, std::vector<ElementId>* inverse) {
  if (!m.has_identity()) return false;
  std::vector<ElementId> inv(m.size, kNone);
  for (ElementId x = 0; x < m.size; ++x) {
    for (ElementId y = 0; y < m.size; ++y) {
      if (m.mul(x, y) == m.identity && m.mul(y, x) == m.identity) {
        inv[x] = y;
        break;
      }
    }
    if (inv[x] == kNone) return false;
  }
  if (inverse) *inverse = std::move(inv);
  return true;
}

FiniteGroup group_from_monoid(FiniteMonoid m, std::vector<ElementId> embedding) {
  FiniteGroup g;
  require(is_group_table(m, &g.inverse), "NotAGroup",
          "table has a non-invertible element");
  g.monoid = std::move(m);
  if (embedding.empty()) {
    g.embedding.resize(g.monoid.size);
    for (ElementId i = 0; i < g.monoid.size; ++i) g.embedding[i] = i;
  } else {
    g.embedding = std::move(embedding);
  }
  return g;
}

FiniteGroup maximal_subgroup(const FiniteMonoid& S, const GreensData& g,
                             ElementId e) {
  require(e >= 0 && e < S.size, "IndexOutOfRange", "element out of range");
  require(S.is_idempotent(e), "NotIdempotent",
          "element " + std::to_string(e) + " is not idempotent");
  std::vector<ElementId> members;
  for (ElementId x = 0; x < S.size; ++x)
    if (g.h_class[x] == g.h_class[e]) members.push_back(x);
  FiniteMonoid table = induced_table(S, members, e);
  return group_from_monoid(std::move(table), std::move(members));
}

Subgroup subgroup_closure(const FiniteGroup& G, std::vector<ElementId> gens) {
  for (ElementId x : gens)
    require(x >= 0 && x < G.size(), "IndexOutOfRange",
            "generator out of range");
  std::vector<char> in(G.size(), 0);
  std::vector<ElementId> todo;
  auto push = [&](ElementId x) {
    if (!in[x]) {
      in[x] = 1;
      todo.push_back(x);
    }
  };
  push(G.identity());
  for (ElementId x : gens) push(x);
  // closure under product reaches inverses in a finite group
  for (size_t i = 0; i < todo.size(); ++i)
    for (size_t j = 0; j < todo.size(); ++j) {
      push(G.mul(todo[i], todo[j]));
      push(G.mul(todo[j], todo[i]));
    }
  Subgroup out;
  for (ElementId x = 0; x < G.size(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

FiniteGroup materialize_subgroup(const FiniteGroup& G, const Subgroup& elems) {
  FiniteMonoid table = induced_table(G.monoid, elems, G.identity());
  return group_from_monoid(std::move(table), elems);
}

FiniteGroup subgroup_generated(const FiniteGroup& G,
                               const std::vector<ElementId>& gens) {
  return materialize_subgroup(G, subgroup_closure(G, gens));
}

Subgroup normal_closure_set(const FiniteGroup& G, ElementId x) {
  require(x >= 0 && x < G.size(), "IndexOutOfRange", "element out of range");
  std::vector<ElementId> conjugates;
  for (ElementId g = 0; g < G.size(); ++g)
    conjugates.push_back(G.mul(G.mul(g, x), G.inv(g)));
  return subgroup_closure(G, std::move(conjugates));
}

FiniteGroup normal_closure(const FiniteGroup& G, ElementId x) {
  return materialize_subgroup(G, normal_closure_set(G, x));
}

bool is_subgroup(const FiniteGroup& G, const Subgroup& elems) {
  std::vector<char> in(G.size(), 0);
  for (ElementId x : elems) {
    if (x < 0 || x >= G.size()) return false;
    in[x] = 1;
  }
  if (!in[G.identity()]) return false;
  for (ElementId x : elems)
    for (ElementId y : elems)
      if (!in[G.mul(x, y)]) return false;
  return true;
}

bool is_normal(const FiniteGroup& G, const Subgroup& elems) {
  if (!is_subgroup(G, elems)) return false;
  std::vector<char> in(G.size(), 0);
  for (ElementId x : elems) in[x] = 1;
  for (ElementId g = 0; g < G.size(); ++g)
    for (ElementId x : elems)
      if (!in[G.mul(G.mul(g, x), G.inv(g))]) return false;
  return true;
}

std::vector<Subgroup> all_normal_subgroup_sets(const FiniteGroup& G, int cap) {
  int limit = cap > 0 ? cap : size_cap(kNormalSubgroupCap);
  require(G.size() <= limit, "SizeLimitExceeded",
          "normal subgroup enumeration capped at " + std::to_string(limit));
  std::vector<Subgroup> out;
  std::unordered_set<std::vector<int32_t>, VecHash> seen;
  auto add = [&](Subgroup s) {
    std::vector<int32_t> key(s.begin(), s.end());
    if (seen.insert(std::move(key)).second) out.push_back(std::move(s));
  };
  add({G.identity()});
  for (ElementId x = 0; x < G.size(); ++x) add(normal_closure_set(G, x));
  // any normal subgroup is the join of the normal closures of its elements,
  // so closing the seeds under join finds all of them
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      Subgroup both = out[i];
      both.insert(both.end(), out[j].begin(), out[j].end());
      add(subgroup_closure(G, std::move(both)));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FiniteGroup> all_normal_subgroups(const FiniteGroup& G, int cap) {
  std::vector<FiniteGroup> out;
  for (const Subgroup& s : all_normal_subgroup_sets(G, cap))
    out.push_back(materialize_subgroup(G, s));
  return out;
}

Subgroup h_radical_set(const FiniteGroup& G, const Pvar& h, int cap) {
  require(h.kind == PvarKind::group, "WrongPredicateKind",
          h.name + " is not a group pseudovariety");
  require(h.fitting, "NotFitting",
          h.name + " is not flagged Fitting; no radical is defined");
  std::vector<Subgroup> normals = all_normal_subgroup_sets(G, cap);
  Subgroup radical{G.identity()};
  std::vector<const Subgroup*> members;
  for (const Subgroup& n : normals) {
    if (h.test(materialize_subgroup(G, n).monoid)) {
      members.push_back(&n);
      Subgroup both = radical;
      both.insert(both.end(), n.begin(), n.end());
      radical = subgroup_closure(G, std::move(both));
    }
  }
  require(h.test(materialize_subgroup(G, radical).monoid), "NotFitting",
          h.name + " violated joins of normal members; predicate mislabeled");
  require(is_normal(G, radical), "NotFitting", "radical not normal (internal)");
  for (const Subgroup* n : members)
    require(std::includes(radical.begin(), radical.end(), n->begin(), n->end()),
            "NotFitting", "radical not maximal (internal)");
  return radical;
}

FiniteGroup h_radical(const FiniteGroup& G, const Pvar& h, int cap) {
  return materialize_subgroup(G, h_radical_set(G, h, cap));
}

Subgroup commutator_subgroup(const FiniteGroup& G, const Subgroup& a,
                             const Subgroup& b) {
  std::vector<ElementId> gens;
  for (ElementId x : a)
    for (ElementId y : b)
      gens.push_back(
          G.mul(G.mul(G.mul(x, y), G.inv(x)), G.inv(y)));
  return subgroup_closure(G, std::move(gens));
}

std::vector<Subgroup> derived_series(const FiniteGroup& G) {
  Subgroup whole;
  for (ElementId x = 0; x < G.size(); ++x) whole.push_back(x);
  std::vector<Subgroup> series{whole};
  while (true) {
    Subgroup next = commutator_subgroup(G, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& G) {
  Subgroup whole;
  for (ElementId x = 0; x < G.size(); ++x) whole.push_back(x);
  std::vector<Subgroup> series{whole};
  while (true) {
    Subgroup next = commutator_subgroup(G, series.back(), whole);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const FiniteGroup& G) {
  return derived_series(G).back().size() == 1;
}

bool is_nilpotent(const FiniteGroup& G) {
  return lower_central_series(G).back().size() == 1;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& G, int cap) {
  int limit = cap > 0 ? cap : size_cap(24);
  require(G.size() <= limit, "SizeLimitExceeded",
          "subgroup enumeration capped at " + std::to_string(limit));
  std::vector<Subgroup> out;
  std::unordered_set<std::vector<int32_t>, VecHash> seen;
  auto add = [&](Subgroup s) -> bool {
    std::vector<int32_t> key(s.begin(), s.end());
    if (seen.insert(std::move(key)).second) {
      out.push_back(std::move(s));
      return true;
    }
    return false;
  };
  add({G.identity()});
  for (size_t i = 0; i < out.size(); ++i) {
    Subgroup base = out[i];
    for (ElementId g = 0; g < G.size(); ++g) {
      if (std::binary_search(base.begin(), base.end(), g)) continue;
      Subgroup ext = base;
      ext.push_back(g);
      add(subgroup_closure(G, std::move(ext)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup sylow_p_intersection(const FiniteGroup& G, int p) {
  int order = G.size();
  int ppow = 1;
  while (order % p == 0) {
    order /= p;
    ppow *= p;
  }
  std::vector<Subgroup> sylows;
  for (const Subgroup& s : all_subgroups(G))
    if (static_cast<int>(s.size()) == ppow) sylows.push_back(s);
  require(!sylows.empty(), "SizeLimitExceeded", "no Sylow subgroup found");
  Subgroup inter = sylows[0];
  for (size_t i = 1; i < sylows.size(); ++i) {
    Subgroup next;
    std::set_intersection(inter.begin(), inter.end(), sylows[i].begin(),
                          sylows[i].end(), std::back_inserter(next));
    inter = std::move(next);
  }
  return inter;
}

}  // namespace semicat
