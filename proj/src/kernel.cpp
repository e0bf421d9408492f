#include "semicat/kernel.hpp"

#include <algorithm>

namespace semicat {

int64_t KernelCategory::pack_triple(ElementId nl, ElementId m,
                                    ElementId nr) const {
  // fixed 21-bit fields; desk-scale sizes never overflow them
  return (static_cast<int64_t>(nl) << 42) | (static_cast<int64_t>(m) << 21) |
         static_cast<int64_t>(nr);
}

int KernelCategory::object_of_pair(ElementId nl, ElementId nr) const {
  auto it = object_index.find((static_cast<int64_t>(nl) << 21) | nr);
  require(it != object_index.end(), "IndexOutOfRange",
          "no such kernel object");
  return it->second;
}

int KernelCategory::class_of_triple(ElementId nl, ElementId m,
                                    ElementId nr) const {
  auto it = triple_index.find(pack_triple(nl, m, nr));
  require(it != triple_index.end(), "IndexOutOfRange",
          "no such kernel triple");
  return it->second;
}

KernelCategory kernel_category(const CatMorphism& phi, int object_cap) {
  validate_cat_morphism(phi, /*require_quotient=*/true);
  int cap = object_cap > 0 ? object_cap : size_cap(kKernelObjectCap);
  const FiniteCategory& C = phi.source;
  const FiniteCategory& D = phi.target;
  int narrC = C.num_arrows(), narrD = D.num_arrows();

  KernelCategory K;
  for (ElementId nl = 0; nl < narrD; ++nl)
    for (ElementId nr = 0; nr < narrD; ++nr) {
      if (D.dst[nl] != D.src[nr]) continue;
      require(static_cast<int>(K.objects.size()) < cap, "SizeLimitExceeded",
              "kernel category object cap " + std::to_string(cap));
      K.object_index[(static_cast<int64_t>(nl) << 21) | nr] =
          static_cast<int>(K.objects.size());
      K.objects.emplace_back(nl, nr);
    }

  std::vector<std::vector<ElementId>> preimage(narrD);
  for (ElementId m = 0; m < narrC; ++m) preimage[phi.arrow_map[m]].push_back(m);

  // enumerate W-triples in lexicographic (n_L, m, n_R) order
  struct WArrow {
    ElementId nl, m, nr;
    int src_obj, dst_obj;
    int cls = -1;
  };
  std::vector<WArrow> warrows;
  for (ElementId nl = 0; nl < narrD; ++nl)
    for (ElementId m = 0; m < narrC; ++m) {
      if (D.dst[nl] != C.src[m]) continue;
      for (ElementId nr = 0; nr < narrD; ++nr) {
        if (C.dst[m] != D.src[nr]) continue;
        WArrow w;
        w.nl = nl;
        w.m = m;
        w.nr = nr;
        w.src_obj = K.object_of_pair(nl, D.compose(phi.arrow_map[m], nr));
        w.dst_obj = K.object_of_pair(D.compose(nl, phi.arrow_map[m]), nr);
        warrows.push_back(w);
        require(warrows.size() <= 2000000, "SizeLimitExceeded",
                "kernel category arrow blowup");
      }
    }

  // identification: coterminal triples with the same lifted products
  std::unordered_map<std::vector<int32_t>, int, VecHash> classes;
  for (WArrow& w : warrows) {
    std::vector<int32_t> key{w.nl, w.nr, w.src_obj, w.dst_obj};
    for (ElementId ml : preimage[w.nl])
      for (ElementId mr : preimage[w.nr])
        key.push_back(C.compose(C.compose(ml, w.m), mr));
    auto it = classes.find(key);
    if (it == classes.end()) {
      w.cls = static_cast<int>(classes.size());
      classes.emplace(std::move(key), w.cls);
      K.arrow_reps.push_back({w.nl, w.m, w.nr});
    } else {
      w.cls = it->second;
    }
  }
  int nk = static_cast<int>(classes.size());
  for (const WArrow& w : warrows)
    K.triple_index[K.pack_triple(w.nl, w.m, w.nr)] = w.cls;

  std::vector<std::vector<int>> by_src_obj(K.objects.size());
  for (size_t wi = 0; wi < warrows.size(); ++wi)
    by_src_obj[warrows[wi].src_obj].push_back(static_cast<int>(wi));

  // the identification must be a congruence: the class of a composite may
  // depend only on the classes of the factors.  Triple composability is
  // exactly object adjacency (dst pair of u equals src pair of v).
  {
    std::unordered_map<int64_t, int> comp_seen;
    for (const WArrow& u : warrows)
      for (int vi : by_src_obj[u.dst_obj]) {
        const WArrow& v = warrows[vi];
        ElementId mm = C.compose(u.m, v.m);
        int cls = K.triple_index.at(K.pack_triple(u.nl, mm, v.nr));
        int64_t pair_key = static_cast<int64_t>(u.cls) * nk + v.cls;
        auto it = comp_seen.find(pair_key);
        if (it == comp_seen.end())
          comp_seen.emplace(pair_key, cls);
        else
          require(it->second == cls, "IncompatiblePartition",
                  "kernel identification is not a congruence (internal)");
      }
  }

  // materialize K as a finite category
  FiniteCategory& Kc = K.cat;
  Kc.num_objects = static_cast<int>(K.objects.size());
  Kc.src.resize(nk);
  Kc.dst.resize(nk);
  for (const WArrow& w : warrows) {
    Kc.src[w.cls] = w.src_obj;
    Kc.dst[w.cls] = w.dst_obj;
  }
  Kc.identity_arrow.resize(Kc.num_objects);
  for (int ob = 0; ob < Kc.num_objects; ++ob) {
    auto [nl, nr] = K.objects[ob];
    ElementId idc = C.identity_arrow[D.dst[nl]];
    Kc.identity_arrow[ob] = K.triple_index.at(K.pack_triple(nl, idc, nr));
  }
  Kc.compose_table.assign(static_cast<size_t>(nk) * nk, kNone);
  for (const WArrow& u : warrows)
    for (int vi : by_src_obj[u.dst_obj]) {
      const WArrow& v = warrows[vi];
      Kc.compose_table[static_cast<size_t>(u.cls) * nk + v.cls] =
          K.triple_index.at(K.pack_triple(u.nl, C.compose(u.m, v.m), v.nr));
    }
  // full validation of the category axioms
  {
    std::vector<std::pair<ElementId, ElementId>> arrows;
    for (int a = 0; a < nk; ++a) arrows.emplace_back(Kc.src[a], Kc.dst[a]);
    std::map<std::pair<ElementId, ElementId>, ElementId> comp;
    for (int a = 0; a < nk; ++a)
      for (int b = 0; b < nk; ++b)
        if (Kc.compose_table[static_cast<size_t>(a) * nk + b] != kNone)
          comp[{a, b}] = Kc.compose_table[static_cast<size_t>(a) * nk + b];
    K.cat = category_from_parts(Kc.num_objects, arrows, Kc.identity_arrow,
                                comp);
  }
  return K;
}

KernelCategory kernel_category(const MonoidMorphism& phi, int object_cap) {
  validate_morphism(phi, /*require_surjective=*/true);
  CatMorphism as_cat;
  as_cat.source = cat_from_monoid(phi.source);
  as_cat.target = cat_from_monoid(phi.target);
  as_cat.arrow_map = phi.map;
  return kernel_category(as_cat, object_cap);
}

}  // namespace semicat
