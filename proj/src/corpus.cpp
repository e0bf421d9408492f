#include "semicat/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "semicat/congruence.hpp"
#include "semicat/zoo.hpp"

namespace semicat {

namespace {

std::vector<int> random_map(std::mt19937_64& rng, int degree) {
  std::vector<int> f(degree);
  for (int i = 0; i < degree; ++i) f[i] = static_cast<int>(rng() % degree);
  return f;
}

}  // namespace

FiniteMonoid random_monoid(std::mt19937_64& rng, int max_size) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    int degree = 2 + static_cast<int>(rng() % 3);
    int ngens = 1 + static_cast<int>(rng() % 3);
    std::vector<std::vector<int>> maps;
    for (int i = 0; i < ngens; ++i) maps.push_back(random_map(rng, degree));
    bool take_quotient = (rng() % 3) == 0;
    FiniteMonoid m;
    try {
      m = monoid_from_generators(maps, take_quotient ? 4 * max_size : max_size);
    } catch (const Error&) {
      continue;  // closure overflow, retry
    }
    if (take_quotient && m.size > 1) {
      ElementId x = static_cast<ElementId>(rng() % m.size);
      ElementId y = static_cast<ElementId>(rng() % m.size);
      if (x != y) m = quotient(m, principal_congruence(m, x, y)).monoid;
    }
    if (m.size > max_size) continue;
    // bias away from the near-trivial closures; they dominate otherwise
    if (m.size <= 2 && rng() % 4 != 0) continue;
    return m;
  }
  fail("SizeLimitExceeded", "random monoid generation kept overflowing");
}

FiniteCategory random_category(std::mt19937_64& rng, int max_objects,
                               int max_arrows) {
  static const char* kBases[] = {"trivial", "u1", "c2", "c3", "sl3"};
  for (int attempt = 0; attempt < 10000; ++attempt) {
    FiniteMonoid base = zoo_monoid(kBases[rng() % 5]);
    int k = 1 + static_cast<int>(rng() % max_objects);
    // triples (i, m, j); identities forced, the rest kept with ~30% chance
    std::set<std::tuple<int, ElementId, int>> triples;
    for (int i = 0; i < k; ++i) triples.insert({i, base.identity, i});
    for (int i = 0; i < k; ++i)
      for (ElementId m = 0; m < base.size; ++m)
        for (int j = 0; j < k; ++j)
          if (rng() % 100 < 40) triples.insert({i, m, j});
    // closure under composition
    bool grew = true;
    while (grew && static_cast<int>(triples.size()) <= max_arrows) {
      grew = false;
      std::vector<std::tuple<int, ElementId, int>> snapshot(triples.begin(),
                                                            triples.end());
      for (const auto& [i, m, j] : snapshot)
        for (const auto& [i2, m2, j2] : snapshot) {
          if (j != i2) continue;
          if (triples.insert({i, base.mul(m, m2), j2}).second) grew = true;
        }
    }
    if (static_cast<int>(triples.size()) > max_arrows) continue;
    // identities-only categories carry no content; resample most of them
    if (static_cast<int>(triples.size()) <= k + 1 && rng() % 4 != 0) continue;

    std::vector<std::tuple<int, ElementId, int>> arrlist(triples.begin(),
                                                         triples.end());
    std::map<std::tuple<int, ElementId, int>, ElementId> pos;
    for (size_t i = 0; i < arrlist.size(); ++i)
      pos[arrlist[i]] = static_cast<ElementId>(i);
    std::vector<std::pair<ElementId, ElementId>> endpoints;
    for (const auto& [i, m, j] : arrlist) {
      (void)m;
      endpoints.emplace_back(i, j);
    }
    std::vector<ElementId> identities(k);
    for (int i = 0; i < k; ++i)
      identities[i] = pos.at({i, base.identity, i});
    std::map<std::pair<ElementId, ElementId>, ElementId> comp;
    for (size_t x = 0; x < arrlist.size(); ++x)
      for (size_t y = 0; y < arrlist.size(); ++y) {
        auto [i, m, j] = arrlist[x];
        auto [i2, m2, j2] = arrlist[y];
        if (j != i2) continue;
        comp[{static_cast<ElementId>(x), static_cast<ElementId>(y)}] =
            pos.at({i, base.mul(m, m2), j2});
      }
    return category_from_parts(k, endpoints, identities, comp);
  }
  fail("SizeLimitExceeded", "random category generation kept overflowing");
}

std::vector<NamedMonoid> corpus_monoids(int zoo_bound, int random_count,
                                        int random_size, uint64_t seed) {
  std::vector<NamedMonoid> out;
  for (auto& [name, m] : zoo_monoids_upto(zoo_bound))
    out.push_back({name, std::move(m)});
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_count; ++i)
    out.push_back({"rnd" + std::to_string(i), random_monoid(rng, random_size)});
  return out;
}

std::vector<NamedMonoid> corpus_monoids_structural(int bound, int random_count,
                                                   uint64_t seed) {
  std::vector<NamedMonoid> out;
  for (auto& [name, m] : zoo_monoids_upto(bound))
    out.push_back({name, std::move(m)});
  std::mt19937_64 rng(seed ^ 0x5bd1e995u);
  for (int i = 0; i < random_count; ++i) {
    // closures over 3..5 points, bounded by `bound`
    FiniteMonoid m;
    for (int attempt = 0;; ++attempt) {
      require(attempt < 10000, "SizeLimitExceeded",
              "structural corpus generation stalled");
      int degree = 3 + static_cast<int>(rng() % 3);
      int ngens = 1 + static_cast<int>(rng() % 2);
      std::vector<std::vector<int>> maps;
      for (int k = 0; k < ngens; ++k) maps.push_back(random_map(rng, degree));
      try {
        m = monoid_from_generators(maps, bound);
      } catch (const Error&) {
        continue;
      }
      break;
    }
    out.push_back({"str" + std::to_string(i), std::move(m)});
  }
  return out;
}

std::vector<NamedCategory> corpus_categories(int max_objects, int max_arrows,
                                             int random_count, uint64_t seed) {
  std::vector<NamedCategory> out;
  for (auto& [name, c] : zoo_categories_upto(max_objects, max_arrows))
    out.push_back({name, std::move(c)});
  // one-object views of the small builtin monoids
  static const char* kOneObject[] = {"u1",    "sl3",    "n2_1", "lz2_1",
                                     "rz2_1", "rb22_1", "c2",   "c3",
                                     "c4",    "c2xc2",  "t2",   "c3_0",
                                     "c6",    "s3",     "d4"};
  for (const char* name : kOneObject) {
    FiniteMonoid m = zoo_monoid(name);
    if (m.size <= max_arrows)
      out.push_back({std::string(name) + "_cat", cat_from_monoid(m)});
  }
  std::mt19937_64 rng(seed ^ 0x9e3779b9u);
  for (int i = 0; i < random_count; ++i)
    out.push_back({"rndcat" + std::to_string(i),
                   random_category(rng, max_objects, max_arrows)});
  return out;
}

std::vector<NamedCatMorphism> corpus_quotient_morphisms(
    const std::vector<NamedCategory>& cats, int per_category_cap) {
  std::vector<NamedCatMorphism> out;
  for (const NamedCategory& nc : cats) {
    std::vector<CatCongruence> congs;
    try {
      congs = all_cat_congruences(nc.category, per_category_cap);
    } catch (const Error&) {
      continue;  // enumeration overflow: skip this category
    }
    for (size_t i = 0; i < congs.size(); ++i) {
      CatQuotient q = cat_quotient(nc.category, congs[i]);
      out.push_back(
          {nc.name + ":q" + std::to_string(i), std::move(q.projection)});
    }
  }
  return out;
}

}  // namespace semicat
