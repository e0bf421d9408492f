#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "semicat/category.hpp"
#include "semicat/monoid.hpp"

namespace semicat {

struct NamedMonoid {
  std::string name;
  FiniteMonoid monoid;
};

struct NamedCategory {
  std::string name;
  FiniteCategory category;
};

struct NamedCatMorphism {
  std::string name;
  CatMorphism morphism;
};

/// Seeded random monoid of size <= max_size: the closure of random
/// self-maps of a small set, sometimes followed by a random quotient.
/// Retries until the size bound is met.
FiniteMonoid random_monoid(std::mt19937_64& rng, int max_size);

/// Seeded random category: a composition-closed set of triples (i, m, j)
/// over a small base monoid, identities included.
FiniteCategory random_category(std::mt19937_64& rng, int max_objects,
                               int max_arrows);

/// Builtin monoids of size <= zoo_bound plus `random_count` random monoids
/// of size <= random_size.
std::vector<NamedMonoid> corpus_monoids(int zoo_bound, int random_count,
                                        int random_size, uint64_t seed);

/// Wider corpus for the structural oracles: every builtin monoid up to
/// `bound` plus random transformation monoids up to the same bound.
std::vector<NamedMonoid> corpus_monoids_structural(int bound, int random_count,
                                                   uint64_t seed);

/// Builtin categories within the limits, one-object views of small builtin
/// monoids, and random categories.
std::vector<NamedCategory> corpus_categories(int max_objects, int max_arrows,
                                             int random_count, uint64_t seed);

/// Projections of every congruence of every corpus category (categories
/// whose congruence enumeration overflows the cap are skipped).
std::vector<NamedCatMorphism> corpus_quotient_morphisms(
    const std::vector<NamedCategory>& cats, int per_category_cap = 200);

}  // namespace semicat
