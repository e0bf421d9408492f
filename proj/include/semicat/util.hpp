#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

namespace semicat {

// Dense 0-based ids for monoid elements, category arrows and objects.
using ElementId = int32_t;
inline constexpr ElementId kNone = -1;

// Default size caps; SEMICAT_SIZE_CAP overrides all of them when set.
inline int size_cap(int fallback) {
  if (const char* env = std::getenv("SEMICAT_SIZE_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<int>(v);
  }
  return fallback;
}

inline constexpr int kGeneratorClosureCap = 5000;
inline constexpr int kAllCongruencesCap = 10;
inline constexpr int kNormalSubgroupCap = 128;
inline constexpr int kKernelObjectCap = 2000;

inline uint64_t hash_mix(uint64_t h, uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

template <typename T>
uint64_t hash_vec(const std::vector<T>& v, uint64_t seed = 1469598103934665603ULL) {
  uint64_t h = seed;
  for (const T& x : v) h = hash_mix(h, static_cast<uint64_t>(x));
  return h;
}

struct VecHash {
  size_t operator()(const std::vector<int32_t>& v) const {
    return static_cast<size_t>(hash_vec(v));
  }
};

struct PairHash {
  size_t operator()(const std::pair<int32_t, int32_t>& p) const {
    return static_cast<size_t>(
        hash_mix(hash_mix(0x243f6a8885a308d3ULL, static_cast<uint64_t>(p.first)),
                 static_cast<uint64_t>(p.second)));
  }
};

}  // namespace semicat
