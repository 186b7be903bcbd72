#pragma once

// Deterministic generators for property tests and oracle batches. Everything
// is driven by splitmix64 with `below(n) = next() % n`, so a seed reproduces
// the same instance on every platform.

#include <cstdint>
#include <memory>
#include <utility>

#include "hocolim/category.hpp"
#include "hocolim/simplicial_map.hpp"
#include "hocolim/simplicial_set.hpp"

namespace hocolim {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// True with probability num / den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::uint64_t state_;
};

struct SsetBounds {
  std::size_t max_dim = 3;
  std::size_t max_generators = 40;
};

struct DiagramBounds {
  std::size_t max_index = 5;
  std::size_t max_fiber = 4;
};

/// Elements p0..p{n-1}, 1 <= n <= max_size; each pair i < j is related
/// with probability 1/2 before transitive closure.
Poset random_poset(std::uint64_t seed, std::size_t max_size);
Poset random_poset(SplitMix64& rng, std::size_t max_size);

/// Random poset index (as a category) with random fibers and functorial
/// transitions; falls back to constant transitions where a random choice
/// cannot be made functorial.
DiagramOfPosets random_diagram(std::uint64_t seed, DiagramBounds bounds = {});

/// Built by attaching standard simplices along random boundary maps into
/// what exists so far (reusing existing or degenerate faces, or adding new
/// ones), so the result is valid by construction.
SimplicialSet random_sset(std::uint64_t seed, SsetBounds bounds = {});
SimplicialSet random_sset(SplitMix64& rng, SsetBounds bounds);

/// A random (generally non-injective) map out of `source` into a target that
/// is grown alongside it, plus up to `extra` additional generators.
SimplicialMap random_map_from(std::shared_ptr<const SimplicialSet> source, SplitMix64& rng,
                              std::size_t max_target_generators);

}  // namespace hocolim
