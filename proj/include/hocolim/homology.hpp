#pragma once

// Rational homology of the normalized chain complex of a finite simplicial
// set. Ranks are exact (fraction-free elimination over big integers).

#include <cstdint>
#include <vector>

#include "hocolim/integer.hpp"
#include "hocolim/simplicial_set.hpp"

namespace hocolim {

/// ∂ₙ : Cₙ → Cₙ₋₁, rows indexed by K_{n-1}, columns by K_n.
struct BoundaryMatrix {
  std::size_t dimension = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> entries;  // row-major

  [[nodiscard]] std::int64_t at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  std::int64_t& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
};

/// ∂₁ .. ∂_d. Faces that resolve to degenerate simplices contribute 0.
/// Throws std::logic_error if some ∂ₙ₋₁∂ₙ is nonzero (K was not valid).
std::vector<BoundaryMatrix> boundary_matrices(const SimplicialSet& K);

/// True if lower ∘ upper is the zero matrix.
bool composes_to_zero(const BoundaryMatrix& lower, const BoundaryMatrix& upper);

/// Rank by Bareiss fraction-free elimination.
std::size_t integer_rank(std::vector<std::vector<Integer>> rows);
std::size_t rank(const BoundaryMatrix& m);

struct BettiProfile {
  std::vector<std::size_t> betti;

  [[nodiscard]] std::int64_t euler() const;
  bool operator==(const BettiProfile&) const = default;
};

BettiProfile betti_numbers(const SimplicialSet& K);

std::int64_t euler_via_homology(const SimplicialSet& K);

}  // namespace hocolim
