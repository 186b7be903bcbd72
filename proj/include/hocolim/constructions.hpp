#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hocolim/simplicial_map.hpp"
#include "hocolim/simplicial_set.hpp"

namespace hocolim {

/// Δⁿ: one generator per nonempty subset of {0..n}, named x0_1_2 etc.
SimplicialSet standard_simplex(std::size_t n);

/// ∂Δⁿ (n >= 1): Δⁿ without its top cell.
SimplicialSet boundary(std::size_t n);

/// k vertices v0..v{k-1} and k edges: e_i = v_i -> v_{i+1} for i < k - 1 and
/// the closing edge v_0 -> v_{k-1}. circle(1) is one vertex with a loop and
/// circle(3) is ∂Δ².
SimplicialSet circle(std::size_t k);

/// Generators of X followed by those of Y; clashing names in Y get a suffix.
SimplicialSet disjoint_union(const SimplicialSet& X, const SimplicialSet& Y);

/// Cartesian product. Its nondegenerate d-simplices are pairs (s_A x, s_B y)
/// with disjoint collapse sets A, B ⊂ {0..d-1}.
SimplicialSet product(const SimplicialSet& X, const SimplicialSet& Y);

/// X × Δ¹.
SimplicialSet cylinder(const SimplicialSet& X);

/// (A × Δ¹) ⊔ B ⊔ C with A × {0} glued to B along f and A × {1} glued to C
/// along g. Throws std::invalid_argument when f and g have different sources.
SimplicialSet double_mapping_cylinder(const SimplicialMap& f, const SimplicialMap& g);

/// Generators all of whose vertices lie in `vertices` (indices into K_0).
SimplicialSet full_subcomplex(const SimplicialSet& K, std::span<const std::size_t> vertices);

/// Dimension-preserving bijection of generators commuting with faces, if one
/// exists: result[d][k] is the index in Y of generator (d, k) of X.
std::optional<std::vector<std::vector<std::size_t>>> find_isomorphism(const SimplicialSet& X,
                                                                      const SimplicialSet& Y);

}  // namespace hocolim
