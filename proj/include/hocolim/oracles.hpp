#pragma once

// Independent checks of the Möbius formula: build an explicit model of the
// homotopy colimit, count its simplices, and compare with the μ-weighted sum.

#include <cstdint>
#include <string>

#include "hocolim/category.hpp"
#include "hocolim/integer.hpp"
#include "hocolim/random.hpp"
#include "hocolim/simplicial_map.hpp"

namespace hocolim {

struct OracleReport {
  Integer formula_value;
  Integer construction_value;
  /// χ of the constructed model computed from Betti numbers.
  Integer homology_value;
  /// formula_value == construction_value.
  bool agree = false;
  /// Short description: seed and sizes.
  std::string witness;
  /// Serialized instance (document text) for replay.
  std::string instance;

  /// Agreement plus count/homology agreement on the constructed model.
  [[nodiscard]] bool consistent() const { return agree && homology_value == construction_value; }
};

/// Index category a <- ... : objects a, b, c with f: a -> b, g: a -> c.
FiniteCategory span_category();

/// χ(B) + χ(C) - χ(A), as the μ-weighted sum over the span nerve, against the
/// double mapping cylinder of f and g.
OracleReport oracle_pushout(const SimplicialMap& f, const SimplicialMap& g);

/// μ-weighted sum of fiber Euler characteristics over nerve(index) against the
/// nerve of the Grothendieck construction. Relies on the (external) fact that
/// this nerve models the homotopy colimit of the fiber nerves.
OracleReport oracle_grothendieck(const DiagramOfPosets& D);

/// μ[B]·χ(F) for connected B against χ(F × B). Throws std::invalid_argument
/// when B is empty or not edge-connected.
OracleReport oracle_trivial_bundle(const SimplicialSet& F, const SimplicialSet& B);

/// Seeded random instances. Pushout sources have at most 15 generators and
/// targets at most 30.
OracleReport random_pushout_instance(std::uint64_t seed);
OracleReport random_grothendieck_instance(std::uint64_t seed, DiagramBounds bounds = {});
/// F and B random with B replaced by its first component.
OracleReport random_bundle_instance(std::uint64_t seed);

}  // namespace hocolim
