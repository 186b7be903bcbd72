#pragma once

// Finite simplicial sets presented by their nondegenerate generators. Every
// simplex is written uniquely as a degeneracy word applied to a generator
// (Eilenberg-Zilber), so a face of a generator is stored as a FacePointer.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hocolim/simplicial_operator.hpp"

namespace hocolim {

struct SimplexId {
  std::size_t dim = 0;
  std::size_t index = 0;

  auto operator<=>(const SimplexId&) const = default;
};

/// The simplex `word` applied to the nondegenerate generator `target`.
struct FacePointer {
  DegeneracyWord word;
  SimplexId target;

  FacePointer() = default;
  FacePointer(DegeneracyWord w, SimplexId t) : word(std::move(w)), target(t) {}
  explicit FacePointer(SimplexId t) : target(t) {}

  [[nodiscard]] std::size_t dimension() const { return target.dim + word.size(); }
  [[nodiscard]] bool degenerate() const { return !word.empty(); }

  auto operator<=>(const FacePointer&) const = default;
};

struct Generator {
  std::string name;
  /// d_0 ... d_n for a generator of dimension n >= 1; empty for vertices.
  std::vector<FacePointer> faces;
};

/// True for ASCII identifiers that are not of the reserved form s<digits>.
bool is_valid_name(std::string_view name);

class SimplicialSet {
 public:
  SimplicialSet() = default;

  /// Appends a generator of dimension `dim`. Faces must number dim + 1 (none
  /// for vertices), point at existing generators, and have dimension dim - 1.
  /// Throws std::invalid_argument otherwise, or when the name is taken.
  SimplexId add(std::size_t dim, std::string name, std::vector<FacePointer> faces = {});

  /// Like add(), but derives an unused name from `base`.
  SimplexId add_fresh(std::size_t dim, std::string_view base, std::vector<FacePointer> faces = {});

  [[nodiscard]] std::string fresh_name(std::string_view base) const;

  /// Number of dimension slots: 1 + top dimension, or 0 when empty.
  [[nodiscard]] std::size_t num_dimensions() const { return cells_.size(); }
  [[nodiscard]] bool empty() const { return cells_.empty(); }
  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] std::size_t vertex_count() const { return count(0); }
  [[nodiscard]] std::size_t count(std::size_t dim) const {
    return dim < cells_.size() ? cells_[dim].size() : 0;
  }

  [[nodiscard]] std::span<const Generator> generators(std::size_t dim) const;
  [[nodiscard]] const Generator& operator[](SimplexId id) const;
  [[nodiscard]] const std::string& name(SimplexId id) const { return (*this)[id].name; }
  [[nodiscard]] bool contains(SimplexId id) const {
    return id.dim < cells_.size() && id.index < cells_[id.dim].size();
  }
  [[nodiscard]] std::optional<SimplexId> find(std::string_view name) const;

  /// All generator ids ordered by (dimension, insertion order).
  [[nodiscard]] std::vector<SimplexId> ids() const;
  [[nodiscard]] std::vector<SimplexId> ids(std::size_t dim) const;

 private:
  std::vector<std::vector<Generator>> cells_;
  std::unordered_map<std::string, SimplexId> by_name_;
};

/// |K_n| for n = 0 .. top dimension.
std::vector<std::size_t> counts_by_dimension(const SimplicialSet& K);

/// Alternating count of nondegenerate simplices.
std::int64_t euler_char_combinatorial(const SimplicialSet& K);

/// Applies `op` to the simplex `fp` of K, returning the normalized pointer.
/// Throws std::out_of_range on a dangling generator and DimensionError when
/// the operator is not defined on fp's dimension.
FacePointer resolve(const SimplicialOperator& op, const FacePointer& fp, const SimplicialSet& K);

/// d_i of the simplex fp.
FacePointer face_of(std::size_t i, const FacePointer& fp, const SimplicialSet& K);

SimplexId initial_vertex(SimplexId sigma, const SimplicialSet& K);
SimplexId terminal_vertex(SimplexId sigma, const SimplicialSet& K);

/// Vertices v_0..v_n of a generator in order (with repetitions).
std::vector<SimplexId> vertices_of(SimplexId sigma, const SimplicialSet& K);

/// Every simplex (degenerate or not) of dimension `dim` whose faces are
/// exactly `faces`; for dim == 0 all vertices.
std::vector<FacePointer> simplices_with_faces(const SimplicialSet& K, std::size_t dim,
                                              std::span<const FacePointer> faces);

struct Violation {
  SimplexId generator;
  std::size_t i = 0;
  std::size_t j = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Checks the simplicial identities d_i d_j = d_{j-1} d_i (i < j) on every
/// generator of dimension >= 2, plus structural consistency of all pointers.
ValidationReport validate(const SimplicialSet& K);

/// "s1 s0 v" style rendering of a pointer.
std::string to_string(const FacePointer& fp, const SimplicialSet& K);

/// Equality of presentations keyed by generator name: same names, dimensions
/// and faces, regardless of insertion order.
bool same_presentation(const SimplicialSet& a, const SimplicialSet& b);

}  // namespace hocolim
