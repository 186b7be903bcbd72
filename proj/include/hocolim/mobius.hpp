#pragma once

// Möbius functions of finite simplicial sets and the Euler characteristic of
// a homotopy colimit as a μ-weighted sum over the objects of the index.

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hocolim/integer.hpp"
#include "hocolim/simplicial_set.hpp"

namespace hocolim {

/// μ(x) for every vertex x, indexed like K_0.
class MobiusTable {
 public:
  MobiusTable() = default;
  MobiusTable(std::vector<std::string> names, std::vector<std::int64_t> values);

  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] std::int64_t operator[](std::size_t vertex) const { return values_.at(vertex); }
  /// Throws std::out_of_range for an unknown vertex name.
  [[nodiscard]] std::int64_t at(std::string_view name) const;
  [[nodiscard]] const std::string& name(std::size_t vertex) const { return names_.at(vertex); }
  [[nodiscard]] std::span<const std::int64_t> values() const { return values_; }
  [[nodiscard]] std::int64_t total() const;

  bool operator==(const MobiusTable&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::int64_t> values_;
};

/// μ(x) = Σₙ (-1)ⁿ · #{nondegenerate n-simplices with initial vertex x}.
MobiusTable mobius_function(const SimplicialSet& K);

/// Computes μ by repeatedly removing a top-dimensional generator σ and adding
/// (-1)^dim σ at its initial vertex, down to the 0-skeleton where μ ≡ 1.
/// Generators are removed in name order among those of maximal dimension.
MobiusTable mobius_by_peeling(const SimplicialSet& K);

/// Same, choosing the next generator of maximal dimension pseudo-randomly
/// from `seed` (splitmix64).
MobiusTable mobius_by_peeling(const SimplicialSet& K, std::uint64_t seed);

class MissingWeight : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Values of an additive invariant (in ℤᵏ) attached to vertices by name.
class VertexWeights {
 public:
  explicit VertexWeights(std::size_t arity);

  /// Every vertex of K gets the same value.
  static VertexWeights constant(const SimplicialSet& K, std::vector<Integer> value);

  /// Throws std::invalid_argument if the vector length differs from arity.
  void set(std::string vertex, std::vector<Integer> value);

  [[nodiscard]] std::size_t arity() const { return arity_; }
  [[nodiscard]] const std::map<std::string, std::vector<Integer>>& values() const { return values_; }
  /// Throws MissingWeight when the vertex has no value.
  [[nodiscard]] const std::vector<Integer>& at(std::string_view vertex) const;

  bool operator==(const VertexWeights&) const = default;

 private:
  std::size_t arity_;
  std::map<std::string, std::vector<Integer>> values_;
};

/// Σₓ μ(x)·w(x). Throws MissingWeight if some vertex of K has no weight.
std::vector<Integer> hocolim_chi(const SimplicialSet& K, const VertexWeights& w);

/// A partition of K_0 into classes; blocks hold vertex indices.
struct ClassPartition {
  std::vector<std::vector<std::size_t>> blocks;
};

class PartitionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Classes of the equivalence relation generated by nondegenerate edges.
/// Blocks are sorted internally and ordered by their smallest vertex.
ClassPartition component_partition(const SimplicialSet& K);

/// Throws PartitionMismatch unless P covers K_0 exactly once with nonempty blocks.
void check_partition(const SimplicialSet& K, const ClassPartition& P);

/// μ[c] = Σ_{x ∈ c} μ(x), one entry per block of P.
std::vector<std::int64_t> class_mobius(const SimplicialSet& K, const ClassPartition& P);

}  // namespace hocolim
