#pragma once

// Composites of face maps d_i and degeneracy maps s_j, and their normal form
// s_{j1} ... s_{jp} d_{i1} ... d_{iq} with j1 > ... > jp and i1 < ... < iq.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hocolim {

/// Raised when an operator word is applied below dimension 0 or uses an
/// index that does not exist in the dimension it is applied to.
class DimensionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// s_{j1} o s_{j2} o ... o s_{jp} with j1 > j2 > ... > jp >= 0. The rightmost
/// degeneracy is applied first. The empty word is the identity.
class DegeneracyWord {
 public:
  DegeneracyWord() = default;
  /// Throws std::invalid_argument unless `indices` is strictly decreasing.
  explicit DegeneracyWord(std::vector<std::size_t> indices);
  DegeneracyWord(std::initializer_list<std::size_t> indices)
      : DegeneracyWord(std::vector<std::size_t>(indices)) {}

  /// The word whose collapse positions are exactly `positions` (any order).
  static DegeneracyWord collapsing(std::vector<std::size_t> positions);

  [[nodiscard]] std::span<const std::size_t> indices() const { return indices_; }
  [[nodiscard]] std::size_t size() const { return indices_.size(); }
  [[nodiscard]] bool empty() const { return indices_.empty(); }
  [[nodiscard]] bool contains(std::size_t j) const;

  /// True if the word can be applied to a simplex of dimension `dim`.
  [[nodiscard]] bool applies_to(std::size_t dim) const;

  auto operator<=>(const DegeneracyWord&) const = default;

 private:
  std::vector<std::size_t> indices_;
};

/// One generator symbol: d_i or s_j.
struct OperatorSymbol {
  enum class Kind { face, degeneracy };

  Kind kind = Kind::face;
  std::size_t index = 0;

  static OperatorSymbol face(std::size_t i) { return {Kind::face, i}; }
  static OperatorSymbol degeneracy(std::size_t j) { return {Kind::degeneracy, j}; }

  [[nodiscard]] bool is_face() const { return kind == Kind::face; }

  auto operator<=>(const OperatorSymbol&) const = default;
};

/// Normal form of a simplicial operator: `faces` (strictly increasing) are
/// applied first, then `degeneracies`.
struct SimplicialOperator {
  DegeneracyWord degeneracies;
  std::vector<std::size_t> faces;

  static SimplicialOperator identity() { return {}; }
  static SimplicialOperator face(std::size_t i) { return {{}, {i}}; }

  [[nodiscard]] bool is_identity() const { return degeneracies.empty() && faces.empty(); }
  [[nodiscard]] std::ptrdiff_t dimension_shift() const {
    return static_cast<std::ptrdiff_t>(degeneracies.size()) -
           static_cast<std::ptrdiff_t>(faces.size());
  }

  /// Symbols written outermost first, e.g. {s1, s0, d0, d2}.
  [[nodiscard]] std::vector<OperatorSymbol> symbols() const;

  auto operator<=>(const SimplicialOperator&) const = default;
};

/// Rewrites a word (outermost symbol first) to its normal form using the
/// simplicial identities. Words are valid for a large enough source
/// dimension, so this overload never fails.
SimplicialOperator normalize_operator(std::span<const OperatorSymbol> word);

/// As above, but first checks that the word is defined on simplices of
/// dimension `source_dim`; throws DimensionError otherwise.
SimplicialOperator normalize_operator(std::span<const OperatorSymbol> word,
                                      std::size_t source_dim);

/// Smallest source dimension on which `word` is defined.
std::size_t minimal_source_dimension(std::span<const OperatorSymbol> word);

/// s_outer o s_inner, renormalized.
DegeneracyWord compose(const DegeneracyWord& outer, const DegeneracyWord& inner);

std::vector<OperatorSymbol> symbols(const DegeneracyWord& word);

std::string to_string(const DegeneracyWord& word);
std::string to_string(const SimplicialOperator& op);
std::string to_string(std::span<const OperatorSymbol> word);

/// Parses "d1 s0", "d1∘s0" style text; symbols separated by spaces or 'o'.
/// Throws std::invalid_argument on malformed input.
std::vector<OperatorSymbol> parse_operator_word(std::string_view text);

}  // namespace hocolim
