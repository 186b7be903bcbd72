#pragma once

// Finite categories given by explicit composition tables, finite posets,
// poset-valued diagrams, nerves and the Grothendieck construction.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hocolim/simplicial_set.hpp"

namespace hocolim {

class CategoryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by nerve() for categories whose nerve has infinitely many
/// nondegenerate simplices; what() carries the witness.
class NotNerveFinite : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class FiniteCategory {
 public:
  struct Morphism {
    std::string name;  // empty for identities
    std::size_t source = 0;
    std::size_t target = 0;
    bool identity = false;

    bool operator==(const Morphism&) const = default;
  };

  class Builder {
   public:
    /// Adds an object together with its (implicit) identity morphism.
    std::size_t add_object(std::string name);
    /// Adds a nonidentity morphism; returns its morphism index.
    std::size_t add_morphism(std::string name, std::size_t source, std::size_t target);
    [[nodiscard]] std::size_t identity(std::size_t object) const;
    /// Records outer ∘ inner = result. Neither factor may be an identity.
    void set_composite(std::size_t outer, std::size_t inner, std::size_t result);
    [[nodiscard]] std::optional<std::size_t> find_object(std::string_view name) const;
    [[nodiscard]] std::optional<std::size_t> find_morphism(std::string_view name) const;
    [[nodiscard]] std::size_t object_count() const { return objects_.size(); }
    /// Unused identifiers derived from `base`.
    [[nodiscard]] std::string fresh_object_name(std::string_view base) const;
    [[nodiscard]] std::string fresh_morphism_name(std::string_view base) const;

    /// Validates the table (types, totality, associativity) and throws
    /// CategoryError on the first problem.
    FiniteCategory build() &&;

   private:
    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::vector<std::size_t> identities_;
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> composites_;
  };

  [[nodiscard]] std::size_t object_count() const { return objects_.size(); }
  [[nodiscard]] std::size_t morphism_count() const { return morphisms_.size(); }
  [[nodiscard]] const std::string& object(std::size_t k) const { return objects_.at(k); }
  [[nodiscard]] std::span<const std::string> objects() const { return objects_; }
  [[nodiscard]] const Morphism& morphism(std::size_t m) const { return morphisms_.at(m); }
  [[nodiscard]] std::span<const Morphism> morphisms() const { return morphisms_; }
  [[nodiscard]] std::size_t identity(std::size_t object) const { return identities_.at(object); }
  /// Nonidentity morphisms in declaration order.
  [[nodiscard]] std::vector<std::size_t> nonidentity_morphisms() const;
  /// outer ∘ inner; throws CategoryError if they are not composable.
  [[nodiscard]] std::size_t compose(std::size_t outer, std::size_t inner) const;
  [[nodiscard]] std::optional<std::size_t> find_object(std::string_view name) const;
  [[nodiscard]] std::optional<std::size_t> find_morphism(std::string_view name) const;
  /// Display name; identities render as id(X).
  [[nodiscard]] std::string morphism_label(std::size_t m) const;

  /// Empty when the nerve is finite; otherwise a description of a nonidentity
  /// endomorphism or a cycle of nonidentity morphisms.
  [[nodiscard]] std::optional<std::string> nerve_finiteness_witness() const;
  [[nodiscard]] bool nerve_finite() const { return !nerve_finiteness_witness(); }

  bool operator==(const FiniteCategory&) const = default;

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<std::size_t> identities_;
  // composition_[outer * M + inner], npos when not composable
  std::vector<std::size_t> composition_;
};

class PosetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Poset {
 public:
  Poset() = default;
  /// The order generated by `strict` (pairs a < b) under reflexive-transitive
  /// closure. Throws PosetError if the closure is not antisymmetric or names
  /// are invalid or repeated.
  Poset(std::vector<std::string> elements, std::span<const std::pair<std::size_t, std::size_t>> strict);

  static Poset chain(std::size_t n);  // c0 < c1 < ... < c{n-1}
  static Poset point() { return chain(1); }

  [[nodiscard]] std::size_t size() const { return elements_.size(); }
  [[nodiscard]] const std::string& element(std::size_t k) const { return elements_.at(k); }
  [[nodiscard]] std::span<const std::string> elements() const { return elements_; }
  [[nodiscard]] bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b]; }
  [[nodiscard]] bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  [[nodiscard]] std::optional<std::size_t> find(std::string_view name) const;
  /// Covering pairs a ⋖ b in lexicographic index order.
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  /// Indices ordered so that a < b implies a comes first.
  [[nodiscard]] std::vector<std::size_t> linear_extension() const;

  bool operator==(const Poset&) const = default;

 private:
  std::vector<std::string> elements_;
  std::vector<bool> leq_;
};

FiniteCategory poset_as_category(const Poset& P);

struct MonotonicityReport {
  bool monotone = true;
  /// (a, b) with a <= b in the source but map(a) not <= map(b).
  std::optional<std::pair<std::size_t, std::size_t>> witness;

  explicit operator bool() const { return monotone; }
};

MonotonicityReport monotone_map_check(std::span<const std::size_t> map, const Poset& P,
                                      const Poset& Q);

class DiagramError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A functor from a nerve-finite category to finite posets and monotone maps.
class DiagramOfPosets {
 public:
  /// `transitions[m]` maps fiber(source m) to fiber(target m) for every
  /// morphism m; identity entries may be left empty and are filled in.
  /// Throws DiagramError unless the data form a functor.
  DiagramOfPosets(FiniteCategory index, std::vector<Poset> fibers,
                  std::vector<std::vector<std::size_t>> transitions);

  [[nodiscard]] const FiniteCategory& index() const { return index_; }
  [[nodiscard]] const Poset& fiber(std::size_t object) const { return fibers_.at(object); }
  [[nodiscard]] std::span<const Poset> fibers() const { return fibers_; }
  [[nodiscard]] std::span<const std::size_t> transition(std::size_t morphism) const {
    return transitions_.at(morphism);
  }

  bool operator==(const DiagramOfPosets&) const = default;

 private:
  FiniteCategory index_;
  std::vector<Poset> fibers_;
  std::vector<std::vector<std::size_t>> transitions_;
};

/// Nerve: nondegenerate n-simplices are chains of n composable nonidentity
/// morphisms. Throws NotNerveFinite with a witness otherwise.
SimplicialSet nerve(const FiniteCategory& C);

/// Total category: objects (c, p), morphisms (c, p) -> (c', p') are φ: c -> c'
/// with transition(φ)(p) <= p'.
FiniteCategory grothendieck(const DiagramOfPosets& D);

/// The diagram with every fiber a point.
DiagramOfPosets constant_point_diagram(const FiniteCategory& index);

}  // namespace hocolim
