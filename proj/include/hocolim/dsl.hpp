#pragma once

// Text format for simplicial sets, maps, categories, posets, diagrams and
// weights (.sset files).
//
//   document := decl*
//   sset     := "sset" NAME "{" (NAME ":" INT ("faces" "=" fp ("," fp)*)?)* "}"
//   fp       := ("s" INT)* NAME                  # outermost degeneracy first
//   map      := "map" NAME ":" NAME "->" NAME "{" (NAME "|->" fp)* "}"
//   poset    := "poset" NAME "{" "elements" NAME+ ";" ("rel" NAME "<" NAME ";")* "}"
//   category := "category" NAME "{" "objects" NAME+ ";"
//               ("mor" NAME ":" NAME "->" NAME ";")*
//               ("comp" NAME "*" NAME "=" NAME ";")* "}"   # g * f = g∘f
//   diagram  := "diagram" NAME "{" "index" NAME ";" ("fiber" NAME "=" NAME ";")*
//               ("transition" NAME "=" "{" (NAME "|->" NAME)* "}" ";")* "}"
//   weights  := "weights" NAME "{" "over" NAME ";" "arity" INT ";"
//               (NAME "=" "[" INT ("," INT)* "]" ";")* "}"
//
// `#` starts a line comment. Declarations may only refer to earlier ones.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hocolim/category.hpp"
#include "hocolim/mobius.hpp"
#include "hocolim/simplicial_map.hpp"
#include "hocolim/simplicial_set.hpp"

namespace hocolim::dsl {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string message,
             std::vector<std::string> expected = {});

  std::size_t line;    // 1-based
  std::size_t column;  // 1-based, in bytes
  std::string message;
  std::vector<std::string> expected;
};

struct Diagnostic {
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;
};

/// Well-formed text that does not describe valid objects (unknown names,
/// wrong face counts, non-functorial transitions, ...).
class SemanticError : public std::runtime_error {
 public:
  explicit SemanticError(std::vector<Diagnostic> diagnostics);

  std::vector<Diagnostic> diagnostics;
};

struct MapDecl {
  std::string source;
  std::string target;
  SimplicialMap map;
};

struct DiagramDecl {
  std::string index;
  std::vector<std::string> fibers;  // poset name per index object
  DiagramOfPosets diagram;
};

struct WeightsDecl {
  std::string over;
  VertexWeights weights;
};

using Entity = std::variant<std::shared_ptr<const SimplicialSet>, MapDecl, FiniteCategory, Poset,
                            DiagramDecl, WeightsDecl>;

struct Declaration {
  std::string name;
  Entity entity;
};

class Document {
 public:
  /// The add_* functions throw std::invalid_argument on a taken or invalid
  /// name, or when a referenced declaration is missing.
  std::shared_ptr<const SimplicialSet> add_sset(std::string name, SimplicialSet K);
  void add_map(std::string name, std::string source, std::string target, SimplicialMap f);
  void add_category(std::string name, FiniteCategory C);
  void add_poset(std::string name, Poset P);
  void add_diagram(std::string name, std::string index, std::vector<std::string> fibers,
                   DiagramOfPosets D);
  void add_weights(std::string name, std::string over, VertexWeights w);

  [[nodiscard]] const std::vector<Declaration>& declarations() const { return decls_; }
  [[nodiscard]] const Declaration* find(std::string_view name) const;

  [[nodiscard]] std::shared_ptr<const SimplicialSet> sset(std::string_view name) const;
  [[nodiscard]] const MapDecl* map(std::string_view name) const;
  [[nodiscard]] const FiniteCategory* category(std::string_view name) const;
  [[nodiscard]] const Poset* poset(std::string_view name) const;
  [[nodiscard]] const DiagramDecl* diagram(std::string_view name) const;
  [[nodiscard]] const WeightsDecl* weights(std::string_view name) const;

 private:
  void check_new_name(const std::string& name) const;

  std::vector<Declaration> decls_;
};

/// Throws ParseError for malformed text and SemanticError for text that
/// parses but does not describe valid objects. Simplicial identities and map
/// face-compatibility are not checked here; see validate().
Document parse(std::string_view text);

/// Canonical text: LF line endings, two-space indentation, generators sorted
/// by dimension then name. Throws std::invalid_argument for objects the
/// format cannot express (e.g. a composite equal to an identity).
std::string serialize(const Document& doc);

/// One declaration, as it would appear inside serialize().
std::string serialize_sset(std::string_view name, const SimplicialSet& K);
std::string serialize_category(std::string_view name, const FiniteCategory& C);
std::string serialize_poset(std::string_view name, const Poset& P);

/// Structural equality: same declarations in the same order, each equal up
/// to generator order.
bool equivalent(const Document& a, const Document& b);

}  // namespace hocolim::dsl
