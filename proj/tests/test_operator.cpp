#include <catch_amalgamated.hpp>

#include "brute.hpp"
#include "hocolim/random.hpp"
#include "hocolim/simplicial_operator.hpp"

using namespace hocolim;
using test_support::act_on_vertices;

namespace {

std::string normal(std::string_view word) { return to_string(normalize_operator(parse_operator_word(word))); }

std::vector<OperatorSymbol> random_word(SplitMix64& rng) {
  std::vector<OperatorSymbol> word;
  const auto length = rng.below(7);
  for (std::uint64_t k = 0; k < length; ++k) {
    const auto index = static_cast<std::size_t>(rng.below(5));
    word.push_back(rng.chance(1, 2) ? OperatorSymbol::face(index) : OperatorSymbol::degeneracy(index));
  }
  return word;
}

}  // namespace

TEST_CASE("simplicial identities") {
  CHECK(normal("d1 s0") == "id");
  CHECK(normalize_operator(parse_operator_word("d1 s0")).is_identity());
  CHECK(normal("d0 s1") == "s0 d0");
  CHECK(normal("d3 s1") == "s1 d2");
  CHECK(normal("d0 s0") == "id");
  CHECK(normal("d2 d0") == "d0 d3");
  CHECK(normal("s0 s1") == "s2 s0");
  CHECK(normal("s2 s0") == "s2 s0");
}

TEST_CASE("parse and print operator words") {
  CHECK(to_string(parse_operator_word("d1 s0")) == "d1 s0");
  CHECK(to_string(parse_operator_word("d1∘s0")) == "d1 s0");
  CHECK(parse_operator_word("").empty());
  CHECK_THROWS_AS(parse_operator_word("x1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_operator_word("d"), std::invalid_argument);
}

TEST_CASE("degeneracy words are strictly decreasing") {
  CHECK_NOTHROW(DegeneracyWord{3, 1, 0});
  CHECK_THROWS_AS(DegeneracyWord({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(DegeneracyWord({0, 2}), std::invalid_argument);
  const auto w = DegeneracyWord::collapsing({0, 2});
  CHECK(std::vector<std::size_t>(w.indices().begin(), w.indices().end()) == std::vector<std::size_t>{2, 0});
  CHECK(DegeneracyWord{2, 0}.applies_to(1));
  CHECK_FALSE(DegeneracyWord{2, 0}.applies_to(0));
}

TEST_CASE("dimension checks") {
  CHECK_THROWS_AS(normalize_operator(parse_operator_word("d2"), 1), DimensionError);
  CHECK_THROWS_AS(normalize_operator(parse_operator_word("d0"), 0), DimensionError);
  CHECK_THROWS_AS(normalize_operator(parse_operator_word("s1"), 0), DimensionError);
  CHECK_NOTHROW(normalize_operator(parse_operator_word("d1 s0"), 0));
  CHECK(minimal_source_dimension(parse_operator_word("d1 s0")) == 0);
  CHECK(minimal_source_dimension(parse_operator_word("d1 s1")) == 1);
  CHECK(minimal_source_dimension(parse_operator_word("d0 d0")) == 2);
}

TEST_CASE("normal form agrees with the action on vertex lists") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto word = random_word(rng);
    const std::size_t n = static_cast<std::size_t>(rng.below(6));
    const auto expected = act_on_vertices(word, n);
    if (expected.empty()) {
      CHECK_THROWS_AS(normalize_operator(word, n), DimensionError);
      CHECK(minimal_source_dimension(word) > n);
      continue;
    }
    CHECK(minimal_source_dimension(word) <= n);
    const SimplicialOperator op = normalize_operator(word, n);
    INFO(to_string(word) << " on dimension " << n << " -> " << to_string(op));
    CHECK(act_on_vertices(op.symbols(), n) == expected);
    CHECK(op == normalize_operator(word));
    CHECK(normalize_operator(op.symbols()) == op);
    for (std::size_t k = 1; k < op.faces.size(); ++k) CHECK(op.faces[k - 1] < op.faces[k]);
  }
}

TEST_CASE("composition of degeneracy words") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<OperatorSymbol> outer_syms, inner_syms;
    for (auto k = rng.below(3); k > 0; --k) outer_syms.push_back(OperatorSymbol::degeneracy(rng.below(4)));
    for (auto k = rng.below(3); k > 0; --k) inner_syms.push_back(OperatorSymbol::degeneracy(rng.below(4)));
    const auto outer = normalize_operator(outer_syms).degeneracies;
    const auto inner = normalize_operator(inner_syms).degeneracies;
    auto both = symbols(outer);
    const auto rest = symbols(inner);
    both.insert(both.end(), rest.begin(), rest.end());
    CHECK(compose(outer, inner) == normalize_operator(both).degeneracies);
  }
}
