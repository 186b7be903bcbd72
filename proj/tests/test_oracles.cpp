#include <catch_amalgamated.hpp>

#include "corpus.hpp"
#include "hocolim/constructions.hpp"
#include "hocolim/dsl.hpp"
#include "hocolim/oracles.hpp"

using namespace hocolim;

namespace {

std::shared_ptr<const SimplicialSet> share(SimplicialSet K) {
  return std::make_shared<const SimplicialSet>(std::move(K));
}

void check_report(const OracleReport& r, std::int64_t expected) {
  INFO(r.witness << "\n" << r.instance);
  CHECK(r.agree);
  CHECK(r.consistent());
  CHECK(r.formula_value == expected);
  CHECK(r.construction_value == expected);
}

}  // namespace

TEST_CASE("pushout oracle examples") {
  const auto& doc = test_support::corpus_document();
  check_report(oracle_pushout(doc.map("f0")->map, doc.map("g0")->map), 0);
  const auto pt = share(standard_simplex(0));
  check_report(oracle_pushout(identity_map(pt), identity_map(pt)), 1);
  const OracleReport r = random_pushout_instance(42);
  CHECK(r.agree);
  CHECK(r.consistent());
  CHECK(r.witness.find("seed 42") != std::string::npos);
}

TEST_CASE("instances replay from their serialized text") {
  const OracleReport r = random_pushout_instance(5);
  const dsl::Document doc = dsl::parse(r.instance);
  const OracleReport again = oracle_pushout(doc.map("f")->map, doc.map("g")->map);
  CHECK(again.formula_value == r.formula_value);
  CHECK(again.construction_value == r.construction_value);

  const OracleReport g = random_grothendieck_instance(5);
  const dsl::Document gdoc = dsl::parse(g.instance);
  CHECK(oracle_grothendieck(gdoc.diagram("D")->diagram).construction_value == g.construction_value);
}

TEST_CASE("Grothendieck oracle examples") {
  const auto& doc = test_support::corpus_document();
  check_report(oracle_grothendieck(doc.diagram("collapse")->diagram), 1);
  check_report(oracle_grothendieck(doc.diagram("Ipoints")->diagram), 1);
  for (const dsl::Declaration& d : doc.declarations()) {
    if (const auto* C = std::get_if<FiniteCategory>(&d.entity)) {
      INFO(d.name);
      check_report(oracle_grothendieck(constant_point_diagram(*C)), euler_char_combinatorial(nerve(*C)));
    }
  }
}

TEST_CASE("trivial bundle oracle examples") {
  check_report(oracle_trivial_bundle(boundary(2), circle(1)), 0);
  check_report(oracle_trivial_bundle(boundary(3), standard_simplex(2)), 2);
  for (const auto& [name, B] : test_support::corpus_ssets()) {
    if (B.count(0) == 0 || component_partition(B).blocks.size() != 1) continue;
    INFO(name);
    check_report(oracle_trivial_bundle(standard_simplex(0), B), euler_char_combinatorial(B));
  }
  CHECK_THROWS_AS(oracle_trivial_bundle(circle(1), disjoint_union(circle(1), circle(1))), std::invalid_argument);
  CHECK_THROWS_AS(oracle_trivial_bundle(circle(1), SimplicialSet{}), std::invalid_argument);
}

TEST_CASE("seeded oracle batches") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    for (const OracleReport& r :
         {random_pushout_instance(seed), random_grothendieck_instance(seed), random_bundle_instance(seed)}) {
      INFO(r.witness);
      CHECK(r.consistent());
    }
  }
}

TEST_CASE("reports are deterministic") {
  for (std::uint64_t seed : {3u, 17u}) {
    const OracleReport a = random_grothendieck_instance(seed);
    const OracleReport b = random_grothendieck_instance(seed);
    CHECK(a.instance == b.instance);
    CHECK(a.witness == b.witness);
    CHECK(random_pushout_instance(seed).instance == random_pushout_instance(seed).instance);
    CHECK(random_bundle_instance(seed).instance == random_bundle_instance(seed).instance);
  }
}
