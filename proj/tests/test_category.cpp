#include <catch_amalgamated.hpp>

#include "brute.hpp"
#include "corpus.hpp"
#include "hocolim/category.hpp"
#include "hocolim/constructions.hpp"
#include "hocolim/mobius.hpp"
#include "hocolim/oracles.hpp"
#include "hocolim/random.hpp"

using namespace hocolim;

namespace {

const FiniteCategory& corpus_category(std::string_view name) {
  return *test_support::corpus_document().category(name);
}

const DiagramOfPosets& corpus_diagram(std::string_view name) {
  return test_support::corpus_document().diagram(name)->diagram;
}

void check_nerve(const FiniteCategory& C) {
  const SimplicialSet N = nerve(C);
  CHECK(counts_by_dimension(N) == test_support::chain_counts(C));
  CHECK(validate(N).ok());
}

}  // namespace

TEST_CASE("nerves of small categories") {
  CHECK(counts_by_dimension(nerve(span_category())) == std::vector<std::size_t>{3, 2});
  const SimplicialSet NI = nerve(corpus_category("I"));
  CHECK(counts_by_dimension(NI) == std::vector<std::size_t>{4, 5, 2});
  check_nerve(corpus_category("I"));
  check_nerve(span_category());

  // the nerve of a chain poset is a standard simplex
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(find_isomorphism(nerve(poset_as_category(Poset::chain(n + 1))), standard_simplex(n)).has_value());
  }
}

TEST_CASE("faces in the nerve compose morphisms") {
  const SimplicialSet NI = nerve(corpus_category("I"));
  const auto chain = NI.find("f_g1").value();
  CHECK(to_string(NI[chain].faces[0], NI) == "g1");
  CHECK(to_string(NI[chain].faces[1], NI) == "g1f");
  CHECK(to_string(NI[chain].faces[2], NI) == "f");
}

TEST_CASE("nerve-finiteness") {
  FiniteCategory::Builder loop;
  const auto x = loop.add_object("x");
  const auto e = loop.add_morphism("e", x, x);
  loop.set_composite(e, e, e);
  const FiniteCategory idempotent = std::move(loop).build();
  CHECK_FALSE(idempotent.nerve_finite());
  CHECK_THROWS_AS(nerve(idempotent), NotNerveFinite);

  FiniteCategory::Builder cycle;
  const auto a = cycle.add_object("a");
  const auto b = cycle.add_object("b");
  const auto u = cycle.add_morphism("u", a, b);
  const auto v = cycle.add_morphism("v", b, a);
  cycle.set_composite(v, u, cycle.identity(a));
  cycle.set_composite(u, v, cycle.identity(b));
  const FiniteCategory iso = std::move(cycle).build();
  const auto witness = iso.nerve_finiteness_witness();
  REQUIRE(witness.has_value());
  CHECK(witness->find('u') != std::string::npos);
}

TEST_CASE("category builder rejects bad tables") {
  FiniteCategory::Builder missing;
  const auto a = missing.add_object("a");
  const auto b = missing.add_object("b");
  const auto c = missing.add_object("c");
  const auto f = missing.add_morphism("f", a, b);
  const auto g = missing.add_morphism("g", b, c);
  CHECK_THROWS_AS(missing.add_object("a"), CategoryError);
  CHECK_THROWS_AS(missing.set_composite(missing.identity(b), f, f), CategoryError);
  CHECK_THROWS_AS(std::move(missing).build(), CategoryError);

  FiniteCategory::Builder wrong;
  const auto p = wrong.add_object("p");
  const auto q = wrong.add_object("q");
  const auto r = wrong.add_object("r");
  const auto s = wrong.add_morphism("s", p, q);
  const auto t = wrong.add_morphism("t", q, r);
  wrong.set_composite(t, s, s);
  CHECK_THROWS_AS(std::move(wrong).build(), CategoryError);
  (void)g;
  (void)c;
}

TEST_CASE("posets") {
  const Poset chain2 = Poset::chain(2);
  CHECK(poset_as_category(chain2).nonidentity_morphisms().size() == 1);
  const std::vector<std::pair<std::size_t, std::size_t>> rel{{0, 1}, {1, 2}};
  const Poset P({"a", "b", "c"}, rel);
  CHECK(P.leq(0, 2));
  CHECK(P.covers().size() == 2);
  CHECK(poset_as_category(P).nonidentity_morphisms().size() == 3);
  const std::vector<std::pair<std::size_t, std::size_t>> loop{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Poset({"a", "b"}, loop), PosetError);

  const std::vector<std::size_t> identity{0, 1, 2};
  CHECK(monotone_map_check(identity, P, P).monotone);
  const std::vector<std::size_t> swap{1, 0};
  const MonotonicityReport report = monotone_map_check(swap, chain2, chain2);
  CHECK_FALSE(report.monotone);
  CHECK(report.witness == std::pair<std::size_t, std::size_t>{0, 1});

  CHECK(random_poset(1, 5) == random_poset(1, 5));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Poset R = random_poset(seed, 5);
    const auto order = R.linear_extension();
    for (std::size_t x = 0; x < order.size(); ++x) {
      for (std::size_t y = x + 1; y < order.size(); ++y) CHECK_FALSE(R.less(order[y], order[x]));
    }
  }
}

TEST_CASE("Grothendieck construction") {
  const FiniteCategory G = grothendieck(corpus_diagram("collapse"));
  CHECK(G.object_count() == 3);
  const SimplicialSet NG = nerve(G);
  CHECK(counts_by_dimension(NG) == std::vector<std::size_t>{3, 3, 1});
  CHECK(euler_char_combinatorial(NG) == 1);

  const FiniteCategory& I = corpus_category("I");
  CHECK(find_isomorphism(nerve(grothendieck(constant_point_diagram(I))), nerve(I)).has_value());

  // discrete index: disjoint union of fibers
  FiniteCategory::Builder two;
  two.add_object("l");
  two.add_object("r");
  const FiniteCategory discrete = std::move(two).build();
  const std::vector<std::pair<std::size_t, std::size_t>> rel{{0, 1}, {0, 2}};
  const Poset V({"b", "x", "y"}, rel);
  const DiagramOfPosets D(discrete, {Poset::chain(3), V}, {{}, {}});
  CHECK(euler_char_combinatorial(nerve(grothendieck(D))) == 2);
}

TEST_CASE("diagram validation") {
  const FiniteCategory& arrow = corpus_category("arrow");
  const auto u = arrow.find_morphism("u").value();
  std::vector<std::vector<std::size_t>> swap(arrow.morphism_count());
  swap[u] = {1, 0};
  CHECK_THROWS_AS(DiagramOfPosets(arrow, {Poset::chain(2), Poset::chain(2)}, swap), DiagramError);
  std::vector<std::vector<std::size_t>> short_map(arrow.morphism_count());
  short_map[u] = {0};
  CHECK_THROWS_AS(DiagramOfPosets(arrow, {Poset::chain(2), Poset::chain(2)}, short_map), DiagramError);

  // not functorial: g1 f and g2 f must agree on the composite
  const FiniteCategory& I = corpus_category("I");
  std::vector<std::vector<std::size_t>> maps(I.morphism_count());
  for (std::size_t m : I.nonidentity_morphisms()) maps[m] = {0, 1};
  maps[I.find_morphism("g2").value()] = {1, 1};
  std::vector<Poset> fibers(I.object_count(), Poset::chain(2));
  CHECK_THROWS_AS(DiagramOfPosets(I, fibers, maps), DiagramError);
}

TEST_CASE("random diagrams") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    INFO("seed " << seed);
    const DiagramOfPosets D = random_diagram(seed);
    CHECK(D.index().object_count() <= 5);
    for (const Poset& P : D.fibers()) CHECK(P.size() <= 4);
    CHECK(D == random_diagram(seed));
    // functoriality re-checked by rebuilding
    std::vector<std::vector<std::size_t>> maps;
    for (std::size_t m = 0; m < D.index().morphism_count(); ++m) {
      const auto t = D.transition(m);
      maps.emplace_back(t.begin(), t.end());
    }
    CHECK_NOTHROW(DiagramOfPosets(D.index(), {D.fibers().begin(), D.fibers().end()}, maps));
    check_nerve(D.index());
    check_nerve(grothendieck(D));
  }
}
