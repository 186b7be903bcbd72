#include "hocolim/oracles.hpp"

#include <stdexcept>

#include "hocolim/constructions.hpp"
#include "hocolim/dsl.hpp"
#include "hocolim/homology.hpp"
#include "hocolim/mobius.hpp"

namespace hocolim {

namespace {

OracleReport finish(Integer formula, const SimplicialSet& model) {
  OracleReport r;
  r.formula_value = std::move(formula);
  r.construction_value = euler_char_combinatorial(model);
  r.homology_value = euler_via_homology(model);
  r.agree = r.formula_value == r.construction_value;
  return r;
}

std::string sizes(const SimplicialSet& K) {
  std::string out = "(";
  const auto counts = counts_by_dimension(K);
  for (std::size_t d = 0; d < counts.size(); ++d) out += (d ? "," : "") + std::to_string(counts[d]);
  return out + ")";
}

}  // namespace

FiniteCategory span_category() {
  FiniteCategory::Builder b;
  const auto a = b.add_object("a");
  const auto bb = b.add_object("b");
  const auto c = b.add_object("c");
  b.add_morphism("f", a, bb);
  b.add_morphism("g", a, c);
  return std::move(b).build();
}

OracleReport oracle_pushout(const SimplicialMap& f, const SimplicialMap& g) {
  const SimplicialSet N = nerve(span_category());
  VertexWeights w(1);
  w.set("a", {euler_char_combinatorial(f.source())});
  w.set("b", {euler_char_combinatorial(f.target())});
  w.set("c", {euler_char_combinatorial(g.target())});
  OracleReport r = finish(hocolim_chi(N, w)[0], double_mapping_cylinder(f, g));

  dsl::Document doc;
  doc.add_sset("A", f.source());
  doc.add_sset("B", f.target());
  doc.add_sset("C", g.target());
  doc.add_map("f", "A", "B", f);
  doc.add_map("g", "A", "C", g);
  r.instance = dsl::serialize(doc);
  r.witness = "A" + sizes(f.source()) + " B" + sizes(f.target()) + " C" + sizes(g.target());
  return r;
}

OracleReport oracle_grothendieck(const DiagramOfPosets& D) {
  const FiniteCategory& I = D.index();
  const SimplicialSet N = nerve(I);
  VertexWeights w(1);
  for (std::size_t o = 0; o < I.object_count(); ++o) {
    w.set(I.object(o), {euler_char_combinatorial(nerve(poset_as_category(D.fiber(o))))});
  }
  OracleReport r = finish(hocolim_chi(N, w)[0], nerve(grothendieck(D)));

  dsl::Document doc;
  doc.add_category("I", I);
  std::vector<std::string> fibers;
  for (std::size_t o = 0; o < I.object_count(); ++o) {
    fibers.push_back("P" + std::to_string(o));
    doc.add_poset(fibers.back(), D.fiber(o));
  }
  doc.add_diagram("D", "I", fibers, D);
  r.instance = dsl::serialize(doc);
  std::size_t total = 0;
  for (const Poset& P : D.fibers()) total += P.size();
  r.witness = "index objects " + std::to_string(I.object_count()) + ", morphisms " +
              std::to_string(I.morphism_count()) + ", fiber elements " + std::to_string(total);
  return r;
}

OracleReport oracle_trivial_bundle(const SimplicialSet& F, const SimplicialSet& B) {
  if (B.count(0) == 0) throw std::invalid_argument("bundle base is empty");
  const ClassPartition P = component_partition(B);
  if (P.blocks.size() != 1) {
    throw std::invalid_argument("bundle base has " + std::to_string(P.blocks.size()) + " components");
  }
  const Integer formula = Integer(class_mobius(B, P)[0]) * euler_char_combinatorial(F);
  OracleReport r = finish(formula, product(F, B));

  dsl::Document doc;
  doc.add_sset("F", F);
  doc.add_sset("B", B);
  r.instance = dsl::serialize(doc);
  r.witness = "F" + sizes(F) + " B" + sizes(B);
  return r;
}

OracleReport random_pushout_instance(std::uint64_t seed) {
  SplitMix64 rng(seed);
  auto A = std::make_shared<const SimplicialSet>(random_sset(rng, SsetBounds{3, 15}));
  const SimplicialMap f = random_map_from(A, rng, 30);
  const SimplicialMap g = random_map_from(A, rng, 30);
  OracleReport r = oracle_pushout(f, g);
  r.witness = "seed " + std::to_string(seed) + ": " + r.witness;
  return r;
}

OracleReport random_grothendieck_instance(std::uint64_t seed, DiagramBounds bounds) {
  OracleReport r = oracle_grothendieck(random_diagram(seed, bounds));
  r.witness = "seed " + std::to_string(seed) + ": " + r.witness;
  return r;
}

OracleReport random_bundle_instance(std::uint64_t seed) {
  SplitMix64 rng(seed);
  const SimplicialSet F = random_sset(rng, SsetBounds{2, 10});
  const SimplicialSet B0 = random_sset(rng, SsetBounds{2, 10});
  const ClassPartition P = component_partition(B0);
  const SimplicialSet B = full_subcomplex(B0, P.blocks.front());
  OracleReport r = oracle_trivial_bundle(F, B);
  r.witness = "seed " + std::to_string(seed) + ": " + r.witness;
  return r;
}

}  // namespace hocolim
