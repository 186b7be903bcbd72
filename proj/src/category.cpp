#include "hocolim/category.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace hocolim {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::string sanitize(std::string_view base) {
  std::string stem;
  for (char c : base) {
    const auto u = static_cast<unsigned char>(c);
    stem += (u < 0x80 && (std::isalnum(u) || u == '_')) ? c : '_';
  }
  if (stem.empty() || std::isdigit(static_cast<unsigned char>(stem.front()))) stem = "m" + stem;
  if (!is_valid_name(stem)) stem += '_';
  return stem;
}

template <typename Taken>
std::string fresh(std::string_view base, Taken taken) {
  std::string stem = sanitize(base);
  if (!taken(stem)) return stem;
  for (std::size_t k = 1;; ++k) {
    std::string candidate = stem + "_" + std::to_string(k);
    if (!taken(candidate)) return candidate;
  }
}

}  // namespace

std::size_t FiniteCategory::Builder::add_object(std::string name) {
  if (!is_valid_name(name)) throw CategoryError("invalid object name '" + name + "'");
  if (find_object(name)) throw CategoryError("duplicate object '" + name + "'");
  const std::size_t object = objects_.size();
  objects_.push_back(std::move(name));
  identities_.push_back(morphisms_.size());
  morphisms_.push_back(Morphism{"", object, object, true});
  return object;
}

std::size_t FiniteCategory::Builder::add_morphism(std::string name, std::size_t source,
                                                  std::size_t target) {
  if (!is_valid_name(name)) throw CategoryError("invalid morphism name '" + name + "'");
  if (find_morphism(name)) throw CategoryError("duplicate morphism '" + name + "'");
  if (source >= objects_.size() || target >= objects_.size()) {
    throw CategoryError("morphism '" + name + "' has an unknown endpoint");
  }
  morphisms_.push_back(Morphism{std::move(name), source, target, false});
  return morphisms_.size() - 1;
}

std::size_t FiniteCategory::Builder::identity(std::size_t object) const {
  return identities_.at(object);
}

void FiniteCategory::Builder::set_composite(std::size_t outer, std::size_t inner, std::size_t result) {
  const std::size_t M = morphisms_.size();
  if (outer >= M || inner >= M || result >= M) throw CategoryError("composition names an unknown morphism");
  if (morphisms_[outer].identity || morphisms_[inner].identity) {
    throw CategoryError("composition entries may not mention identities");
  }
  composites_.emplace_back(outer, inner, result);
}

std::optional<std::size_t> FiniteCategory::Builder::find_object(std::string_view name) const {
  auto it = std::find(objects_.begin(), objects_.end(), name);
  if (it == objects_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - objects_.begin());
}

std::optional<std::size_t> FiniteCategory::Builder::find_morphism(std::string_view name) const {
  for (std::size_t m = 0; m < morphisms_.size(); ++m) {
    if (!morphisms_[m].identity && morphisms_[m].name == name) return m;
  }
  return std::nullopt;
}

std::string FiniteCategory::Builder::fresh_object_name(std::string_view base) const {
  return fresh(base, [this](const std::string& n) { return find_object(n).has_value(); });
}

std::string FiniteCategory::Builder::fresh_morphism_name(std::string_view base) const {
  return fresh(base, [this](const std::string& n) { return find_morphism(n).has_value(); });
}

FiniteCategory FiniteCategory::Builder::build() && {
  FiniteCategory C;
  C.objects_ = std::move(objects_);
  C.morphisms_ = std::move(morphisms_);
  C.identities_ = std::move(identities_);
  const std::size_t M = C.morphisms_.size();
  C.composition_.assign(M * M, npos);
  auto& table = C.composition_;
  const auto& mor = C.morphisms_;
  for (std::size_t m = 0; m < M; ++m) {
    table[C.identities_[mor[m].target] * M + m] = m;
    table[m * M + C.identities_[mor[m].source]] = m;
  }
  for (const auto& [outer, inner, result] : composites_) {
    const std::string label = C.morphism_label(outer) + " * " + C.morphism_label(inner);
    if (mor[inner].target != mor[outer].source) throw CategoryError(label + ": not composable");
    if (mor[result].source != mor[inner].source || mor[result].target != mor[outer].target) {
      throw CategoryError(label + " = " + C.morphism_label(result) + ": endpoints do not match");
    }
    std::size_t& slot = table[outer * M + inner];
    if (slot != npos && slot != result) throw CategoryError(label + " is defined twice");
    slot = result;
  }
  for (std::size_t g = 0; g < M; ++g) {
    for (std::size_t f = 0; f < M; ++f) {
      if (mor[f].target == mor[g].source && table[g * M + f] == npos) {
        throw CategoryError("composition " + C.morphism_label(g) + " * " + C.morphism_label(f) +
                            " is missing");
      }
    }
  }
  for (std::size_t h = 0; h < M; ++h) {
    for (std::size_t g = 0; g < M; ++g) {
      if (mor[g].target != mor[h].source) continue;
      for (std::size_t f = 0; f < M; ++f) {
        if (mor[f].target != mor[g].source) continue;
        if (table[table[h * M + g] * M + f] != table[h * M + table[g * M + f]]) {
          throw CategoryError("composition is not associative on " + C.morphism_label(h) + ", " +
                              C.morphism_label(g) + ", " + C.morphism_label(f));
        }
      }
    }
  }
  return C;
}

std::vector<std::size_t> FiniteCategory::nonidentity_morphisms() const {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < morphisms_.size(); ++m) {
    if (!morphisms_[m].identity) out.push_back(m);
  }
  return out;
}

std::size_t FiniteCategory::compose(std::size_t outer, std::size_t inner) const {
  const std::size_t M = morphisms_.size();
  if (outer >= M || inner >= M || composition_[outer * M + inner] == npos) {
    throw CategoryError("morphisms are not composable");
  }
  return composition_[outer * M + inner];
}

std::optional<std::size_t> FiniteCategory::find_object(std::string_view name) const {
  auto it = std::find(objects_.begin(), objects_.end(), name);
  if (it == objects_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - objects_.begin());
}

std::optional<std::size_t> FiniteCategory::find_morphism(std::string_view name) const {
  for (std::size_t m = 0; m < morphisms_.size(); ++m) {
    if (!morphisms_[m].identity && morphisms_[m].name == name) return m;
  }
  return std::nullopt;
}

std::string FiniteCategory::morphism_label(std::size_t m) const {
  const Morphism& mor = morphisms_.at(m);
  return mor.identity ? "id(" + objects_[mor.source] + ")" : mor.name;
}

std::optional<std::string> FiniteCategory::nerve_finiteness_witness() const {
  for (const Morphism& m : morphisms_) {
    if (!m.identity && m.source == m.target) {
      return "nonidentity endomorphism " + m.name + " : " + objects_[m.source] + " -> " +
             objects_[m.target];
    }
  }
  // Depth-first search for a directed cycle of nonidentity morphisms.
  const std::size_t n = objects_.size();
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::size_t> via;    // morphisms on the current path
  std::optional<std::string> witness;
  std::function<bool(std::size_t)> dfs = [&](std::size_t v) -> bool {
    state[v] = 1;
    for (std::size_t m = 0; m < morphisms_.size(); ++m) {
      const Morphism& mor = morphisms_[m];
      if (mor.identity || mor.source != v) continue;
      via.push_back(m);
      if (state[mor.target] == 1) {
        auto start = std::find_if(via.begin(), via.end(),
                                  [&](std::size_t k) { return morphisms_[k].source == mor.target; });
        std::string text = "cycle of nonidentity morphisms:";
        for (auto it = start; it != via.end(); ++it) {
          const Morphism& c = morphisms_[*it];
          text += " " + c.name + " : " + objects_[c.source] + " -> " + objects_[c.target] + ";";
        }
        text.pop_back();
        witness = text;
        return true;
      }
      if (state[mor.target] == 0 && dfs(mor.target)) return true;
      via.pop_back();
    }
    state[v] = 2;
    return false;
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (state[v] == 0 && dfs(v)) return witness;
  }
  return std::nullopt;
}

Poset::Poset(std::vector<std::string> elements,
             std::span<const std::pair<std::size_t, std::size_t>> strict)
    : elements_(std::move(elements)) {
  const std::size_t n = elements_.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (!is_valid_name(elements_[k])) throw PosetError("invalid element name '" + elements_[k] + "'");
    for (std::size_t l = 0; l < k; ++l) {
      if (elements_[l] == elements_[k]) throw PosetError("duplicate element '" + elements_[k] + "'");
    }
  }
  leq_.assign(n * n, false);
  for (std::size_t k = 0; k < n; ++k) leq_[k * n + k] = true;
  for (const auto& [a, b] : strict) {
    if (a >= n || b >= n) throw PosetError("relation names an unknown element");
    if (a == b) throw PosetError("relation " + elements_[a] + " < " + elements_[a] + " is reflexive");
    leq_[a * n + b] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq_[k * n + j]) leq_[i * n + j] = true;
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (leq_[a * n + b] && leq_[b * n + a]) {
        throw PosetError("relations force " + elements_[a] + " = " + elements_[b]);
      }
    }
  }
}

Poset Poset::chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t k = 0; k < n; ++k) {
    names.push_back("c" + std::to_string(k));
    if (k > 0) rel.emplace_back(k - 1, k);
  }
  return Poset(std::move(names), rel);
}

std::optional<std::size_t> Poset::find(std::string_view name) const {
  auto it = std::find(elements_.begin(), elements_.end(), name);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      if (!less(a, b)) continue;
      bool between = false;
      for (std::size_t c = 0; c < size() && !between; ++c) between = less(a, c) && less(c, b);
      if (!between) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<std::size_t> Poset::linear_extension() const {
  std::vector<std::size_t> below(size(), 0);
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) below[b] += less(a, b) ? 1 : 0;
  }
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  return order;
}

FiniteCategory poset_as_category(const Poset& P) {
  FiniteCategory::Builder b;
  for (const std::string& e : P.elements()) b.add_object(e);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> arrow;
  for (std::size_t x = 0; x < P.size(); ++x) {
    for (std::size_t y = 0; y < P.size(); ++y) {
      if (!P.less(x, y)) continue;
      arrow[{x, y}] = b.add_morphism(b.fresh_morphism_name(P.element(x) + "_" + P.element(y)), x, y);
    }
  }
  for (const auto& [xy, f] : arrow) {
    for (const auto& [yz, g] : arrow) {
      if (xy.second == yz.first) b.set_composite(g, f, arrow.at({xy.first, yz.second}));
    }
  }
  return std::move(b).build();
}

MonotonicityReport monotone_map_check(std::span<const std::size_t> map, const Poset& P,
                                      const Poset& Q) {
  if (map.size() != P.size()) throw PosetError("map does not cover the source poset");
  for (std::size_t v : map) {
    if (v >= Q.size()) throw PosetError("map lands outside the target poset");
  }
  for (std::size_t a = 0; a < P.size(); ++a) {
    for (std::size_t b = 0; b < P.size(); ++b) {
      if (P.leq(a, b) && !Q.leq(map[a], map[b])) return {false, std::make_pair(a, b)};
    }
  }
  return {};
}

DiagramOfPosets::DiagramOfPosets(FiniteCategory index, std::vector<Poset> fibers,
                                 std::vector<std::vector<std::size_t>> transitions)
    : index_(std::move(index)), fibers_(std::move(fibers)), transitions_(std::move(transitions)) {
  if (auto witness = index_.nerve_finiteness_witness()) {
    throw DiagramError("diagram index is not nerve-finite: " + *witness);
  }
  if (fibers_.size() != index_.object_count()) throw DiagramError("diagram needs one fiber per object");
  if (transitions_.size() != index_.morphism_count()) {
    throw DiagramError("diagram needs one transition per morphism");
  }
  for (std::size_t m = 0; m < index_.morphism_count(); ++m) {
    const auto& mor = index_.morphism(m);
    const Poset& P = fibers_[mor.source];
    const Poset& Q = fibers_[mor.target];
    auto& T = transitions_[m];
    const std::string label = index_.morphism_label(m);
    if (mor.identity) {
      std::vector<std::size_t> id(P.size());
      std::iota(id.begin(), id.end(), std::size_t{0});
      if (T.empty()) T = id;
      if (T != id) throw DiagramError("transition of " + label + " is not the identity");
      continue;
    }
    if (T.size() != P.size()) throw DiagramError("transition of " + label + " does not cover its fiber");
    for (std::size_t v : T) {
      if (v >= Q.size()) throw DiagramError("transition of " + label + " leaves its target fiber");
    }
    if (auto report = monotone_map_check(T, P, Q); !report) {
      const auto [a, b] = *report.witness;
      throw DiagramError("transition of " + label + " is not monotone: " + P.element(a) + " <= " +
                         P.element(b) + " but " + Q.element(T[a]) + " !<= " + Q.element(T[b]));
    }
  }
  for (std::size_t g = 0; g < index_.morphism_count(); ++g) {
    for (std::size_t f = 0; f < index_.morphism_count(); ++f) {
      if (index_.morphism(f).target != index_.morphism(g).source) continue;
      const auto& Tf = transitions_[f];
      const auto& Tg = transitions_[g];
      const auto& Tgf = transitions_[index_.compose(g, f)];
      for (std::size_t p = 0; p < Tf.size(); ++p) {
        if (Tg[Tf[p]] != Tgf[p]) {
          throw DiagramError("transitions are not functorial on " + index_.morphism_label(g) + " * " +
                             index_.morphism_label(f));
        }
      }
    }
  }
}

SimplicialSet nerve(const FiniteCategory& C) {
  if (auto witness = C.nerve_finiteness_witness()) throw NotNerveFinite(*witness);
  SimplicialSet N;
  std::vector<SimplexId> vertex;
  for (const std::string& obj : C.objects()) vertex.push_back(N.add(0, obj));
  std::map<std::vector<std::size_t>, SimplexId> chain_id;

  // A chain possibly containing identities is s_J of the chain with them removed.
  auto pointer_for = [&](const std::vector<std::size_t>& chain, std::size_t start) {
    std::vector<std::size_t> collapse;
    std::vector<std::size_t> reduced;
    for (std::size_t k = 0; k < chain.size(); ++k) {
      if (C.morphism(chain[k]).identity) {
        collapse.push_back(k);
      } else {
        reduced.push_back(chain[k]);
      }
    }
    const SimplexId target = reduced.empty() ? vertex[start] : chain_id.at(reduced);
    return FacePointer(DegeneracyWord::collapsing(std::move(collapse)), target);
  };

  std::vector<std::vector<std::size_t>> level;
  for (std::size_t m : C.nonidentity_morphisms()) {
    const auto& mor = C.morphism(m);
    const SimplexId id = N.add_fresh(1, mor.name, {FacePointer(vertex[mor.target]), FacePointer(vertex[mor.source])});
    chain_id.emplace(std::vector<std::size_t>{m}, id);
    level.push_back({m});
  }
  for (std::size_t n = 2; !level.empty(); ++n) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& chain : level) {
      for (std::size_t m : C.nonidentity_morphisms()) {
        if (C.morphism(m).source != C.morphism(chain.back()).target) continue;
        std::vector<std::size_t> longer = chain;
        longer.push_back(m);
        std::vector<FacePointer> faces;
        for (std::size_t i = 0; i <= n; ++i) {
          std::vector<std::size_t> face;
          std::size_t start = C.morphism(longer.front()).source;
          if (i == 0) {
            face.assign(longer.begin() + 1, longer.end());
            start = C.morphism(longer[1]).source;
          } else if (i == n) {
            face.assign(longer.begin(), longer.end() - 1);
          } else {
            face = longer;
            face[i - 1] = C.compose(longer[i], longer[i - 1]);
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
          }
          faces.push_back(pointer_for(face, start));
        }
        std::string base;
        for (std::size_t k : longer) base += (base.empty() ? "" : "_") + C.morphism(k).name;
        chain_id.emplace(longer, N.add_fresh(n, base, std::move(faces)));
        next.push_back(std::move(longer));
      }
    }
    level = std::move(next);
  }
  return N;
}

FiniteCategory grothendieck(const DiagramOfPosets& D) {
  const FiniteCategory& I = D.index();
  FiniteCategory::Builder b;
  std::vector<std::vector<std::size_t>> object_of(I.object_count());
  for (std::size_t c = 0; c < I.object_count(); ++c) {
    const Poset& P = D.fiber(c);
    for (std::size_t p = 0; p < P.size(); ++p) {
      object_of[c].push_back(b.add_object(b.fresh_object_name(I.object(c) + "_" + P.element(p))));
    }
  }
  using Key = std::tuple<std::size_t, std::size_t, std::size_t>;  // (φ, p, p')
  std::map<Key, std::size_t> arrow;
  for (std::size_t phi = 0; phi < I.morphism_count(); ++phi) {
    const auto& mor = I.morphism(phi);
    const Poset& P = D.fiber(mor.source);
    const Poset& Q = D.fiber(mor.target);
    const auto T = D.transition(phi);
    for (std::size_t p = 0; p < P.size(); ++p) {
      for (std::size_t q = 0; q < Q.size(); ++q) {
        if (!Q.leq(T[p], q)) continue;
        const std::size_t src = object_of[mor.source][p];
        const std::size_t dst = object_of[mor.target][q];
        if (mor.identity && p == q) {
          arrow[{phi, p, q}] = b.identity(src);
          continue;
        }
        const std::string base = (mor.identity ? "id_" + I.object(mor.source) : mor.name) + "_" +
                                 P.element(p) + "_" + Q.element(q);
        arrow[{phi, p, q}] = b.add_morphism(b.fresh_morphism_name(base), src, dst);
      }
    }
  }
  for (const auto& [kf, f] : arrow) {
    const auto& [phi, p, pp] = kf;
    const auto& mf = I.morphism(phi);
    if (mf.identity && p == pp) continue;
    for (const auto& [kg, g] : arrow) {
      const auto& [psi, q, qq] = kg;
      const auto& mg = I.morphism(psi);
      if (mg.identity && q == qq) continue;
      if (mg.source != mf.target || q != pp) continue;
      b.set_composite(g, f, arrow.at({I.compose(psi, phi), p, qq}));
    }
  }
  return std::move(b).build();
}

DiagramOfPosets constant_point_diagram(const FiniteCategory& index) {
  std::vector<Poset> fibers(index.object_count(), Poset::point());
  std::vector<std::vector<std::size_t>> transitions(index.morphism_count(), std::vector<std::size_t>{0});
  return DiagramOfPosets(index, std::move(fibers), std::move(transitions));
}

}  // namespace hocolim
