#include "hocolim/random.hpp"

#include <bit>
#include <map>
#include <optional>

namespace hocolim {

Poset random_poset(SplitMix64& rng, std::size_t max_size) {
  const std::size_t n = 1 + static_cast<std::size_t>(rng.below(std::max<std::size_t>(max_size, 1)));
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back("p" + std::to_string(k));
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.chance(1, 2)) rel.emplace_back(i, j);
    }
  }
  return Poset(std::move(names), rel);
}

Poset random_poset(std::uint64_t seed, std::size_t max_size) {
  SplitMix64 rng(seed);
  return random_poset(rng, max_size);
}

namespace {

using Map = std::vector<std::size_t>;

std::optional<Map> random_monotone(const Poset& P, const Poset& Q, SplitMix64& rng) {
  Map f(P.size(), 0);
  for (std::size_t p : P.linear_extension()) {
    std::vector<std::size_t> allowed;
    for (std::size_t q = 0; q < Q.size(); ++q) {
      bool ok = true;
      for (std::size_t r = 0; r < P.size() && ok; ++r) {
        if (P.less(r, p)) ok = Q.leq(f[r], q);
      }
      if (ok) allowed.push_back(q);
    }
    if (allowed.empty()) return std::nullopt;
    f[p] = allowed[rng.below(allowed.size())];
  }
  return f;
}

Map compose_maps(const Map& outer, const Map& inner) {
  Map out(inner.size());
  for (std::size_t p = 0; p < inner.size(); ++p) out[p] = outer[inner[p]];
  return out;
}

// Attaches one new n-simplex to K along a random boundary map, creating at
// most `budget` generators. Returns false (leaving K partially modified) if
// the budget runs out; callers work on a copy.
bool attach_random_simplex(SimplicialSet& K, std::size_t n, SplitMix64& rng, std::size_t budget) {
  std::map<std::uint64_t, FacePointer> image;
  std::size_t added = 0;
  auto add_new = [&](std::size_t dim, std::vector<FacePointer> faces) -> std::optional<FacePointer> {
    if (added >= budget) return std::nullopt;
    ++added;
    const std::string base = (dim == 0 ? "v" : "g") + std::to_string(K.size());
    return FacePointer(K.add_fresh(dim, base, std::move(faces)));
  };
  for (std::size_t i = 0; i <= n; ++i) {
    std::optional<FacePointer> v;
    if (K.vertex_count() == 0 || rng.chance(1, 5)) {
      v = add_new(0, {});
      if (!v) return false;
    } else {
      v = FacePointer(SimplexId{0, static_cast<std::size_t>(rng.below(K.vertex_count()))});
    }
    image.emplace(std::uint64_t{1} << i, *v);
  }
  const std::uint64_t full = (std::uint64_t{1} << (n + 1)) - 1;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != k + 1) continue;
      std::vector<FacePointer> faces;
      for (std::size_t bit = 0; bit <= n; ++bit) {
        if (mask & (std::uint64_t{1} << bit)) faces.push_back(image.at(mask & ~(std::uint64_t{1} << bit)));
      }
      std::optional<FacePointer> chosen;
      if (k < n) {
        const auto candidates = simplices_with_faces(K, k, faces);
        if (!candidates.empty() && !rng.chance(1, 4)) {
          chosen = candidates[rng.below(candidates.size())];
        }
      }
      if (!chosen) {
        chosen = add_new(k, std::move(faces));
        if (!chosen) return false;
      }
      image.emplace(mask, *chosen);
    }
  }
  return true;
}

}  // namespace

DiagramOfPosets random_diagram(std::uint64_t seed, DiagramBounds bounds) {
  SplitMix64 rng(seed);
  const Poset I = random_poset(rng, bounds.max_index);
  const std::size_t n = I.size();
  std::vector<Poset> fibers;
  for (std::size_t c = 0; c < n; ++c) fibers.push_back(random_poset(rng, bounds.max_fiber));

  // transition[a][c] for a < c, built along a linear extension so that each
  // new object only has to be consistent with what lies below it.
  std::vector<std::vector<Map>> T(n, std::vector<Map>(n));
  for (std::size_t c : I.linear_extension()) {
    std::vector<std::size_t> below;
    for (std::size_t a = 0; a < n; ++a) {
      if (I.less(a, c)) below.push_back(a);
    }
    std::vector<std::size_t> maximal;
    for (std::size_t b : below) {
      bool top = true;
      for (std::size_t b2 : below) top = top && !I.less(b, b2);
      if (top) maximal.push_back(b);
    }
    bool accepted = false;
    for (int attempt = 0; attempt < 8 && !accepted; ++attempt) {
      std::map<std::size_t, Map> chosen;
      bool ok = true;
      for (std::size_t b : maximal) {
        auto f = random_monotone(fibers[b], fibers[c], rng);
        if (!f) {
          ok = false;
          break;
        }
        chosen[b] = std::move(*f);
      }
      std::map<std::size_t, Map> derived;
      for (std::size_t a : below) {
        if (!ok) break;
        for (std::size_t b : maximal) {
          if (!I.leq(a, b)) continue;
          Map m = a == b ? chosen[b] : compose_maps(chosen[b], T[a][b]);
          auto [it, fresh] = derived.emplace(a, m);
          if (!fresh && it->second != m) ok = false;
        }
      }
      if (!ok) continue;
      for (auto& [a, m] : derived) T[a][c] = std::move(m);
      accepted = true;
    }
    if (!accepted) {
      const std::size_t q = static_cast<std::size_t>(rng.below(fibers[c].size()));
      for (std::size_t a : below) T[a][c] = Map(fibers[a].size(), q);
    }
  }

  FiniteCategory index = poset_as_category(I);
  std::vector<std::vector<std::size_t>> transitions(index.morphism_count());
  for (std::size_t m : index.nonidentity_morphisms()) {
    const auto& mor = index.morphism(m);
    transitions[m] = T[mor.source][mor.target];
  }
  return DiagramOfPosets(std::move(index), std::move(fibers), std::move(transitions));
}

SimplicialSet random_sset(SplitMix64& rng, SsetBounds bounds) {
  SimplicialSet K;
  const std::size_t initial = 1 + static_cast<std::size_t>(rng.below(3));
  for (std::size_t i = 0; i < initial && K.size() < bounds.max_generators; ++i) {
    K.add(0, "v" + std::to_string(i));
  }
  if (bounds.max_dim == 0) return K;
  for (std::size_t attempt = 0; attempt < 4 * bounds.max_generators && K.size() < bounds.max_generators;
       ++attempt) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.below(bounds.max_dim));
    SimplicialSet trial = K;
    if (attach_random_simplex(trial, n, rng, bounds.max_generators - K.size())) K = std::move(trial);
  }
  return K;
}

SimplicialSet random_sset(std::uint64_t seed, SsetBounds bounds) {
  SplitMix64 rng(seed);
  return random_sset(rng, bounds);
}

SimplicialMap random_map_from(std::shared_ptr<const SimplicialSet> source, SplitMix64& rng,
                              std::size_t max_target_generators) {
  const SimplicialSet& A = *source;
  SimplicialSet B;
  std::vector<std::vector<FacePointer>> assignment(A.num_dimensions());
  auto image_of = [&](const FacePointer& fp) {
    const FacePointer& g = assignment[fp.target.dim][fp.target.index];
    return FacePointer(compose(fp.word, g.word), g.target);
  };
  for (SimplexId id : A.ids()) {
    std::vector<FacePointer> faces;
    for (const FacePointer& fp : A[id].faces) faces.push_back(image_of(fp));
    const auto candidates = simplices_with_faces(B, id.dim, faces);
    const bool room = B.size() < max_target_generators;
    FacePointer chosen;
    if (!candidates.empty() && (!room || !rng.chance(1, 3))) {
      chosen = candidates[rng.below(candidates.size())];
    } else {
      const std::string base = (id.dim == 0 ? "w" : "h") + std::to_string(B.size());
      chosen = FacePointer(B.add_fresh(id.dim, base, std::move(faces)));
    }
    assignment[id.dim].push_back(std::move(chosen));
  }
  const std::size_t max_dim = std::max<std::size_t>(A.num_dimensions() > 1 ? A.num_dimensions() - 1 : 1, 1);
  for (int attempt = 0; attempt < 4 && B.size() < max_target_generators; ++attempt) {
    if (rng.chance(1, 2)) continue;
    const std::size_t n = 1 + static_cast<std::size_t>(rng.below(max_dim));
    SimplicialSet trial = B;
    if (attach_random_simplex(trial, n, rng, max_target_generators - B.size())) B = std::move(trial);
  }
  return SimplicialMap(std::move(source), std::make_shared<const SimplicialSet>(std::move(B)),
                       std::move(assignment));
}

}  // namespace hocolim
