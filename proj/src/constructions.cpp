#include "hocolim/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>

namespace hocolim {

namespace {

std::string subset_name(std::span<const std::size_t> vertices) {
  std::string name = "x";
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (k > 0) name += '_';
    name += std::to_string(vertices[k]);
  }
  return name;
}

void for_each_combination(std::span<const std::size_t> pool, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (chosen.size() == k) {
      visit(chosen);
      return;
    }
    for (std::size_t p = start; p + (k - chosen.size()) <= pool.size(); ++p) {
      chosen.push_back(pool[p]);
      rec(p + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

SimplicialSet simplex_skeleton(std::size_t n, bool include_top) {
  SimplicialSet K;
  std::map<std::vector<std::size_t>, SimplexId> ids;
  std::vector<std::size_t> all(n + 1);
  for (std::size_t v = 0; v <= n; ++v) all[v] = v;
  const std::size_t top = include_top ? n : n - 1;
  for (std::size_t m = 0; m <= top; ++m) {
    for_each_combination(all, m + 1, [&](const std::vector<std::size_t>& subset) {
      std::vector<FacePointer> faces;
      if (m > 0) {
        for (std::size_t i = 0; i <= m; ++i) {
          std::vector<std::size_t> face = subset;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
          faces.emplace_back(ids.at(face));
        }
      }
      ids.emplace(subset, K.add(m, subset_name(subset), std::move(faces)));
    });
  }
  return K;
}

using CollapseSet = std::vector<std::size_t>;  // ascending

CollapseSet collapse_set(const DegeneracyWord& w) {
  CollapseSet out(w.indices().begin(), w.indices().end());
  std::reverse(out.begin(), out.end());
  return out;
}

// Positions of `set` seen through the surjection that collapses `removed`.
CollapseSet pushed_forward(const CollapseSet& set, const CollapseSet& removed) {
  CollapseSet out;
  for (std::size_t j : set) {
    if (std::binary_search(removed.begin(), removed.end(), j)) continue;
    const auto below = static_cast<std::size_t>(
        std::lower_bound(removed.begin(), removed.end(), j) - removed.begin());
    out.push_back(j - below);
  }
  return out;
}

struct ProductKey {
  SimplexId x;
  SimplexId y;
  CollapseSet a;
  CollapseSet b;

  auto operator<=>(const ProductKey&) const = default;
};

std::string degenerate_label(const CollapseSet& set, const std::string& name) {
  std::string out;
  for (auto it = set.rbegin(); it != set.rend(); ++it) out += "s" + std::to_string(*it);
  return out + name;
}

struct KeyedProduct {
  SimplicialSet set;
  std::vector<std::vector<ProductKey>> keys;  // keys[d][k] for generator (d, k)
};

KeyedProduct keyed_product(const SimplicialSet& X, const SimplicialSet& Y) {
  KeyedProduct out;
  std::map<ProductKey, SimplexId> ids;
  if (X.empty() || Y.empty()) return out;
  const std::size_t dx = X.num_dimensions() - 1;
  const std::size_t dy = Y.num_dimensions() - 1;
  for (std::size_t d = 0; d <= dx + dy; ++d) {
    std::vector<std::size_t> positions(d);
    for (std::size_t p = 0; p < d; ++p) positions[p] = p;
    for (std::size_t m = 0; m <= std::min(d, dx); ++m) {
      for (std::size_t n = 0; n <= std::min(d, dy); ++n) {
        if (m + n < d) continue;
        for (SimplexId x : X.ids(m)) {
          for (SimplexId y : Y.ids(n)) {
            for_each_combination(positions, d - m, [&](const CollapseSet& a) {
              CollapseSet rest;
              std::set_difference(positions.begin(), positions.end(), a.begin(), a.end(),
                                  std::back_inserter(rest));
              for_each_combination(rest, d - n, [&](const CollapseSet& b) {
                std::vector<FacePointer> faces;
                if (d > 0) {
                  const FacePointer px(DegeneracyWord::collapsing(a), x);
                  const FacePointer py(DegeneracyWord::collapsing(b), y);
                  for (std::size_t i = 0; i <= d; ++i) {
                    const FacePointer fx = face_of(i, px, X);
                    const FacePointer fy = face_of(i, py, Y);
                    const CollapseSet ca = collapse_set(fx.word);
                    const CollapseSet cb = collapse_set(fy.word);
                    CollapseSet common;
                    std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(),
                                          std::back_inserter(common));
                    const ProductKey key{fx.target, fy.target, pushed_forward(ca, common),
                                         pushed_forward(cb, common)};
                    faces.emplace_back(DegeneracyWord::collapsing(common), ids.at(key));
                  }
                }
                const std::string base =
                    degenerate_label(a, X.name(x)) + "_" + degenerate_label(b, Y.name(y));
                const SimplexId id = out.set.add_fresh(d, base, std::move(faces));
                ProductKey key{x, y, a, b};
                ids.emplace(key, id);
                if (out.keys.size() <= d) out.keys.resize(d + 1);
                out.keys[d].push_back(std::move(key));
              });
            });
          }
        }
      }
    }
  }
  return out;
}

bool identical_presentation(const SimplicialSet& a, const SimplicialSet& b) {
  if (counts_by_dimension(a) != counts_by_dimension(b)) return false;
  for (SimplexId id : a.ids()) {
    if (a[id].name != b[id].name || a[id].faces != b[id].faces) return false;
  }
  return true;
}

}  // namespace

SimplicialSet standard_simplex(std::size_t n) { return simplex_skeleton(n, true); }

SimplicialSet boundary(std::size_t n) {
  if (n == 0) throw std::invalid_argument("boundary(n) needs n >= 1");
  return simplex_skeleton(n, false);
}

SimplicialSet circle(std::size_t k) {
  if (k == 0) throw std::invalid_argument("circle(k) needs k >= 1");
  SimplicialSet K;
  std::vector<SimplexId> v;
  for (std::size_t i = 0; i < k; ++i) v.push_back(K.add(0, "v" + std::to_string(i)));
  auto edge = [&](std::size_t from, std::size_t to, std::size_t label) {
    K.add(1, "e" + std::to_string(label), {FacePointer(v[to]), FacePointer(v[from])});
  };
  for (std::size_t i = 0; i + 1 < k; ++i) edge(i, i + 1, i);
  edge(0, k - 1, k - 1);
  return K;
}

SimplicialSet disjoint_union(const SimplicialSet& X, const SimplicialSet& Y) {
  SimplicialSet K;
  const std::size_t top = std::max(X.num_dimensions(), Y.num_dimensions());
  std::vector<std::vector<SimplexId>> from_x(X.num_dimensions());
  std::vector<std::vector<SimplexId>> from_y(Y.num_dimensions());
  auto copy_level = [&](const SimplicialSet& S, std::vector<std::vector<SimplexId>>& ids,
                        std::size_t d) {
    for (SimplexId id : S.ids(d)) {
      std::vector<FacePointer> faces;
      for (const FacePointer& fp : S[id].faces) {
        faces.emplace_back(fp.word, ids[fp.target.dim][fp.target.index]);
      }
      ids[d].push_back(K.add_fresh(d, S[id].name, std::move(faces)));
    }
  };
  for (std::size_t d = 0; d < top; ++d) {
    if (d < X.num_dimensions()) copy_level(X, from_x, d);
    if (d < Y.num_dimensions()) copy_level(Y, from_y, d);
  }
  return K;
}

SimplicialSet product(const SimplicialSet& X, const SimplicialSet& Y) {
  return keyed_product(X, Y).set;
}

SimplicialSet cylinder(const SimplicialSet& X) { return product(X, standard_simplex(1)); }

SimplicialSet double_mapping_cylinder(const SimplicialMap& f, const SimplicialMap& g) {
  if (f.source_ptr() != g.source_ptr() && !identical_presentation(f.source(), g.source())) {
    throw std::invalid_argument("double_mapping_cylinder: maps have mismatched sources");
  }
  const SimplicialSet& A = f.source();
  const SimplicialSet& B = f.target();
  const SimplicialSet& C = g.target();
  const SimplicialSet interval = standard_simplex(1);
  const SimplexId end0{0, 0};
  const SimplexId end1{0, 1};
  const KeyedProduct P = keyed_product(A, interval);

  SimplicialSet R;
  auto copy_all = [&R](const SimplicialSet& S) {
    std::vector<std::vector<SimplexId>> ids(S.num_dimensions());
    for (SimplexId id : S.ids()) {
      std::vector<FacePointer> faces;
      for (const FacePointer& fp : S[id].faces) {
        faces.emplace_back(fp.word, ids[fp.target.dim][fp.target.index]);
      }
      ids[id.dim].push_back(R.add_fresh(id.dim, S[id].name, std::move(faces)));
    }
    return ids;
  };
  const auto in_b = copy_all(B);
  const auto in_c = copy_all(C);

  // Where each generator of A × Δ¹ ends up: the two ends are replaced by
  // their images under f and g, everything else becomes a new generator.
  std::vector<std::vector<FacePointer>> image(P.set.num_dimensions());
  for (SimplexId id : P.set.ids()) {
    const ProductKey& key = P.keys[id.dim][id.index];
    if (key.y == end0 || key.y == end1) {
      const bool left = key.y == end0;
      const FacePointer fx = left ? f(key.x) : g(key.x);
      const auto& table = left ? in_b : in_c;
      image[id.dim].emplace_back(fx.word, table[fx.target.dim][fx.target.index]);
      continue;
    }
    std::vector<FacePointer> faces;
    for (const FacePointer& fp : P.set[id].faces) {
      const FacePointer& target = image[fp.target.dim][fp.target.index];
      faces.emplace_back(compose(fp.word, target.word), target.target);
    }
    image[id.dim].emplace_back(R.add_fresh(id.dim, "cyl_" + P.set[id].name, std::move(faces)));
  }
  return R;
}

SimplicialSet full_subcomplex(const SimplicialSet& K, std::span<const std::size_t> vertices) {
  std::vector<bool> keep_vertex(K.vertex_count(), false);
  for (std::size_t v : vertices) keep_vertex.at(v) = true;
  SimplicialSet S;
  std::vector<std::vector<std::optional<SimplexId>>> ids(K.num_dimensions());
  for (SimplexId id : K.ids()) {
    const auto vs = vertices_of(id, K);
    const bool inside = std::all_of(vs.begin(), vs.end(), [&](SimplexId v) { return keep_vertex[v.index]; });
    if (!inside) {
      ids[id.dim].push_back(std::nullopt);
      continue;
    }
    std::vector<FacePointer> faces;
    for (const FacePointer& fp : K[id].faces) {
      faces.emplace_back(fp.word, *ids[fp.target.dim][fp.target.index]);
    }
    ids[id.dim].push_back(S.add(id.dim, K[id].name, std::move(faces)));
  }
  return S;
}

std::optional<std::vector<std::vector<std::size_t>>> find_isomorphism(const SimplicialSet& X,
                                                                      const SimplicialSet& Y) {
  if (counts_by_dimension(X) != counts_by_dimension(Y)) return std::nullopt;
  constexpr std::size_t unset = static_cast<std::size_t>(-1);

  // Cheap invariant used to prune candidates: face words plus coface count.
  auto signatures = [](const SimplicialSet& K) {
    std::vector<std::vector<std::pair<std::vector<DegeneracyWord>, std::size_t>>> sig(K.num_dimensions());
    std::vector<std::vector<std::size_t>> cofaces(K.num_dimensions());
    for (std::size_t d = 0; d < K.num_dimensions(); ++d) cofaces[d].assign(K.count(d), 0);
    for (SimplexId id : K.ids()) {
      for (const FacePointer& fp : K[id].faces) ++cofaces[fp.target.dim][fp.target.index];
    }
    for (SimplexId id : K.ids()) {
      std::vector<DegeneracyWord> words;
      for (const FacePointer& fp : K[id].faces) words.push_back(fp.word);
      sig[id.dim].emplace_back(std::move(words), cofaces[id.dim][id.index]);
    }
    return sig;
  };
  const auto sx = signatures(X);
  const auto sy = signatures(Y);

  std::vector<std::vector<std::size_t>> forward(X.num_dimensions());
  std::vector<std::vector<bool>> used(Y.num_dimensions());
  for (std::size_t d = 0; d < X.num_dimensions(); ++d) {
    forward[d].assign(X.count(d), unset);
    used[d].assign(Y.count(d), false);
  }
  std::vector<SimplexId> trail;

  std::function<bool(SimplexId, SimplexId)> bind = [&](SimplexId x, SimplexId y) -> bool {
    std::size_t& slot = forward[x.dim][x.index];
    if (slot != unset) return slot == y.index;
    if (used[y.dim][y.index] || sx[x.dim][x.index] != sy[y.dim][y.index]) return false;
    slot = y.index;
    used[y.dim][y.index] = true;
    trail.push_back(x);
    const auto& fx = X[x].faces;
    const auto& fy = Y[y].faces;
    for (std::size_t i = 0; i < fx.size(); ++i) {
      if (fx[i].word != fy[i].word || !bind(fx[i].target, fy[i].target)) return false;
    }
    return true;
  };
  auto undo_to = [&](std::size_t mark) {
    while (trail.size() > mark) {
      const SimplexId x = trail.back();
      trail.pop_back();
      used[x.dim][forward[x.dim][x.index]] = false;
      forward[x.dim][x.index] = unset;
    }
  };

  std::vector<SimplexId> order = X.ids();
  std::stable_sort(order.begin(), order.end(),
                   [](SimplexId a, SimplexId b) { return a.dim > b.dim; });
  std::function<bool(std::size_t)> search = [&](std::size_t pos) -> bool {
    if (pos == order.size()) return true;
    const SimplexId x = order[pos];
    if (forward[x.dim][x.index] != unset) return search(pos + 1);
    for (SimplexId y : Y.ids(x.dim)) {
      if (used[y.dim][y.index]) continue;
      const std::size_t mark = trail.size();
      if (bind(x, y) && search(pos + 1)) return true;
      undo_to(mark);
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  return forward;
}

}  // namespace hocolim
