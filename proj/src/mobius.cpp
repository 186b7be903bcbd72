#include "hocolim/mobius.hpp"

#include <algorithm>
#include <numeric>

#include "hocolim/random.hpp"

namespace hocolim {

MobiusTable::MobiusTable(std::vector<std::string> names, std::vector<std::int64_t> values)
    : names_(std::move(names)), values_(std::move(values)) {
  if (names_.size() != values_.size()) throw std::invalid_argument("MobiusTable: size mismatch");
}

std::int64_t MobiusTable::at(std::string_view name) const {
  for (std::size_t k = 0; k < names_.size(); ++k) {
    if (names_[k] == name) return values_[k];
  }
  throw std::out_of_range("no vertex named '" + std::string(name) + "'");
}

std::int64_t MobiusTable::total() const {
  return std::accumulate(values_.begin(), values_.end(), std::int64_t{0});
}

namespace {

std::vector<std::string> vertex_names(const SimplicialSet& K) {
  std::vector<std::string> names;
  for (const Generator& g : K.generators(0)) names.push_back(g.name);
  return names;
}

std::int64_t sign(std::size_t dim) { return dim % 2 == 0 ? 1 : -1; }

// Peels generators of maximal dimension one at a time. `choose` picks which
// of the remaining top-dimensional generators goes next.
template <typename Choose>
MobiusTable peel(const SimplicialSet& K, Choose choose) {
  struct Step {
    SimplexId initial;
    std::size_t dim;
  };
  std::vector<Step> steps;
  // Removing a top-dimensional generator leaves the lower skeleton untouched,
  // so initial vertices can be computed in K itself.
  for (std::size_t d = K.num_dimensions(); d-- > 1;) {
    std::vector<SimplexId> remaining = K.ids(d);
    while (!remaining.empty()) {
      const std::size_t pick = choose(std::span<const SimplexId>(remaining));
      const SimplexId sigma = remaining[pick];
      remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
      steps.push_back({initial_vertex(sigma, K), d});
    }
  }
  // Base case: the 0-skeleton, μ ≡ 1. Then undo the peeling, newest first,
  // applying μ(s) = μ'(s) + (-1)ⁿ at each peeled simplex's initial vertex.
  std::vector<std::int64_t> mu(K.vertex_count(), 1);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) mu[it->initial.index] += sign(it->dim);
  return MobiusTable(vertex_names(K), std::move(mu));
}

}  // namespace

MobiusTable mobius_function(const SimplicialSet& K) {
  std::vector<std::int64_t> mu(K.vertex_count(), 0);
  for (SimplexId id : K.ids()) mu[initial_vertex(id, K).index] += sign(id.dim);
  return MobiusTable(vertex_names(K), std::move(mu));
}

MobiusTable mobius_by_peeling(const SimplicialSet& K) {
  return peel(K, [&K](std::span<const SimplexId> candidates) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < candidates.size(); ++k) {
      if (K.name(candidates[k]) < K.name(candidates[best])) best = k;
    }
    return best;
  });
}

MobiusTable mobius_by_peeling(const SimplicialSet& K, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return peel(K, [&rng](std::span<const SimplexId> candidates) {
    return static_cast<std::size_t>(rng.below(candidates.size()));
  });
}

VertexWeights::VertexWeights(std::size_t arity) : arity_(arity) {
  if (arity == 0) throw std::invalid_argument("weights need arity >= 1");
}

VertexWeights VertexWeights::constant(const SimplicialSet& K, std::vector<Integer> value) {
  VertexWeights w(value.size());
  for (const Generator& g : K.generators(0)) w.set(g.name, value);
  return w;
}

void VertexWeights::set(std::string vertex, std::vector<Integer> value) {
  if (value.size() != arity_) {
    throw std::invalid_argument("weight for '" + vertex + "' has length " +
                                std::to_string(value.size()) + ", expected " + std::to_string(arity_));
  }
  values_[std::move(vertex)] = std::move(value);
}

const std::vector<Integer>& VertexWeights::at(std::string_view vertex) const {
  auto it = values_.find(std::string(vertex));
  if (it == values_.end()) throw MissingWeight("no weight for vertex '" + std::string(vertex) + "'");
  return it->second;
}

std::vector<Integer> hocolim_chi(const SimplicialSet& K, const VertexWeights& w) {
  const MobiusTable mu = mobius_function(K);
  std::vector<Integer> total(w.arity(), 0);
  for (std::size_t v = 0; v < mu.size(); ++v) {
    const auto& value = w.at(mu.name(v));
    for (std::size_t k = 0; k < total.size(); ++k) total[k] += mu[v] * value[k];
  }
  return total;
}

ClassPartition component_partition(const SimplicialSet& K) {
  std::vector<std::size_t> parent(K.vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const Generator& e : K.generators(1)) {
    const std::size_t a = find(e.faces[0].target.index);
    const std::size_t b = find(e.faces[1].target.index);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  ClassPartition P;
  std::vector<std::size_t> block_of(K.vertex_count(), 0);
  std::vector<std::size_t> root_block(K.vertex_count(), static_cast<std::size_t>(-1));
  for (std::size_t v = 0; v < K.vertex_count(); ++v) {
    const std::size_t r = find(v);
    if (root_block[r] == static_cast<std::size_t>(-1)) {
      root_block[r] = P.blocks.size();
      P.blocks.emplace_back();
    }
    P.blocks[root_block[r]].push_back(v);
  }
  return P;
}

void check_partition(const SimplicialSet& K, const ClassPartition& P) {
  std::vector<int> seen(K.vertex_count(), 0);
  for (std::size_t b = 0; b < P.blocks.size(); ++b) {
    if (P.blocks[b].empty()) throw PartitionMismatch("class " + std::to_string(b) + " is empty");
    for (std::size_t v : P.blocks[b]) {
      if (v >= seen.size()) throw PartitionMismatch("class " + std::to_string(b) + " names a non-vertex");
      if (seen[v]++) throw PartitionMismatch("vertex '" + K.name({0, v}) + "' appears in two classes");
    }
  }
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (!seen[v]) throw PartitionMismatch("vertex '" + K.name({0, v}) + "' is in no class");
  }
}

std::vector<std::int64_t> class_mobius(const SimplicialSet& K, const ClassPartition& P) {
  check_partition(K, P);
  const MobiusTable mu = mobius_function(K);
  std::vector<std::int64_t> out;
  for (const auto& block : P.blocks) {
    std::int64_t sum = 0;
    for (std::size_t v : block) sum += mu[v];
    out.push_back(sum);
  }
  return out;
}

}  // namespace hocolim
