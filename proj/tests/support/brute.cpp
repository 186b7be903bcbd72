#include "brute.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace test_support {

using namespace hocolim;

std::vector<int> act_on_vertices(const std::vector<OperatorSymbol>& word, std::size_t n) {
  std::vector<int> v;
  for (std::size_t k = 0; k <= n; ++k) v.push_back(static_cast<int>(k));
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (it->index >= v.size()) return {};
    if (it->kind == OperatorSymbol::Kind::face) {
      if (v.size() == 1) return {};
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(it->index));
    } else {
      v.insert(v.begin() + static_cast<std::ptrdiff_t>(it->index), v[it->index]);
    }
  }
  return v;
}

namespace {

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

std::vector<std::uint64_t> product_counts(const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
  if (x.empty() || y.empty()) return {};
  const std::size_t top = (x.size() - 1) + (y.size() - 1);
  std::vector<std::uint64_t> out(top + 1, 0);
  for (std::size_t d = 0; d <= top; ++d) {
    for (std::size_t p = 0; p < x.size() && p <= d; ++p) {
      for (std::size_t q = 0; q < y.size() && q <= d; ++q) {
        if (p + q < d) continue;
        const std::uint64_t ways = factorial(d) / (factorial(d - p) * factorial(d - q) * factorial(p + q - d));
        out[d] += ways * x[p] * y[q];
      }
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::size_t rational_rank(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
  using Q = boost::multiprecision::cpp_rational;
  std::vector<std::vector<Q>> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Q factor = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::size_t> chain_counts(const FiniteCategory& C) {
  std::vector<std::size_t> counts{C.object_count()};
  std::vector<std::vector<std::size_t>> chains;
  for (std::size_t m : C.nonidentity_morphisms()) chains.push_back({m});
  while (!chains.empty()) {
    counts.push_back(chains.size());
    std::vector<std::vector<std::size_t>> longer;
    for (const auto& chain : chains) {
      for (std::size_t m : C.nonidentity_morphisms()) {
        if (C.morphism(m).source != C.morphism(chain.back()).target) continue;
        auto next = chain;
        next.push_back(m);
        longer.push_back(std::move(next));
      }
    }
    chains = std::move(longer);
  }
  return counts;
}

std::map<std::string, std::int64_t> mobius_by_last_faces(const SimplicialSet& K) {
  std::map<std::string, std::int64_t> mu;
  for (const Generator& v : K.generators(0)) mu[v.name] = 0;
  for (SimplexId id : K.ids()) {
    FacePointer fp(id);
    while (fp.dimension() > 0) fp = face_of(fp.dimension(), fp, K);
    mu[K.name(fp.target)] += id.dim % 2 == 0 ? 1 : -1;
  }
  return mu;
}

}  // namespace test_support
