#include "hocolim/homology.hpp"

#include <stdexcept>

namespace hocolim {

std::vector<BoundaryMatrix> boundary_matrices(const SimplicialSet& K) {
  std::vector<BoundaryMatrix> out;
  for (std::size_t n = 1; n < K.num_dimensions(); ++n) {
    BoundaryMatrix m;
    m.dimension = n;
    m.rows = K.count(n - 1);
    m.cols = K.count(n);
    m.entries.assign(m.rows * m.cols, 0);
    for (SimplexId sigma : K.ids(n)) {
      const auto& faces = K[sigma].faces;
      for (std::size_t i = 0; i < faces.size(); ++i) {
        if (faces[i].degenerate()) continue;
        m.at(faces[i].target.index, sigma.index) += (i % 2 == 0) ? 1 : -1;
      }
    }
    if (!out.empty() && !composes_to_zero(out.back(), m)) {
      throw std::logic_error("boundary of boundary is nonzero in dimension " + std::to_string(n));
    }
    out.push_back(std::move(m));
  }
  return out;
}

bool composes_to_zero(const BoundaryMatrix& lower, const BoundaryMatrix& upper) {
  if (lower.cols != upper.rows) return false;
  for (std::size_t r = 0; r < lower.rows; ++r) {
    for (std::size_t c = 0; c < upper.cols; ++c) {
      std::int64_t sum = 0;
      for (std::size_t k = 0; k < lower.cols; ++k) sum += lower.at(r, k) * upper.at(k, c);
      if (sum != 0) return false;
    }
  }
  return true;
}

std::size_t integer_rank(std::vector<std::vector<Integer>> M) {
  const std::size_t rows = M.size();
  const std::size_t cols = rows == 0 ? 0 : M[0].size();
  std::size_t rank = 0;
  Integer previous = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && M[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(M[pivot], M[rank]);
    const Integer& p = M[rank][col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Integer factor = M[r][col];
      for (std::size_t c = col + 1; c < cols; ++c) {
        // Exact: every intermediate entry is a minor of the input.
        M[r][c] = (M[r][c] * p - factor * M[rank][c]) / previous;
      }
      M[r][col] = 0;
    }
    previous = p;
    ++rank;
  }
  return rank;
}

std::size_t rank(const BoundaryMatrix& m) {
  std::vector<std::vector<Integer>> rows(m.rows, std::vector<Integer>(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) rows[r][c] = m.at(r, c);
  }
  return integer_rank(std::move(rows));
}

std::int64_t BettiProfile::euler() const {
  std::int64_t chi = 0;
  for (std::size_t n = 0; n < betti.size(); ++n) {
    const auto b = static_cast<std::int64_t>(betti[n]);
    chi += n % 2 == 0 ? b : -b;
  }
  return chi;
}

BettiProfile betti_numbers(const SimplicialSet& K) {
  const auto matrices = boundary_matrices(K);
  // ranks[n] = rank ∂ₙ, with ∂₀ = 0 and ∂_{d+1} = 0.
  std::vector<std::size_t> ranks(K.num_dimensions() + 1, 0);
  for (const BoundaryMatrix& m : matrices) ranks[m.dimension] = rank(m);
  BettiProfile profile;
  for (std::size_t n = 0; n < K.num_dimensions(); ++n) {
    profile.betti.push_back(K.count(n) - ranks[n] - ranks[n + 1]);
  }
  return profile;
}

std::int64_t euler_via_homology(const SimplicialSet& K) { return betti_numbers(K).euler(); }

}  // namespace hocolim
