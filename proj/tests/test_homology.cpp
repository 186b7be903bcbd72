#include <catch_amalgamated.hpp>

#include "brute.hpp"
#include "corpus.hpp"
#include "hocolim/constructions.hpp"
#include "hocolim/homology.hpp"
#include "hocolim/random.hpp"

using namespace hocolim;

namespace {

std::vector<std::vector<std::int64_t>> rows_of(const BoundaryMatrix& m) {
  std::vector<std::vector<std::int64_t>> rows(m.rows, std::vector<std::int64_t>(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) rows[r][c] = m.at(r, c);
  }
  return rows;
}

void check_complex(const SimplicialSet& K) {
  const auto matrices = boundary_matrices(K);
  for (std::size_t k = 1; k < matrices.size(); ++k) CHECK(composes_to_zero(matrices[k - 1], matrices[k]));
  for (const BoundaryMatrix& m : matrices) CHECK(rank(m) == test_support::rational_rank(rows_of(m), m.cols));
  CHECK(euler_via_homology(K) == euler_char_combinatorial(K));
}

}  // namespace

TEST_CASE("Betti numbers") {
  CHECK(betti_numbers(boundary(3)).betti == std::vector<std::size_t>{1, 0, 1});
  CHECK(betti_numbers(product(circle(1), circle(1))).betti == std::vector<std::size_t>{1, 2, 1});
  for (std::size_t n = 0; n <= 4; ++n) {
    std::vector<std::size_t> point(n + 1, 0);
    point[0] = 1;
    CHECK(betti_numbers(standard_simplex(n)).betti == point);
  }
  CHECK(euler_via_homology(boundary(3)) == 2);
  for (std::size_t k = 1; k <= 3; ++k) CHECK(euler_via_homology(circle(k)) == 0);
  CHECK(betti_numbers(disjoint_union(circle(1), boundary(3))).betti == std::vector<std::size_t>{2, 1, 1});
}

TEST_CASE("degenerate faces contribute nothing") {
  const auto matrices = boundary_matrices(circle(1));
  REQUIRE(matrices.size() == 1);
  CHECK(matrices[0].at(0, 0) == 0);
  // a 2-cell with a degenerate face whose boundary cancels
  const auto& corpus = test_support::corpus_ssets();
  const auto pinch = std::find_if(corpus.begin(), corpus.end(), [](const auto& c) { return c.name == "corpus:pinch"; });
  REQUIRE(pinch != corpus.end());
  CHECK(betti_numbers(pinch->sset).betti == std::vector<std::size_t>{1, 0, 1});

  // collapsing one edge of a triangle leaves a disk
  SimplicialSet disk;
  const auto p = disk.add(0, "p");
  const auto q = disk.add(0, "q");
  const auto t1 = disk.add(1, "t1", {FacePointer(q), FacePointer(p)});
  const auto t2 = disk.add(1, "t2", {FacePointer(q), FacePointer(p)});
  disk.add(2, "u", {FacePointer({0}, q), FacePointer(t2), FacePointer(t1)});
  REQUIRE(validate(disk).ok());
  CHECK(betti_numbers(disk).betti == std::vector<std::size_t>{1, 0, 0});
}

TEST_CASE("exact integer rank") {
  using Row = std::vector<Integer>;
  CHECK(integer_rank({}) == 0);
  CHECK(integer_rank({Row{0, 0}, Row{0, 0}}) == 0);
  CHECK(integer_rank({Row{1, 2}, Row{2, 4}}) == 1);
  CHECK(integer_rank({Row{0, 1, 0}, Row{1, 0, 0}, Row{1, 1, 0}}) == 2);
  const Integer big = Integer(1) << 80;
  CHECK(integer_rank({Row{big, 1}, Row{big * 3, 3}}) == 1);
  CHECK(integer_rank({Row{big, 1}, Row{big * 3, 4}}) == 2);

  SplitMix64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = rng.below(7), cols = 1 + rng.below(7);
    std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols));
    std::vector<Row> as_integer(rows, Row(cols));
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        m[r][c] = rng.chance(1, 2) ? 0 : static_cast<std::int64_t>(rng.below(7)) - 3;
        as_integer[r][c] = m[r][c];
      }
    }
    CHECK(integer_rank(as_integer) == test_support::rational_rank(m, cols));
  }
}

TEST_CASE("homology agrees with counting") {
  for (const auto& [name, K] : test_support::corpus_ssets()) {
    INFO(name);
    check_complex(K);
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    INFO("seed " << seed);
    check_complex(random_sset(seed));
  }
}
