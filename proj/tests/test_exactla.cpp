#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "versal/errors.hpp"

using namespace versal;

namespace {

ScalarMatrix randomMatrix(std::size_t rows, std::size_t cols, std::mt19937& rng, int range = 4) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 3);
  ScalarMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      Scalar q(num(rng), den(rng));
      q.canonicalize();
      m(r, c) = q;
    }
  return m;
}

// Product of random rows x k and k x cols factors: rank at most k.
ScalarMatrix lowRank(std::size_t rows, std::size_t cols, std::size_t k, std::mt19937& rng) {
  return randomMatrix(rows, k, rng) * randomMatrix(k, cols, rng);
}

}  // namespace

TEST_CASE("rref of a small matrix") {
  ScalarMatrix m{{2, 4, 2}, {1, 2, 3}, {0, 0, 1}};
  RowEchelon e = rref(m);
  CHECK(e.pivotColumns == std::vector<std::size_t>{0, 2});
  CHECK(e.reduced == ScalarMatrix{{1, 2, 0}, {0, 0, 1}, {0, 0, 0}});
}

TEST_CASE("rank, kernel and solve on fixed data") {
  ScalarMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(m) == 2);
  ScalarMatrix k = kernelBasis(m);
  REQUIRE(k.cols() == 1);
  CHECK((m * k).isZero());
  CHECK(k(2, 0) == 1);

  auto x = solve(m, {Scalar(6), Scalar(12), Scalar(2)});
  REQUIRE(x.has_value());
  CHECK(m * *x == std::vector<Scalar>{6, 12, 2});
  CHECK_FALSE(solve(m, {Scalar(1), Scalar(1), Scalar(0)}).has_value());
  CHECK_THROWS_AS(solve(m, {Scalar(1)}), DimensionError);
}

TEST_CASE("rational entries") {
  ScalarMatrix m(2, 2);
  m(0, 0) = Scalar(1, 2);
  m(0, 1) = Scalar(1, 3);
  m(1, 0) = Scalar(3, 4);
  m(1, 1) = Scalar(1, 2);
  CHECK(rank(m) == 1);
  ScalarMatrix k = kernelBasis(m);
  REQUIRE(k.cols() == 1);
  CHECK((m * k).isZero());
}

TEST_CASE("empty shapes") {
  CHECK(rank(ScalarMatrix(0, 3)) == 0);
  CHECK(kernelBasis(ScalarMatrix(0, 3)).cols() == 3);
  CHECK(kernelBasis(ScalarMatrix(2, 0)).cols() == 0);
  CHECK(complementColumns(ScalarMatrix(3, 0), ScalarMatrix::identity(3)).size() == 3);
}

TEST_CASE("complement columns extend a span in order") {
  ScalarMatrix base{{1}, {0}, {0}};
  ScalarMatrix cand{{1, 1, 0, 2}, {0, 1, 1, 2}, {0, 0, 0, 0}};
  CHECK(complementColumns(base, cand) == std::vector<std::size_t>{1});
  ScalarMatrix cand2{{0, 0}, {0, 0}, {1, 5}};
  CHECK(complementColumns(base, cand2) == std::vector<std::size_t>{0});
}

TEST_CASE("property: rank agrees with naive elimination; kernels are exact") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t rows = dim(rng), cols = dim(rng);
    std::size_t k = std::uniform_int_distribution<std::size_t>(0, std::min(rows, cols))(rng);
    ScalarMatrix m = trial % 2 ? randomMatrix(rows, cols, rng) : lowRank(rows, cols, k, rng);
    std::size_t r = rank(m);
    CHECK(r == oracle::naiveRank(m));
    ScalarMatrix ker = kernelBasis(m);
    CHECK(ker.cols() == cols - r);
    CHECK((m * ker).isZero());
    CHECK(oracle::naiveRank(ker) == ker.cols());
    // rref rows span the same row space
    RowEchelon e = rref(m);
    CHECK(e.pivotColumns.size() == r);
    for (std::size_t i = 0; i < r; ++i) CHECK(e.reduced(i, e.pivotColumns[i]) == 1);
  }
}

TEST_CASE("property: solve finds solutions exactly when they exist") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    ScalarMatrix m = lowRank(5, 4, 2, rng);
    ScalarMatrix x = randomMatrix(4, 1, rng);
    std::vector<Scalar> b = m * x.column(0);
    auto sol = solve(m, b);
    REQUIRE(sol.has_value());
    CHECK(m * *sol == b);
    // perturb outside the column space: rank check decides consistency
    std::vector<Scalar> c = b;
    c[trial % 5] += 1;
    ScalarMatrix aug(5, 5);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 4; ++j) aug(i, j) = m(i, j);
      aug(i, 4) = c[i];
    }
    bool consistent = oracle::naiveRank(aug) == oracle::naiveRank(m);
    CHECK(solve(m, c).has_value() == consistent);
  }
}

TEST_CASE("property: complement columns complete the span") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    ScalarMatrix base = lowRank(6, 3, 2, rng);
    ScalarMatrix cand = lowRank(6, 5, 3, rng);
    auto keep = complementColumns(base, cand);
    ScalarMatrix all(6, 8), chosen(6, 3 + keep.size());
    for (std::size_t r = 0; r < 6; ++r) {
      for (std::size_t c = 0; c < 3; ++c) all(r, c) = chosen(r, c) = base(r, c);
      for (std::size_t c = 0; c < 5; ++c) all(r, 3 + c) = cand(r, c);
      for (std::size_t c = 0; c < keep.size(); ++c) chosen(r, 3 + c) = cand(r, keep[c]);
    }
    CHECK(oracle::naiveRank(chosen) == oracle::naiveRank(all));
    CHECK(oracle::naiveRank(all) - oracle::naiveRank(base) == keep.size());
  }
}
