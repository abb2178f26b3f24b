#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "flowline/hermite.hpp"

using namespace flowline;
using namespace flowline::hermite;
using doctest::Approx;

namespace {

std::vector<double> random_values(std::mt19937_64& rng, std::size_t n,
                                  double lo = -10.0, double hi = 10.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

// Horner evaluation, the independent oracle for the C*R product.
double horner(const HermiteCubic& c, double t) {
  return ((c.a * t + c.b) * t + c.c) * t + c.d;
}

}  // namespace

TEST_CASE("basis matrix T is the exact constant") {
  const auto t = basis_matrix_t();
  const Matrix4 expect{{{2.0, -2.0, 1.0, 1.0},
                        {-3.0, 3.0, -2.0, -1.0},
                        {0.0, 0.0, 1.0, 0.0},
                        {1.0, 0.0, 0.0, 0.0}}};
  CHECK(t == expect);
  CHECK(t[2] == std::array<double, 4>{0.0, 0.0, 1.0, 0.0});
}

TEST_CASE("coefficients: hand-checked cases") {
  SUBCASE("zero in, zero out") {
    const auto c = coefficients({0.0, 0.0, 0.0, 0.0});
    CHECK((c.a == 0.0 && c.b == 0.0 && c.c == 0.0 && c.d == 0.0));
  }
  SUBCASE("constant curve") {
    const auto c = coefficients({1.0, 1.0, 0.0, 0.0});
    CHECK((c.a == 0.0 && c.b == 0.0 && c.c == 0.0 && c.d == 1.0));
  }
  SUBCASE("straight line s(t) = t") {
    const auto c = coefficients({0.0, 1.0, 1.0, 1.0});
    CHECK((c.a == 0.0 && c.b == 0.0 && c.c == 1.0 && c.d == 0.0));
  }
  SUBCASE("non-finite input rejected") {
    CHECK_THROWS_AS(
        coefficients({std::numeric_limits<double>::quiet_NaN(), 0, 0, 0}),
        DomainError);
  }
}

TEST_CASE("interpolation conditions hold for random segments") {
  std::mt19937_64 rng(321);
  std::uniform_real_distribution<double> dist(-100.0, 100.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const SegmentData seg{dist(rng), dist(rng), dist(rng), dist(rng)};
    const auto c = coefficients(seg);
    const double scale = std::max(
        {1.0, std::fabs(seg.p1), std::fabs(seg.p2), std::fabs(seg.v1),
         std::fabs(seg.v2)});
    CHECK(std::fabs(c.value(0.0) - seg.p1) <= 1e-12 * scale);
    CHECK(std::fabs(c.value(1.0) - seg.p2) <= 1e-12 * scale);
    CHECK(std::fabs(c.derivative(0.0) - seg.v1) <= 1e-12 * scale);
    CHECK(std::fabs(c.derivative(1.0) - seg.v2) <= 1e-12 * scale);
  }
}

TEST_CASE("block-diagonal basis G") {
  CHECK_THROWS_AS(BlockDiagonalBasis(0), DomainError);

  SUBCASE("M = 1 dense form equals T") {
    const BlockDiagonalBasis g(1);
    const auto dense = g.to_dense();
    const auto t = basis_matrix_t();
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) CHECK(dense[r][c] == t[r][c]);
  }
  SUBCASE("density is exactly 1/M") {
    CHECK(BlockDiagonalBasis(100).density() == 0.01);
    for (std::size_t m : {1u, 7u, 64u, 10000u})
      CHECK(BlockDiagonalBasis(m).density() ==
            1.0 / static_cast<double>(m));
  }
  SUBCASE("shared-structure storage stays cache-sized at M = 1e4") {
    const BlockDiagonalBasis g(10000);
    CHECK(g.stored_bytes() <= 1024);
    CHECK(g.nonzero_count() == 160000);
    CHECK(g.dense_entry_count() == 1600000000ull);
    CHECK(g.dense_entry_count() >= 1000000000ull);
  }
  SUBCASE("dense form is refused above test sizes") {
    CHECK_NOTHROW(BlockDiagonalBasis(64).to_dense());
    CHECK_THROWS_AS(BlockDiagonalBasis(65).to_dense(), DomainError);
  }
}

TEST_CASE("Gp product") {
  SUBCASE("single block reproduces the straight line") {
    const BlockDiagonalBasis g(1);
    const auto out = batch_coefficients(g, std::vector<double>{0, 1, 1, 1});
    CHECK(out == std::vector<double>{0.0, 0.0, 1.0, 0.0});
  }
  SUBCASE("zero vector maps to zero") {
    const BlockDiagonalBasis g(37);
    const auto out = batch_coefficients(g, std::vector<double>(148, 0.0));
    for (double x : out) CHECK(x == 0.0);
  }
  SUBCASE("length mismatch rejected") {
    const BlockDiagonalBasis g(4);
    CHECK_THROWS_AS(batch_coefficients(g, std::vector<double>(15)),
                    DomainError);
  }
  SUBCASE("per-block equality with the per-segment solve is exact") {
    std::mt19937_64 rng(99);
    for (std::size_t m : {1u, 7u, 64u, 1000u}) {
      const BlockDiagonalBasis g(m);
      const auto p = random_values(rng, 4 * m);
      const auto out = batch_coefficients(g, p);
      for (std::size_t i = 0; i < m; ++i) {
        const auto c =
            coefficients({p[4 * i], p[4 * i + 1], p[4 * i + 2], p[4 * i + 3]});
        CHECK(out[4 * i + 0] == c.a);
        CHECK(out[4 * i + 1] == c.b);
        CHECK(out[4 * i + 2] == c.c);
        CHECK(out[4 * i + 3] == c.d);
      }
    }
  }
  SUBCASE("matches the dense matvec at verification sizes") {
    std::mt19937_64 rng(17);
    const std::size_t m = 13;
    const BlockDiagonalBasis g(m);
    const auto p = random_values(rng, 4 * m);
    const auto out = batch_coefficients(g, p);
    const auto dense = g.to_dense();
    for (std::size_t r = 0; r < 4 * m; ++r) {
      double acc = 0.0;
      for (std::size_t c = 0; c < 4 * m; ++c) acc += dense[r][c] * p[c];
      CHECK(out[r] == Approx(acc).epsilon(1e-12));
    }
  }
  SUBCASE("linearity") {
    std::mt19937_64 rng(5);
    const std::size_t m = 33;
    const BlockDiagonalBasis g(m);
    const auto p = random_values(rng, 4 * m);
    const auto q = random_values(rng, 4 * m);
    const double alpha = 0.7, beta = -1.9;
    std::vector<double> mix(4 * m);
    for (std::size_t i = 0; i < 4 * m; ++i)
      mix[i] = alpha * p[i] + beta * q[i];
    const auto lhs = batch_coefficients(g, mix);
    const auto gp = batch_coefficients(g, p);
    const auto gq = batch_coefficients(g, q);
    for (std::size_t i = 0; i < 4 * m; ++i) {
      const double rhs = alpha * gp[i] + beta * gq[i];
      CHECK(lhs[i] == Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("generic block-diagonal storage matches the shared structure") {
  std::mt19937_64 rng(2024);
  const std::size_t m = 250;
  const BlockDiagonalBasis g(m);
  const auto generic = GenericBlockDiagonal::replicate(g);
  const auto p = random_values(rng, 4 * m);
  const auto a = batch_coefficients(g, p);
  const auto b = generic.multiply(p);
  REQUIRE(a.size() == b.size());
  CHECK(std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
  CHECK(generic.stored_bytes() > g.stored_bytes());
  CHECK(generic.stored_bytes() >= 16 * m * sizeof(double));
}

TEST_CASE("evaluation grid R") {
  CHECK_THROWS_AS(EvaluationGrid(0), DomainError);

  SUBCASE("r = 1: the two endpoint columns") {
    const EvaluationGrid g(1);
    CHECK(g.column(0) == std::array<double, 4>{0.0, 0.0, 0.0, 1.0});
    CHECK(g.column(1) == std::array<double, 4>{1.0, 1.0, 1.0, 1.0});
  }
  SUBCASE("r = 2: middle column is the powers of 1/2") {
    const EvaluationGrid g(2);
    CHECK(g.column(1) == std::array<double, 4>{0.125, 0.25, 0.5, 1.0});
  }
  SUBCASE("r = 10: eleven columns, last one all ones") {
    const EvaluationGrid g(10);
    CHECK(g.n_columns() == 11);
    CHECK(g.column(10) == std::array<double, 4>{1.0, 1.0, 1.0, 1.0});
    for (std::size_t k = 0; k <= 10; ++k)
      CHECK(g.column(k)[3] == 1.0);  // last row all ones
  }
}

TEST_CASE("batch evaluation C*R") {
  SUBCASE("the line cubic lands on the ticks") {
    const HermiteBatch batch(1, {0.0, 0.0, 1.0, 0.0});
    const auto table = evaluate_batch(batch, EvaluationGrid(4));
    REQUIRE(table.cols == 5);
    const double expect[5] = {0.0, 0.25, 0.5, 0.75, 1.0};
    for (std::size_t k = 0; k < 5; ++k) CHECK(table.at(0, k) == expect[k]);
  }
  SUBCASE("zero batch gives the zero table") {
    const HermiteBatch batch(3, std::vector<double>(12, 0.0));
    const auto table = evaluate_batch(batch, EvaluationGrid(5));
    for (double x : table.values) CHECK(x == 0.0);
  }
  SUBCASE("matches the Horner oracle within 1e-12") {
    std::mt19937_64 rng(11);
    const std::size_t m = 1000;
    const HermiteBatch batch(m, random_values(rng, 4 * m, -1.0, 1.0));
    const EvaluationGrid grid(10);
    const auto table = evaluate_batch(batch, grid);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k <= 10; ++k)
        CHECK(std::fabs(table.at(i, k) - horner(batch.cubic(i), grid.tick(k))) <=
              1e-12);
  }
  SUBCASE("rows reproduce their segment endpoints") {
    std::mt19937_64 rng(13);
    const std::size_t m = 40;
    const BlockDiagonalBasis g(m);
    const auto p = random_values(rng, 4 * m);
    const auto batch = HermiteBatch::from_packed(batch_coefficients(g, p));
    const auto table = evaluate_batch(batch, EvaluationGrid(3));
    for (std::size_t i = 0; i < m; ++i) {
      const double scale =
          std::max({1.0, std::fabs(p[4 * i]), std::fabs(p[4 * i + 1])});
      CHECK(std::fabs(table.at(i, 0) - p[4 * i]) <= 1e-12 * scale);
      CHECK(std::fabs(table.at(i, 3) - p[4 * i + 1]) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("row-partitioned evaluation is bitwise deterministic in p") {
  std::mt19937_64 rng(23);

  SUBCASE("p = 1 equals evaluate_batch by construction") {
    const HermiteBatch batch(6, random_values(rng, 24));
    const EvaluationGrid grid(7);
    const auto a = evaluate_batch(batch, grid);
    const auto b = evaluate_batch_partitioned(batch, grid, 1);
    CHECK(a.values == b.values);
  }
  SUBCASE("M = 8, p = 4 equals p = 1 bitwise") {
    const HermiteBatch batch(8, random_values(rng, 32));
    const EvaluationGrid grid(5);
    const auto a = evaluate_batch_partitioned(batch, grid, 1);
    const auto b = evaluate_batch_partitioned(batch, grid, 4);
    CHECK(std::memcmp(a.values.data(), b.values.data(),
                      a.values.size() * sizeof(double)) == 0);
  }
  SUBCASE("M = 1000, workers in {1,2,4} all agree bitwise") {
    const std::size_t m = 1000;
    const HermiteBatch batch(m, random_values(rng, 4 * m));
    const EvaluationGrid grid(10);
    const auto base = evaluate_batch_partitioned(batch, grid, 1);
    for (std::size_t workers : {2u, 4u}) {
      const auto out = evaluate_batch_partitioned(batch, grid, workers);
      REQUIRE(std::memcmp(base.values.data(), out.values.data(),
                          base.values.size() * sizeof(double)) == 0);
    }
  }
  SUBCASE("mod(M, p) = 0 is required") {
    const HermiteBatch batch(6, random_values(rng, 24));
    const EvaluationGrid grid(2);
    CHECK_THROWS_AS(evaluate_batch_partitioned(batch, grid, 4), DomainError);
    CHECK_THROWS_AS(evaluate_batch_partitioned(batch, grid, 0), DomainError);
  }
}

TEST_CASE("batch construction guards") {
  CHECK_THROWS_AS(HermiteBatch(3, std::vector<double>(11)), DomainError);
  CHECK_THROWS_AS(HermiteBatch(0, {}), DomainError);
  CHECK_THROWS_AS(HermiteBatch::from_packed(std::vector<double>(6)),
                  DomainError);
}
