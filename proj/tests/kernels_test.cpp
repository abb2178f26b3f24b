#include <cmath>
#include <cstring>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "flowline/kernels.hpp"

using namespace flowline;

namespace {

std::vector<double> random_values(std::mt19937_64& rng, std::size_t n,
                                  double lo = -10.0, double hi = 10.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  return std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("scalar backend is always available and selectable") {
  CHECK(kernels::available(kernels::Backend::scalar));
  const auto before = kernels::active_backend();
  kernels::set_backend(kernels::Backend::scalar);
  CHECK(kernels::active_backend() == kernels::Backend::scalar);
  kernels::set_backend(before);
}

TEST_CASE("simd variants match the scalar reference bitwise") {
  if (!kernels::available(kernels::Backend::avx2)) {
    MESSAGE("avx2 unavailable on this host; scalar-only");
    return;
  }
  const auto& sca = kernels::table(kernels::Backend::scalar);
  const auto& vec = kernels::table(kernels::Backend::avx2);
  std::mt19937_64 rng(20240917);

  SUBCASE("lf stencils, all sizes including tails") {
    for (std::size_t n = 3; n <= 40; ++n) {
      const auto u = random_values(rng, n);
      std::vector<double> a(n, 0.0), b(n, 0.0);
      sca.lf_advection_interior(a.data(), u.data(), n, 0.37);
      vec.lf_advection_interior(b.data(), u.data(), n, 0.37);
      REQUIRE(bitwise_equal(a, b));
      sca.lf_burgers_interior(a.data(), u.data(), n, 0.11);
      vec.lf_burgers_interior(b.data(), u.data(), n, 0.11);
      REQUIRE(bitwise_equal(a, b));
    }
    const std::size_t n = 1000;
    const auto u = random_values(rng, n);
    std::vector<double> a(n, 0.0), b(n, 0.0);
    sca.lf_advection_interior(a.data(), u.data(), n, -0.25);
    vec.lf_advection_interior(b.data(), u.data(), n, -0.25);
    REQUIRE(bitwise_equal(a, b));
  }

  SUBCASE("hermite block product, all tail shapes") {
    for (std::size_t m : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 64u, 1000u}) {
      const auto p = random_values(rng, 4 * m);
      std::vector<double> a(4 * m), b(4 * m);
      sca.hermite_blocks(a.data(), p.data(), m);
      vec.hermite_blocks(b.data(), p.data(), m);
      REQUIRE(bitwise_equal(a, b));
    }
  }

  SUBCASE("cubic row evaluation, all tick-count tails") {
    for (std::size_t m : {1u, 3u, 17u})
      for (std::size_t k = 1; k <= 13; ++k) {
        const auto coeffs = random_values(rng, 4 * m);
        auto ticks = random_values(rng, 4 * k, 0.0, 1.0);
        std::vector<double> a(m * k), b(m * k);
        sca.cubic_eval_rows(a.data(), coeffs.data(), m, ticks.data(), k);
        vec.cubic_eval_rows(b.data(), coeffs.data(), m, ticks.data(), k);
        REQUIRE(bitwise_equal(a, b));
      }
  }

  SUBCASE("max abs reduction") {
    for (std::size_t n = 0; n <= 40; ++n) {
      const auto x = random_values(rng, n, -100.0, 100.0);
      REQUIRE(sca.max_abs(x.data(), n) == vec.max_abs(x.data(), n));
    }
  }
}

TEST_CASE("requesting an unavailable backend throws") {
  if (kernels::available(kernels::Backend::avx2)) return;
  CHECK_THROWS_AS(kernels::set_backend(kernels::Backend::avx2),
                  std::invalid_argument);
  CHECK_THROWS_AS(kernels::table(kernels::Backend::avx2),
                  std::invalid_argument);
}
