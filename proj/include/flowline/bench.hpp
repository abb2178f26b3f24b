#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "flowline/errors.hpp"

namespace flowline::bench {

struct BenchResult {
  std::string op;
  std::size_t m = 0;
  std::size_t n_segments = 1;
  std::size_t r = 0;
  std::size_t workers = 1;
  std::size_t repetitions = 0;
  std::uint64_t seed = 0;
  std::vector<double> wall_seconds;  // one entry per repetition
  double median_seconds = 0.0;
  double flops_estimate = 0.0;
  std::size_t workset_bytes = 0;
};

enum class ProductKind { gp, cr };

// Times one structured product on randomized inputs (recorded seed), median
// over repetitions with a warm-up round excluded. Every repetition's output
// goes through an oracle check; failing repetitions are discarded. workers
// applies to the row-partitioned cr product only.
BenchResult bench_product(ProductKind kind, std::size_t m, std::size_t r,
                          std::size_t workers, std::size_t repetitions,
                          std::uint64_t seed);

struct RaceScenario {
  double length_cm = 100.0;   // cylinder length L
  double v_max = 10.0;        // cm/s
  std::size_t m_trajectories = 1000;
  std::size_t r = 10;
  double duration_s = 10.0;
  std::size_t n_segments = 100;  // coarse grid is h = L / (10 * n_segments)
  std::size_t repetitions = 3;
  double cfl_constant = 2.0 / 3.0;  // convex-stability regime for long runs

  void validate() const;
};

struct RaceResult {
  BenchResult fine_lf;              // method A: LF at h_coarse / r
  BenchResult coarse_plus_densify;  // method B: coarse LF + densify(r)
  double time_ratio = 0.0;          // fine median / coarse median
};

// The two-method race at matched effective trajectory resolution
// (N_segments*r + 1 points per trajectory on both sides).
RaceResult race_two_methods(const RaceScenario& scenario);

}  // namespace flowline::bench
