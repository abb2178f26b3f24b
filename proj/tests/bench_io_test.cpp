#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>

#include "doctest.h"
#include "flowline/bench.hpp"
#include "flowline/io.hpp"
#include "flowline/lf_solver.hpp"

using namespace flowline;
using doctest::Approx;

TEST_CASE("cr bench smoke: M=1, r=1, 3 reps") {
  const auto res = bench::bench_product(bench::ProductKind::cr, 1, 1, 1, 3, 7);
  CHECK(res.op == "cr");
  REQUIRE(res.wall_seconds.size() == 3);
  for (double w : res.wall_seconds) CHECK(w > 0.0);
  CHECK(res.median_seconds > 0.0);
  CHECK(res.flops_estimate == 16.0);
  CHECK(res.seed == 7);
}

TEST_CASE("gp bench at M=1e4 reports a cache-scale working set") {
  const auto res =
      bench::bench_product(bench::ProductKind::gp, 10000, 10, 1, 3, 11);
  CHECK(res.workset_bytes <= 1024 * 1024);  // <= 1 MB
  CHECK(res.workset_bytes >= 2 * 4 * 10000 * 8);  // input + output vectors
  CHECK(res.workers == 1);
  CHECK(res.flops_estimate == 28.0 * 10000.0);
}

TEST_CASE("bench rejects undersized repetition counts") {
  CHECK_THROWS_AS(bench::bench_product(bench::ProductKind::gp, 4, 1, 1, 2, 1),
                  DomainError);
  CHECK_THROWS_AS(bench::bench_product(bench::ProductKind::cr, 0, 1, 1, 3, 1),
                  DomainError);
}

TEST_CASE("bench medians are soft-reproducible across runs") {
  const auto a =
      bench::bench_product(bench::ProductKind::cr, 2000, 10, 1, 5, 3);
  const auto b =
      bench::bench_product(bench::ProductKind::cr, 2000, 10, 1, 5, 3);
  const double ratio = a.median_seconds / b.median_seconds;
  const bool stable = ratio >= 0.5 && ratio <= 2.0;
  WARN_MESSAGE(stable, "timing drift across identical benches: ratio = ",
               ratio);
}

TEST_CASE("degenerate race at r=1 costs about the same on both sides") {
  bench::RaceScenario sc;
  sc.m_trajectories = 10;
  sc.r = 1;
  sc.n_segments = 200;  // 2001 nodes
  sc.duration_s = 20.0;
  sc.repetitions = 3;
  const auto race = bench::race_two_methods(sc);
  CHECK(race.time_ratio >= 0.5);
  CHECK(race.time_ratio <= 2.0);
}

TEST_CASE("race scenario validation") {
  bench::RaceScenario sc;
  sc.repetitions = 2;
  CHECK_THROWS_AS(bench::race_two_methods(sc), DomainError);
  bench::RaceScenario sc2;
  sc2.v_max = 0.0;
  CHECK_THROWS_AS(bench::race_two_methods(sc2), DomainError);
}

TEST_CASE("17-digit formatting round-trips doubles exactly") {
  for (double x : {1.0 / 3.0, 0.1, 6.02214076e23, -2.2250738585072014e-308,
                   0.0, 3.141592653589793}) {
    const std::string s = io::fmt_g17(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
}

TEST_CASE("solution CSV carries the exact header and one row per node") {
  const ScalarField1D u0({0.0, 0.5, 3}, {1.0, 2.0, 1.0});
  const auto hist = lf::run(u0, {0.25, 2, 1.0}, lf::Equation::advection(0.0), 2);
  std::ostringstream os;
  io::write_solution_csv(os, hist);
  const std::string text = os.str();
  CHECK(text.rfind("step,node,x,value\n", 0) == 0);
  std::size_t rows = 0;
  for (char ch : text)
    if (ch == '\n') ++rows;
  CHECK(rows == 1 + 2 * 3);  // header + 2 stored levels x 3 nodes
}

TEST_CASE("bench CSV carries the exact header and per-rep rows") {
  const auto res = bench::bench_product(bench::ProductKind::cr, 4, 2, 1, 3, 5);
  std::ostringstream os;
  io::write_bench_csv(os, std::span<const bench::BenchResult>(&res, 1));
  const std::string text = os.str();
  CHECK(text.rfind(
            "op,M,N_segments,r,workers,rep,wall_seconds,flops_est,workset_bytes\n",
            0) == 0);
  std::size_t rows = 0;
  for (char ch : text)
    if (ch == '\n') ++rows;
  CHECK(rows == 4);  // header + 3 reps
}

TEST_CASE("trajectory CSV has the nine-column header with zero padding") {
  const streamline::VelocitySampler uniform =
      [](const streamline::Vec3&) -> streamline::Vec3 {
    return {1.0, 0.0, 0.0};
  };
  const std::vector<streamline::Vec3> seeds{{0.0, 0.0, 0.0}};
  const auto set = streamline::trace_pathlines(uniform, seeds, 1, 1.0, 2);
  std::ostringstream os;
  io::write_streamlines_csv(os, set);
  const std::string text = os.str();
  CHECK(text.rfind("traj,point,t_param,x,y,z,vx,vy,vz\n", 0) == 0);
  CHECK(text.find("0,1,1,1,0,0,1,0,0\n") != std::string::npos);
}
