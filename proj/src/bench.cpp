#include "flowline/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "flowline/cost_model.hpp"
#include "flowline/hermite.hpp"
#include "flowline/lf_solver.hpp"
#include "flowline/streamline.hpp"

namespace flowline::bench {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> out(n);
  for (double& x : out) x = dist(rng);
  return out;
}

bool gp_oracle_ok(const std::vector<double>& p, const std::vector<double>& out,
                  std::size_t m, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  const std::size_t samples = std::min<std::size_t>(8, m);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t i = pick(rng);
    const hermite::SegmentData seg{p[4 * i], p[4 * i + 1], p[4 * i + 2],
                                   p[4 * i + 3]};
    const auto c = hermite::coefficients(seg);
    if (out[4 * i] != c.a || out[4 * i + 1] != c.b || out[4 * i + 2] != c.c ||
        out[4 * i + 3] != c.d)
      return false;
  }
  return true;
}

bool cr_oracle_ok(const hermite::HermiteBatch& batch,
                  const hermite::EvaluationGrid& grid,
                  const hermite::DenseTable& out, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick_row(0,
                                                      batch.trajectories() - 1);
  std::uniform_int_distribution<std::size_t> pick_col(0, grid.n_columns() - 1);
  for (std::size_t s = 0; s < 8; ++s) {
    const std::size_t i = pick_row(rng);
    const std::size_t k = pick_col(rng);
    const double horner = batch.cubic(i).value(grid.tick(k));
    if (std::fabs(out.at(i, k) - horner) >
        1e-12 * std::max(1.0, std::fabs(horner)))
      return false;
  }
  return true;
}

BenchResult run_product_bench(ProductKind kind, std::size_t m, std::size_t r,
                              std::size_t workers, std::mt19937_64& rng,
                              BenchResult res) {
  const std::size_t repetitions = res.repetitions;
  if (kind == ProductKind::gp) {
    res.op = "gp";
    res.workers = 1;  // the Gp product is a single sequential pass
    const hermite::BlockDiagonalBasis basis(m);
    const auto p = random_vector(rng, 4 * m);
    res.flops_estimate = model::spline_flops_estimate(
        m, 1, r, model::SplineCost::coefficients_sparse);
    res.workset_bytes = 2 * p.size() * sizeof(double) + basis.stored_bytes();

    auto warm = hermite::batch_coefficients(basis, p);  // excluded warm-up
    if (!gp_oracle_ok(p, warm, m, rng))
      throw std::runtime_error("gp bench warm-up failed the oracle check");

    std::size_t attempts = 0;
    while (res.wall_seconds.size() < repetitions &&
           attempts < 2 * repetitions + 4) {
      ++attempts;
      const auto t0 = Clock::now();
      const auto out = hermite::batch_coefficients(basis, p);
      const double dt = seconds_since(t0);
      if (gp_oracle_ok(p, out, m, rng)) res.wall_seconds.push_back(dt);
    }
  } else {
    res.op = "cr";
    res.workers = workers;
    const hermite::HermiteBatch batch(m, random_vector(rng, 4 * m));
    const hermite::EvaluationGrid grid(r);
    res.flops_estimate =
        model::spline_flops_estimate(m, 1, r, model::SplineCost::evaluation);
    res.workset_bytes =
        (4 * m + 4 * grid.n_columns() + m * grid.n_columns()) * sizeof(double);

    auto warm = hermite::evaluate_batch_partitioned(batch, grid, workers);
    if (!cr_oracle_ok(batch, grid, warm, rng))
      throw std::runtime_error("cr bench warm-up failed the oracle check");

    std::size_t attempts = 0;
    while (res.wall_seconds.size() < repetitions &&
           attempts < 2 * repetitions + 4) {
      ++attempts;
      const auto t0 = Clock::now();
      const auto out = hermite::evaluate_batch_partitioned(batch, grid, workers);
      const double dt = seconds_since(t0);
      if (cr_oracle_ok(batch, grid, out, rng)) res.wall_seconds.push_back(dt);
    }
  }

  if (res.wall_seconds.size() < repetitions)
    throw std::runtime_error("bench repetitions kept failing the oracle check");
  res.median_seconds = median(res.wall_seconds);
  return res;
}

}  // namespace

BenchResult bench_product(ProductKind kind, std::size_t m, std::size_t r,
                          std::size_t workers, std::size_t repetitions,
                          std::uint64_t seed) {
  if (m == 0 || r == 0) throw DomainError("bench needs M >= 1 and r >= 1");
  if (workers == 0) throw DomainError("bench needs workers >= 1");
  if (repetitions < 3) throw DomainError("bench needs repetitions >= 3");

  std::mt19937_64 rng(seed);
  BenchResult res;
  res.m = m;
  res.n_segments = 1;
  res.r = r;
  res.repetitions = repetitions;
  res.seed = seed;

  try {
    return run_product_bench(kind, m, r, workers, rng, std::move(res));
  } catch (const std::bad_alloc&) {
    throw std::runtime_error("bench allocation failed for M=" +
                             std::to_string(m) + ", r=" + std::to_string(r));
  }
}

void RaceScenario::validate() const {
  if (!(length_cm > 0.0) || !(v_max > 0.0) || !(duration_s > 0.0))
    throw DomainError("race scenario needs positive length, speed, duration");
  if (m_trajectories == 0 || r == 0 || n_segments == 0)
    throw DomainError("race scenario needs M, r, N_segments >= 1");
  if (repetitions < 3) throw DomainError("race needs repetitions >= 3");
  if (!(cfl_constant > 0.0) || cfl_constant > 1.0)
    throw DomainError("race CFL constant must lie in (0, 1]");
}

namespace {

// Periodic linear interpolation of a solved field, used as the steady
// velocity sampler for tracing.
streamline::VelocitySampler field_sampler(const GridSpec1D& grid,
                                          std::vector<double> values) {
  return [grid, vals = std::move(values)](const streamline::Vec3& p)
             -> streamline::Vec3 {
    const double span = grid.length();
    double x = std::fmod(p[0] - grid.x0, span);
    if (x < 0.0) x += span;
    const double s = x / grid.h;
    std::size_t j = static_cast<std::size_t>(s);
    if (j >= vals.size() - 1) j = vals.size() - 2;
    const double frac = s - static_cast<double>(j);
    return {vals[j] + frac * (vals[j + 1] - vals[j]), 0.0, 0.0};
  };
}

ScalarField1D sine_profile(const GridSpec1D& grid, double amplitude) {
  std::vector<double> vals(grid.n_nodes);
  const double span = grid.length();
  for (std::size_t j = 0; j < grid.n_nodes; ++j) {
    const double x = grid.position(j) - grid.x0;
    vals[j] = amplitude * std::sin(2.0 * std::numbers::pi * x / span);
  }
  vals[grid.n_nodes - 1] = vals[0];
  return {grid, std::move(vals)};
}

std::vector<streamline::Vec3> spread_seeds(const GridSpec1D& grid,
                                           std::size_t m) {
  std::vector<streamline::Vec3> seeds(m);
  const double span = grid.length();
  for (std::size_t i = 0; i < m; ++i)
    seeds[i] = {grid.x0 + span * static_cast<double>(i) /
                              static_cast<double>(m),
                0.0, 0.0};
  return seeds;
}

std::vector<double> final_level(const ScalarField1D& u0,
                                const lf::Equation& eq, double dt,
                                std::size_t steps, const std::string& label) {
  lf::Marcher m(u0, eq, dt, Boundary::periodic, label);
  for (std::size_t n = 0; n < steps; ++n) m.advance();
  return {m.values().begin(), m.values().end()};
}

}  // namespace

RaceResult race_two_methods(const RaceScenario& sc) {
  sc.validate();

  const double h_coarse = sc.length_cm / (10.0 * static_cast<double>(sc.n_segments));
  const std::size_t nodes_coarse = 10 * sc.n_segments + 1;
  const double h_fine = h_coarse / static_cast<double>(sc.r);
  const std::size_t nodes_fine = 10 * sc.n_segments * sc.r + 1;

  const double dt_coarse = lf::cfl_max_dt(h_coarse, sc.v_max, sc.cfl_constant);
  const std::size_t steps_coarse =
      static_cast<std::size_t>(std::ceil(sc.duration_s / dt_coarse));
  const double dt_fine = dt_coarse / static_cast<double>(sc.r);
  const std::size_t steps_fine = steps_coarse * sc.r;

  const GridSpec1D grid_fine{0.0, h_fine, nodes_fine};
  const GridSpec1D grid_coarse{0.0, h_coarse, nodes_coarse};
  const auto u0_fine = sine_profile(grid_fine, sc.v_max);
  const auto u0_coarse = sine_profile(grid_coarse, sc.v_max);
  const auto eq = lf::Equation::advection(sc.v_max);
  const auto seeds = spread_seeds(grid_fine, sc.m_trajectories);

  const std::size_t seg_fine = sc.n_segments * sc.r;
  const double seg_dt_fine = sc.duration_s / static_cast<double>(seg_fine);
  const double seg_dt_coarse =
      sc.duration_s / static_cast<double>(sc.n_segments);

  RaceResult race;
  race.fine_lf.op = "race-fine-lf";
  race.coarse_plus_densify.op = "race-coarse-densify";
  for (BenchResult* b : {&race.fine_lf, &race.coarse_plus_densify}) {
    b->m = sc.m_trajectories;
    b->n_segments = sc.n_segments;
    b->r = sc.r;
    b->repetitions = sc.repetitions;
  }
  race.fine_lf.flops_estimate =
      10.0 * static_cast<double>(nodes_fine) * static_cast<double>(steps_fine);
  race.coarse_plus_densify.flops_estimate =
      10.0 * static_cast<double>(nodes_coarse) *
          static_cast<double>(steps_coarse) +
      static_cast<double>(sc.n_segments) *
          (model::spline_flops_estimate(sc.m_trajectories, 1, sc.r,
                                        model::SplineCost::coefficients_sparse) +
           model::spline_flops_estimate(sc.m_trajectories, 1, sc.r,
                                        model::SplineCost::evaluation));
  race.fine_lf.workset_bytes =
      (2 * nodes_fine + 2 * sc.m_trajectories * (seg_fine + 1)) *
      sizeof(double);
  race.coarse_plus_densify.workset_bytes =
      (2 * nodes_coarse + 2 * sc.m_trajectories * (sc.n_segments + 1) +
       sc.m_trajectories * (seg_fine + 1)) *
      sizeof(double);

  for (std::size_t rep = 0; rep < sc.repetitions; ++rep) {
    {
      const auto t0 = Clock::now();
      auto field = final_level(u0_fine, eq, dt_fine, steps_fine, "fine grid");
      auto sampler = field_sampler(grid_fine, std::move(field));
      const auto set = streamline::trace_pathlines(sampler, seeds, 1,
                                                   seg_dt_fine, seg_fine);
      race.fine_lf.wall_seconds.push_back(seconds_since(t0));
      if (set.points_per_trajectory() != seg_fine + 1)
        throw std::runtime_error("race: fine trajectory point count mismatch");
    }
    {
      const auto t0 = Clock::now();
      auto field =
          final_level(u0_coarse, eq, dt_coarse, steps_coarse, "coarse grid");
      auto sampler = field_sampler(grid_coarse, std::move(field));
      const auto set = streamline::trace_pathlines(sampler, seeds, 1,
                                                   seg_dt_coarse,
                                                   sc.n_segments);
      const auto dense = streamline::densify(set, sc.r);
      race.coarse_plus_densify.wall_seconds.push_back(seconds_since(t0));
      if (dense.points_per_trajectory() != seg_fine + 1)
        throw std::runtime_error(
            "race: densified trajectory point count mismatch");
    }
  }
  race.fine_lf.median_seconds = median(race.fine_lf.wall_seconds);
  race.coarse_plus_densify.median_seconds =
      median(race.coarse_plus_densify.wall_seconds);
  race.time_ratio =
      race.fine_lf.median_seconds / race.coarse_plus_densify.median_seconds;
  return race;
}

}  // namespace flowline::bench
