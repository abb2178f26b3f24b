// flowline: coarse Lax-Friedrichs solving, Hermite trajectory densification,
// two-grid error-bound verification, and cost/benchmark reporting.
//
// Subcommands: simulate, densify, compare, bench, model. Every subcommand
// also reads its flags from a JSON config file via --config (flag names as
// keys; explicit command-line flags win).
//
// Exit codes: 0 success, 2 hypothesis/domain errors, 3 numerical blow-up.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "flowline/bench.hpp"
#include "flowline/cost_model.hpp"
#include "flowline/error_bound.hpp"
#include "flowline/io.hpp"
#include "flowline/kernels.hpp"
#include "flowline/lf_solver.hpp"
#include "flowline/streamline.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace flowline;

namespace {

// --config support: a flat JSON object with flag names as keys, e.g.
// {"grid-h": 0.01, "steps": 100}. Explicit command-line flags win; unknown
// keys are rejected.
void apply_json_config(CLI::App* cmd, const std::string& path) {
  if (path.empty()) return;
  std::ifstream is(path);
  if (!is) throw DomainError("cannot open config file '" + path + "'");
  const json j = json::parse(is);
  if (!j.is_object())
    throw DomainError("config file must hold a JSON object of flag values");
  for (const auto& [key, value] : j.items()) {
    CLI::Option* op = cmd->get_option_no_throw("--" + key);
    if (op == nullptr)
      throw DomainError("config key '" + key + "' is not a flag of '" +
                        cmd->get_name() + "'");
    if (op->count() > 0) continue;  // the command line takes precedence
    std::string text;
    if (value.is_boolean())
      text = value.get<bool>() ? "true" : "false";
    else if (value.is_string())
      text = value.get<std::string>();
    else
      text = value.dump();
    op->add_result(text);
    op->run_callback();
  }
}

void enable_json_config(CLI::App* cmd, std::string& path) {
  cmd->add_option("--config", path,
                  "JSON file holding flag values (flag names as keys)");
}

std::ofstream open_output(const std::string& out_dir, const std::string& name) {
  fs::create_directories(out_dir);
  const fs::path path = fs::path(out_dir) / name;
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path.string());
  return os;
}

void write_json(const std::string& out_dir, const std::string& name,
                const json& j) {
  auto os = open_output(out_dir, name);
  os << j.dump(2) << '\n';
}

ScalarField1D make_profile(const std::string& profile, std::size_t nodes,
                           double h, double mean, double amp) {
  GridSpec1D grid{0.0, h, nodes};
  grid.validate();
  const double span = grid.length();
  std::vector<double> v(nodes);
  for (std::size_t j = 0; j < nodes; ++j) {
    const double x = grid.position(j) / span;
    if (profile == "sine") {
      v[j] = mean + amp * std::sin(2.0 * std::numbers::pi * x);
    } else if (profile == "square") {
      v[j] = mean + (std::sin(2.0 * std::numbers::pi * x) >= 0.0 ? amp : -amp);
    } else if (profile == "gaussian") {
      const double z = (x - 0.5) / 0.125;
      v[j] = mean + amp * std::exp(-z * z);
    } else {
      throw DomainError("unknown profile '" + profile + "'");
    }
  }
  v[nodes - 1] = v[0];
  return {grid, std::move(v)};
}

Boundary parse_boundary(const std::string& name) {
  if (name == "periodic") return Boundary::periodic;
  if (name == "dirichlet") return Boundary::dirichlet;
  throw DomainError("unknown boundary '" + name + "'");
}

lf::Equation parse_equation(const std::string& name, double speed) {
  if (name == "advection") return lf::Equation::advection(speed);
  if (name == "burgers") return lf::Equation::burgers();
  throw DomainError("unknown equation '" + name + "'");
}

struct SimulateArgs {
  double grid_h = 0.01;
  std::size_t nodes = 101;
  double dt = 0.0;  // 0: derive from the CFL limit
  std::size_t steps = 100;
  double cfl_c = 1.0;
  std::string equation = "advection";
  double speed = 1.0;
  std::string boundary = "periodic";
  std::size_t store_every = 10;
  std::string profile = "sine";
  double amp = 1.0;
  double mean = 0.0;
  std::string out_dir = ".";
  std::string config;
};

int run_simulate(const SimulateArgs& a) {
  const auto u0 = make_profile(a.profile, a.nodes, a.grid_h, a.mean, a.amp);
  const auto eq = parse_equation(a.equation, a.speed);
  const double v_scale = eq.kind == lf::Equation::Kind::advection
                             ? std::fabs(a.speed)
                             : u0.sup_norm();
  const double dt = a.dt > 0.0
                        ? a.dt
                        : lf::cfl_max_dt(a.grid_h, v_scale, a.cfl_c);
  const TimeSpec time{dt, a.steps, a.cfl_c};
  const auto hist =
      lf::run(u0, time, eq, a.store_every, parse_boundary(a.boundary));

  auto csv = open_output(a.out_dir, "solution.csv");
  io::write_solution_csv(csv, hist);

  json j{{"equation", a.equation},
         {"nodes", a.nodes},
         {"grid_h", a.grid_h},
         {"dt", dt},
         {"steps", a.steps},
         {"cfl_c", a.cfl_c},
         {"speed", a.speed},
         {"boundary", a.boundary},
         {"profile", a.profile},
         {"store_every", a.store_every},
         {"stored_steps", hist.steps},
         {"norm_history", hist.norm_history},
         {"kernels", kernels::backend_name(kernels::active_backend())}};
  write_json(a.out_dir, "run.json", j);
  std::printf("simulate: %zu stored levels, final sup norm %s -> %s\n",
              hist.fields.size(), io::fmt_g17(hist.norm_history.back()).c_str(),
              (fs::path(a.out_dir) / "solution.csv").string().c_str());
  return 0;
}

struct DensifyArgs {
  std::size_t m_traj = 8;
  std::size_t segments = 5;
  std::size_t ticks_r = 10;
  double segment_dt = 0.1;
  std::string field = "rotation";
  std::size_t workers = 1;
  bool raw_tangents = false;
  std::string out_dir = ".";
  std::string config;
};

streamline::VelocitySampler builtin_field(const std::string& name) {
  if (name == "uniform")
    return [](const streamline::Vec3&) -> streamline::Vec3 {
      return {1.0, 0.5, -0.25};
    };
  if (name == "rotation")
    return [](const streamline::Vec3& p) -> streamline::Vec3 {
      return {-p[1], p[0], 0.0};
    };
  if (name == "shear")
    return [](const streamline::Vec3& p) -> streamline::Vec3 {
      return {p[1], 0.0, 0.0};
    };
  throw DomainError("unknown field '" + name + "'");
}

int run_densify(const DensifyArgs& a) {
  const std::size_t dims = a.field == "uniform" ? 3 : 2;
  std::vector<streamline::Vec3> seeds(a.m_traj);
  for (std::size_t i = 0; i < a.m_traj; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(a.m_traj);
    seeds[i] = {0.25 + t, 1.0, 0.0};
  }
  const auto set = streamline::trace_pathlines(builtin_field(a.field), seeds,
                                               dims, a.segment_dt, a.segments);
  const auto dense =
      streamline::densify(set, a.ticks_r, a.workers, a.raw_tangents);
  const auto vel = streamline::densify_velocities(set, a.ticks_r, a.workers,
                                                  a.raw_tangents);

  auto csv = open_output(a.out_dir, "trajectories.csv");
  io::write_dense_trajectories_csv(csv, dense, vel, a.segment_dt);

  json j{{"m_trajectories", a.m_traj},
         {"segments", a.segments},
         {"ticks_r", a.ticks_r},
         {"segment_dt", a.segment_dt},
         {"field", a.field},
         {"dims", dims},
         {"workers", a.workers},
         {"raw_tangents", a.raw_tangents},
         {"points_per_trajectory", dense.points_per_trajectory()},
         {"kernels", kernels::backend_name(kernels::active_backend())}};
  write_json(a.out_dir, "densify.json", j);
  std::printf("densify: %zu trajectories x %zu points -> %s\n",
              dense.trajectories(), dense.points_per_trajectory(),
              (fs::path(a.out_dir) / "trajectories.csv").string().c_str());
  return 0;
}

struct CompareArgs {
  double grid_h = 0.01;
  std::size_t nodes = 101;
  double dt = 0.0;  // 0: dt = cfl_c * h / speed, so lambda_v = cfl_c
  std::size_t steps = 10000;
  double cfl_c = 1.0;
  std::string equation = "burgers";
  double speed = 0.75;  // flow speed scale defining lambda_v
  std::string boundary = "periodic";
  std::size_t coarsen_s = 10;
  double bound_a = 8.0;
  double bound_b = 2.0;
  std::size_t store_every = 1;  // compare instants
  std::string profile = "sine";
  double amp = 0.25;
  double mean = 0.25;
  bool paper_scale = false;
  std::string out_dir = ".";
  std::string config;
};

int run_compare(const CompareArgs& a) {
  const auto u0 = make_profile(a.profile, a.nodes, a.grid_h, a.mean, a.amp);
  bounds::ComparisonScenario sc;
  sc.s = a.coarsen_s;
  sc.equation = parse_equation(a.equation, a.speed);
  sc.boundary = parse_boundary(a.boundary);
  sc.a_const = a.bound_a;
  sc.b_const = a.bound_b;
  sc.compare_every = a.store_every;
  sc.flow_speed = std::fabs(a.speed);
  const double dt =
      a.dt > 0.0 ? a.dt : lf::cfl_max_dt(a.grid_h, sc.flow_speed, a.cfl_c);
  sc.time = {dt, a.paper_scale ? 100000u : a.steps, a.cfl_c};

  const auto rep = bounds::run_comparison(u0, sc);

  json j{{"m0", rep.m0},
         {"lambda_v", rep.params.lambda_v},
         {"s", rep.params.s},
         {"A", rep.params.a_const},
         {"B", rep.params.b_const},
         {"n_steps", rep.params.n_steps},
         {"bound_theorem", rep.bound_theorem},
         {"bound_corollary", rep.bound_corollary
                                 ? json(*rep.bound_corollary)
                                 : json(nullptr)},
         {"max_error", rep.max_error},
         {"max_error_step", rep.max_error_step},
         {"margin_ratio", rep.margin_ratio},
         {"dt", dt},
         {"equation", a.equation},
         {"kernels", kernels::backend_name(kernels::active_backend())}};
  write_json(a.out_dir, "report.json", j);
  auto csv = open_output(a.out_dir, "errors.csv");
  io::write_error_csv(csv, rep, u0.grid());
  std::printf(
      "compare: lambda_v=%s s=%zu N=%zu M0=%s max|v-u|=%s bound=%s "
      "margin_ratio=%s\n",
      io::fmt_g17(rep.params.lambda_v).c_str(), rep.params.s,
      rep.params.n_steps, io::fmt_g17(rep.m0).c_str(),
      io::fmt_g17(rep.max_error).c_str(),
      io::fmt_g17(rep.bound_corollary.value_or(rep.bound_theorem)).c_str(),
      io::fmt_g17(rep.margin_ratio).c_str());
  return 0;
}

struct BenchArgs {
  std::string op = "cr";
  std::size_t m_traj = 10000;
  std::size_t ticks_r = 10;
  std::size_t workers = 1;
  std::size_t reps = 5;
  std::uint64_t seed = 42;
  // race flags
  double cylinder_l = 100.0;  // cm
  double speed = 10.0;        // cm/s
  double duration = 10.0;     // s
  std::size_t segments = 100;
  bool paper_scale = false;
  std::string out_dir = ".";
  std::string config;
};

int run_bench(const BenchArgs& a) {
  std::vector<bench::BenchResult> results;
  json extra;
  if (a.op == "gp" || a.op == "cr") {
    const auto kind =
        a.op == "gp" ? bench::ProductKind::gp : bench::ProductKind::cr;
    results.push_back(
        bench::bench_product(kind, a.m_traj, a.ticks_r, a.workers, a.reps,
                             a.seed));
    const auto& r = results.back();
    extra = json{{"op", r.op},
                 {"median_seconds", r.median_seconds},
                 {"workset_bytes", r.workset_bytes},
                 {"flops_estimate", r.flops_estimate},
                 {"seed", r.seed}};
    std::printf("bench %s: M=%zu r=%zu workers=%zu median %s s, workset %zu "
                "bytes (seed %llu)\n",
                r.op.c_str(), r.m, r.r, r.workers,
                io::fmt_g17(r.median_seconds).c_str(), r.workset_bytes,
                static_cast<unsigned long long>(r.seed));
  } else if (a.op == "race") {
    bench::RaceScenario sc;
    sc.length_cm = a.cylinder_l;
    sc.v_max = a.speed;
    sc.m_trajectories = a.paper_scale ? 10000 : a.m_traj;
    sc.r = a.ticks_r;
    sc.duration_s = a.paper_scale ? 60.0 : a.duration;
    sc.n_segments = a.paper_scale ? 1000 : a.segments;
    sc.repetitions = a.reps;
    const auto race = bench::race_two_methods(sc);
    results.push_back(race.fine_lf);
    results.push_back(race.coarse_plus_densify);
    extra = json{{"fine_median_seconds", race.fine_lf.median_seconds},
                 {"coarse_median_seconds",
                  race.coarse_plus_densify.median_seconds},
                 {"time_ratio", race.time_ratio},
                 {"paper_scale", a.paper_scale}};
    std::printf("race: fine LF %s s vs coarse+densify %s s -> ratio %s\n",
                io::fmt_g17(race.fine_lf.median_seconds).c_str(),
                io::fmt_g17(race.coarse_plus_densify.median_seconds).c_str(),
                io::fmt_g17(race.time_ratio).c_str());
  } else {
    throw DomainError("unknown bench op '" + a.op + "' (gp, cr, race)");
  }

  auto csv = open_output(a.out_dir, "bench.csv");
  io::write_bench_csv(csv, results);
  extra["kernels"] = kernels::backend_name(kernels::active_backend());
  write_json(a.out_dir, "bench.json", extra);
  return 0;
}

struct ModelArgs {
  double grid_h = 0.5;
  double speed = 50.0;
  double duration = 60.0;
  double extent_x = 10.0;
  double extent_y = 10.0;
  double extent_z = 1000.0;
  double cfl_c = 1.0;
  double flops_per_cell = 10.0;
  std::size_t fields_per_cell = 3;
  std::size_t snapshots = 1;
  std::size_t m_traj = 10000;
  std::size_t segments = 1000;
  std::size_t ticks_r = 10;
  std::string out_dir = ".";
  std::string config;
};

int run_model(const ModelArgs& a) {
  model::CostModel m;
  m.domain_extents = {a.extent_x, a.extent_y, a.extent_z};
  m.h = a.grid_h;
  m.v_max = a.speed;
  m.duration = a.duration;
  m.cfl_constant = a.cfl_c;
  m.flops_per_cell_update = a.flops_per_cell;

  const auto est = model::flops_estimate(m);
  const double mem = model::memory_estimate(m, a.fields_per_cell, a.snapshots);
  json j{
      {"grid",
       {{"h", m.h},
        {"extents", m.domain_extents},
        {"cells", est.cells},
        {"v_max", m.v_max},
        {"cfl_c", m.cfl_constant}}},
      {"pde",
       {{"duration_s", m.duration},
        {"max_dt", lf::cfl_max_dt(m.h, m.v_max, m.cfl_constant)},
        {"steps", est.steps},
        {"flops_per_cell_update", m.flops_per_cell_update},
        {"total_flops", est.total_flops},
        {"memory_bytes", mem},
        {"fields_per_cell", a.fields_per_cell},
        {"snapshots_resident", a.snapshots}}},
      {"splines",
       {{"m_trajectories", a.m_traj},
        {"n_segments", a.segments},
        {"ticks_r", a.ticks_r},
        {"coefficients_dense_flops",
         model::spline_flops_estimate(a.m_traj, a.segments, a.ticks_r,
                                      model::SplineCost::coefficients_dense)},
        {"coefficients_sparse_flops",
         model::spline_flops_estimate(a.m_traj, a.segments, a.ticks_r,
                                      model::SplineCost::coefficients_sparse)},
        {"evaluation_flops_per_product",
         model::spline_flops_estimate(a.m_traj, a.segments, a.ticks_r,
                                      model::SplineCost::evaluation)},
        {"basis_stored_bytes",
         hermite::BlockDiagonalBasis(a.m_traj).stored_bytes()},
        {"basis_dense_entries",
         hermite::BlockDiagonalBasis(a.m_traj).dense_entry_count()}}}};
  write_json(a.out_dir, "model.json", j);
  std::cout << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coarse Lax-Friedrichs flow solving with batched Hermite "
               "trajectory densification"};
  app.require_subcommand(1);

  std::string kernels_choice = "auto";
  app.add_option("--kernels", kernels_choice,
                 "kernel backend: auto, scalar, avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  SimulateArgs sim;
  auto* simulate = app.add_subcommand(
      "simulate", "run the modified LF schema on a 1D grid");
  enable_json_config(simulate, sim.config);
  simulate->add_option("--grid-h", sim.grid_h, "grid step h");
  simulate->add_option("--nodes", sim.nodes, "node count (>= 3)");
  simulate->add_option("--dt", sim.dt, "time step (default: CFL limit)");
  simulate->add_option("--steps", sim.steps, "number of time steps");
  simulate->add_option("--cfl-c", sim.cfl_c, "CFL constant c in (0,1]");
  simulate->add_option("--equation", sim.equation, "advection or burgers")
      ->check(CLI::IsMember({"advection", "burgers"}));
  simulate->add_option("--speed", sim.speed, "advection transport speed");
  simulate->add_option("--boundary", sim.boundary, "periodic or dirichlet")
      ->check(CLI::IsMember({"periodic", "dirichlet"}));
  simulate->add_option("--store-every", sim.store_every,
                       "store every k-th level");
  simulate->add_option("--profile", sim.profile, "sine, square, gaussian");
  simulate->add_option("--amp", sim.amp, "profile amplitude");
  simulate->add_option("--mean", sim.mean, "profile mean");
  simulate->add_option("--out-dir", sim.out_dir, "output directory");

  DensifyArgs den;
  auto* densify = app.add_subcommand(
      "densify", "trace pathlines and densify them with Hermite cubics");
  enable_json_config(densify, den.config);
  densify->add_option("--m-traj", den.m_traj, "trajectory count M");
  densify->add_option("--segments", den.segments, "segment count N");
  densify->add_option("--ticks-r", den.ticks_r, "ticks per cubic r");
  densify->add_option("--segment-dt", den.segment_dt, "seconds per segment");
  densify->add_option("--field", den.field, "uniform, rotation, shear")
      ->check(CLI::IsMember({"uniform", "rotation", "shear"}));
  densify->add_option("--workers", den.workers, "row-partition worker count");
  densify->add_flag("--raw-tangents", den.raw_tangents,
                    "pack physical velocities without segment_dt rescale");
  densify->add_option("--out-dir", den.out_dir, "output directory");

  CompareArgs cmp;
  auto* compare = app.add_subcommand(
      "compare", "fine LF vs coarse LF + interpolation against the bounds");
  enable_json_config(compare, cmp.config);
  compare->add_option("--grid-h", cmp.grid_h, "fine grid step h");
  compare->add_option("--nodes", cmp.nodes, "fine node count");
  compare->add_option("--dt", cmp.dt,
                      "time step (default: cfl_c * h / speed)");
  compare->add_option("--steps", cmp.steps, "time steps N");
  compare->add_option("--cfl-c", cmp.cfl_c,
                      "CFL constant c (lambda_v when --dt is derived)");
  compare->add_option("--equation", cmp.equation, "advection or burgers")
      ->check(CLI::IsMember({"advection", "burgers"}));
  compare->add_option("--speed", cmp.speed,
                      "flow speed scale defining lambda_v");
  compare->add_option("--boundary", cmp.boundary, "periodic or dirichlet")
      ->check(CLI::IsMember({"periodic", "dirichlet"}));
  compare->add_option("--coarsen-s", cmp.coarsen_s, "coarsening factor s");
  compare->add_option("--bound-a", cmp.bound_a, "constant A");
  compare->add_option("--bound-b", cmp.bound_b, "constant B");
  compare->add_option("--store-every", cmp.store_every,
                      "compare every k-th level");
  compare->add_option("--profile", cmp.profile, "sine, square, gaussian");
  compare->add_option("--amp", cmp.amp, "profile amplitude");
  compare->add_option("--mean", cmp.mean, "profile mean");
  compare->add_flag("--paper-scale", cmp.paper_scale, "run N = 1e5 steps");
  compare->add_option("--out-dir", cmp.out_dir, "output directory");

  BenchArgs ben;
  auto* bench_cmd = app.add_subcommand(
      "bench", "time the Gp / C*R products or the two-method race");
  enable_json_config(bench_cmd, ben.config);
  bench_cmd->add_option("--op", ben.op, "gp, cr, or race")
      ->check(CLI::IsMember({"gp", "cr", "race"}));
  bench_cmd->add_option("--m-traj", ben.m_traj, "trajectory count M");
  bench_cmd->add_option("--ticks-r", ben.ticks_r, "ticks per cubic r");
  bench_cmd->add_option("--workers", ben.workers, "cr row-partition workers");
  bench_cmd->add_option("--reps", ben.reps, "repetitions (>= 3)");
  bench_cmd->add_option("--seed", ben.seed, "input randomization seed");
  bench_cmd->add_option("--cylinder-l", ben.cylinder_l,
                        "race: cylinder length (cm)");
  bench_cmd->add_option("--speed", ben.speed, "race: max speed (cm/s)");
  bench_cmd->add_option("--duration", ben.duration,
                        "race: simulated seconds");
  bench_cmd->add_option("--segments", ben.segments,
                        "race: coarse segments N");
  bench_cmd->add_flag("--paper-scale", ben.paper_scale,
                      "race: M=1e4, N=1e3, 60 s");
  bench_cmd->add_option("--out-dir", ben.out_dir, "output directory");

  ModelArgs mod;
  auto* model_cmd = app.add_subcommand(
      "model", "flops and memory estimates for a scenario");
  enable_json_config(model_cmd, mod.config);
  model_cmd->add_option("--grid-h", mod.grid_h, "grid step h (cm)");
  model_cmd->add_option("--speed", mod.speed, "v_max (cm/s)");
  model_cmd->add_option("--duration", mod.duration, "simulated seconds");
  model_cmd->add_option("--extent-x", mod.extent_x, "domain extent x (cm)");
  model_cmd->add_option("--extent-y", mod.extent_y, "domain extent y (cm)");
  model_cmd->add_option("--extent-z", mod.extent_z, "domain extent z (cm)");
  model_cmd->add_option("--cfl-c", mod.cfl_c, "CFL constant c");
  model_cmd->add_option("--flops-per-cell", mod.flops_per_cell,
                        "model parameter k");
  model_cmd->add_option("--fields-per-cell", mod.fields_per_cell,
                        "resident fields per cell");
  model_cmd->add_option("--snapshots", mod.snapshots, "resident snapshots");
  model_cmd->add_option("--m-traj", mod.m_traj, "spline trajectory count M");
  model_cmd->add_option("--segments", mod.segments, "spline segments N");
  model_cmd->add_option("--ticks-r", mod.ticks_r, "spline ticks r");
  model_cmd->add_option("--out-dir", mod.out_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (kernels_choice == "scalar")
      kernels::set_backend(kernels::Backend::scalar);
    else if (kernels_choice == "avx2")
      kernels::set_backend(kernels::Backend::avx2);

    if (simulate->parsed()) {
      apply_json_config(simulate, sim.config);
      return run_simulate(sim);
    }
    if (densify->parsed()) {
      apply_json_config(densify, den.config);
      return run_densify(den);
    }
    if (compare->parsed()) {
      apply_json_config(compare, cmp.config);
      return run_compare(cmp);
    }
    if (bench_cmd->parsed()) {
      apply_json_config(bench_cmd, ben.config);
      return run_bench(ben);
    }
    if (model_cmd->parsed()) {
      apply_json_config(model_cmd, mod.config);
      return run_model(mod);
    }
  } catch (const BlowUpError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: invalid config value: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
