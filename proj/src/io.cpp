#include "flowline/io.hpp"

#include <cstdio>

namespace flowline::io {

std::string fmt_g17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_solution_csv(std::ostream& os, const SolutionHistory& hist) {
  os << "step,node,x,value\n";
  for (std::size_t level = 0; level < hist.fields.size(); ++level) {
    const auto& f = hist.fields[level];
    for (std::size_t j = 0; j < f.size(); ++j)
      os << hist.steps[level] << ',' << j << ','
         << fmt_g17(f.grid().position(j)) << ',' << fmt_g17(f[j]) << '\n';
  }
}

namespace {

void trajectory_row(std::ostream& os, std::size_t traj, std::size_t point,
                    double t_param, const double* pos, const double* vel,
                    std::size_t dims) {
  os << traj << ',' << point << ',' << fmt_g17(t_param);
  for (std::size_t c = 0; c < 3; ++c)
    os << ',' << fmt_g17(c < dims ? pos[c] : 0.0);
  for (std::size_t c = 0; c < 3; ++c)
    os << ',' << fmt_g17(c < dims ? vel[c] : 0.0);
  os << '\n';
}

}  // namespace

void write_streamlines_csv(std::ostream& os,
                           const streamline::StreamlineSet& set) {
  os << "traj,point,t_param,x,y,z,vx,vy,vz\n";
  const std::size_t dims = set.dims();
  for (std::size_t i = 0; i < set.trajectories(); ++i)
    for (std::size_t k = 0; k < set.points_per_trajectory(); ++k) {
      const double t = static_cast<double>(k) * set.segment_dt();
      trajectory_row(os, i, k, t,
                     set.positions().data() +
                         (i * set.points_per_trajectory() + k) * dims,
                     set.velocities().data() +
                         (i * set.points_per_trajectory() + k) * dims,
                     dims);
    }
}

void write_dense_trajectories_csv(std::ostream& os,
                                  const streamline::DenseTrajectorySet& dense,
                                  std::span<const double> velocities,
                                  double segment_dt) {
  os << "traj,point,t_param,x,y,z,vx,vy,vz\n";
  const std::size_t dims = dense.dims();
  const std::size_t points = dense.points_per_trajectory();
  const double tick_dt =
      segment_dt / static_cast<double>(dense.ticks_per_segment());
  for (std::size_t i = 0; i < dense.trajectories(); ++i)
    for (std::size_t j = 0; j < points; ++j) {
      const double t = static_cast<double>(j) * tick_dt;
      trajectory_row(os, i, j, t,
                     dense.positions().data() + (i * points + j) * dims,
                     velocities.data() + (i * points + j) * dims, dims);
    }
}

void write_error_csv(std::ostream& os, const bounds::ErrorReport& report,
                     const GridSpec1D& fine_grid) {
  os << "node,x,u,v,abs_error\n";
  for (std::size_t j = 0; j < report.error_profile.size(); ++j)
    os << j << ',' << fmt_g17(fine_grid.position(j)) << ','
       << fmt_g17(report.u_at_max[j]) << ',' << fmt_g17(report.v_at_max[j])
       << ',' << fmt_g17(report.error_profile[j]) << '\n';
}

void write_bench_csv(std::ostream& os,
                     std::span<const bench::BenchResult> results) {
  os << "op,M,N_segments,r,workers,rep,wall_seconds,flops_est,workset_bytes\n";
  for (const auto& res : results)
    for (std::size_t rep = 0; rep < res.wall_seconds.size(); ++rep)
      os << res.op << ',' << res.m << ',' << res.n_segments << ',' << res.r
         << ',' << res.workers << ',' << rep << ','
         << fmt_g17(res.wall_seconds[rep]) << ','
         << fmt_g17(res.flops_estimate) << ',' << res.workset_bytes << '\n';
}

}  // namespace flowline::io
