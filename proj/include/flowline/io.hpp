#pragma once

#include <ostream>
#include <span>
#include <string>

#include "flowline/bench.hpp"
#include "flowline/error_bound.hpp"
#include "flowline/grid.hpp"
#include "flowline/streamline.hpp"

namespace flowline::io {

// 17 significant digits; round-trips any finite double exactly.
std::string fmt_g17(double x);

// header: step,node,x,value
void write_solution_csv(std::ostream& os, const SolutionHistory& hist);

// header: traj,point,t_param,x,y,z,vx,vy,vz (unused dims written as 0)
void write_streamlines_csv(std::ostream& os,
                           const streamline::StreamlineSet& set);
void write_dense_trajectories_csv(std::ostream& os,
                                  const streamline::DenseTrajectorySet& dense,
                                  std::span<const double> velocities,
                                  double segment_dt);

// header: node,x,u,v,abs_error (profile at the instant of max error)
void write_error_csv(std::ostream& os, const bounds::ErrorReport& report,
                     const GridSpec1D& fine_grid);

// header: op,M,N_segments,r,workers,rep,wall_seconds,flops_est,workset_bytes
void write_bench_csv(std::ostream& os,
                     std::span<const bench::BenchResult> results);

}  // namespace flowline::io
