#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "flowline/hermite.hpp"

namespace flowline::streamline {

using Vec3 = std::array<double, 3>;
using VelocitySampler = std::function<Vec3(const Vec3&)>;

// M trajectories of S points each; positions and velocities stored
// point-major per trajectory, dims components per point. Immutable after
// tracing.
class StreamlineSet {
 public:
  StreamlineSet(std::size_t m_trajectories, std::size_t s_points,
                std::size_t dims, double segment_dt,
                std::vector<double> positions, std::vector<double> velocities);

  std::size_t trajectories() const { return m_; }
  std::size_t points_per_trajectory() const { return s_points_; }
  std::size_t n_segments() const { return s_points_ - 1; }
  std::size_t dims() const { return dims_; }
  double segment_dt() const { return segment_dt_; }

  double position(std::size_t traj, std::size_t point, std::size_t c) const {
    return positions_[index(traj, point, c)];
  }
  double velocity(std::size_t traj, std::size_t point, std::size_t c) const {
    return velocities_[index(traj, point, c)];
  }
  std::span<const double> positions() const { return positions_; }
  std::span<const double> velocities() const { return velocities_; }

 private:
  std::size_t index(std::size_t traj, std::size_t point, std::size_t c) const {
    return (traj * s_points_ + point) * dims_ + c;
  }
  std::size_t m_, s_points_, dims_;
  double segment_dt_;
  std::vector<double> positions_, velocities_;
};

// Densified curves: M trajectories of N_segments*r + 1 points.
class DenseTrajectorySet {
 public:
  DenseTrajectorySet(std::size_t m_trajectories, std::size_t ticks_per_segment,
                     std::size_t dims, std::size_t points_per_trajectory,
                     std::vector<double> positions);

  std::size_t trajectories() const { return m_; }
  std::size_t ticks_per_segment() const { return r_; }
  std::size_t dims() const { return dims_; }
  std::size_t points_per_trajectory() const { return points_; }
  double position(std::size_t traj, std::size_t point, std::size_t c) const {
    return positions_[(traj * points_ + point) * dims_ + c];
  }
  std::span<const double> positions() const { return positions_; }

 private:
  std::size_t m_, r_, dims_, points_;
  std::vector<double> positions_;
};

// Explicit-Euler particle paths P_{k+1} = P_k + segment_dt * v(P_k), with the
// sampled velocity stored at every point.
StreamlineSet trace_pathlines(const VelocitySampler& velocity,
                              std::span<const Vec3> seeds, std::size_t dims,
                              double segment_dt, std::size_t n_segments);

// The length-4M vector for segment k of one component: trajectory-major
// blocks (p_k, p_{k+1}, v_k*segment_dt, v_{k+1}*segment_dt). With
// raw_tangents the physical velocities are packed unscaled.
std::vector<double> pack_segment(const StreamlineSet& set, std::size_t k,
                                 std::size_t component,
                                 bool raw_tangents = false);
// In-place variant for callers packing many segments.
void pack_segment(const StreamlineSet& set, std::size_t k,
                  std::size_t component, bool raw_tangents,
                  std::vector<double>& out);

// Batched Hermite densification: per segment and component, coefficients via
// the Gp product and values via the row-partitioned C*R product. Joint ticks
// are emitted once, owned by the left segment. Requires mod(M, workers) = 0.
DenseTrajectorySet densify(const StreamlineSet& set, std::size_t r,
                           std::size_t workers = 1, bool raw_tangents = false);

// Velocities along the densified curves (cubic derivative per tick, rescaled
// to physical units), same layout as DenseTrajectorySet positions. Companion
// of densify for trajectory dumps.
std::vector<double> densify_velocities(const StreamlineSet& set, std::size_t r,
                                       std::size_t workers = 1,
                                       bool raw_tangents = false);

// All M particles at one fixed parameter instant of segment k: one column of
// the C*R product per component, with derivative-based physical velocities.
struct EulerianSnapshot {
  std::size_t m = 0;
  std::size_t dims = 0;
  std::vector<double> positions;   // m x dims row-major
  std::vector<double> velocities;  // m x dims row-major
};

EulerianSnapshot eulerian_snapshot(const StreamlineSet& set, std::size_t k,
                                   double t0,
                                   const hermite::EvaluationGrid& grid,
                                   bool raw_tangents = false);

}  // namespace flowline::streamline
