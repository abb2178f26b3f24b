#include "flowline/streamline.hpp"

#include <cmath>
#include <utility>

#include "flowline/kernels.hpp"
#include "kernels/kernels_detail.hpp"

namespace flowline::streamline {

StreamlineSet::StreamlineSet(std::size_t m_trajectories, std::size_t s_points,
                             std::size_t dims, double segment_dt,
                             std::vector<double> positions,
                             std::vector<double> velocities)
    : m_(m_trajectories),
      s_points_(s_points),
      dims_(dims),
      segment_dt_(segment_dt),
      positions_(std::move(positions)),
      velocities_(std::move(velocities)) {
  if (m_ == 0) throw DomainError("streamline set needs M >= 1");
  if (s_points_ < 2)
    throw DomainError("streamline set needs at least one segment (S >= 2)");
  if (dims_ < 1 || dims_ > 3)
    throw DomainError("streamline set supports 1 to 3 spatial components");
  if (!(segment_dt_ > 0.0) || !std::isfinite(segment_dt_))
    throw DomainError("segment_dt must be finite and > 0");
  const std::size_t expect = m_ * s_points_ * dims_;
  if (positions_.size() != expect || velocities_.size() != expect)
    throw DomainError("streamline table sizes must be M x S x dims");
  for (double v : positions_)
    if (!std::isfinite(v)) throw DomainError("positions must be finite");
  for (double v : velocities_)
    if (!std::isfinite(v)) throw DomainError("velocities must be finite");
}

DenseTrajectorySet::DenseTrajectorySet(std::size_t m_trajectories,
                                       std::size_t ticks_per_segment,
                                       std::size_t dims,
                                       std::size_t points_per_trajectory,
                                       std::vector<double> positions)
    : m_(m_trajectories),
      r_(ticks_per_segment),
      dims_(dims),
      points_(points_per_trajectory),
      positions_(std::move(positions)) {}

StreamlineSet trace_pathlines(const VelocitySampler& velocity,
                              std::span<const Vec3> seeds, std::size_t dims,
                              double segment_dt, std::size_t n_segments) {
  if (seeds.empty()) throw DomainError("tracing needs at least one seed");
  if (n_segments == 0) throw DomainError("tracing needs n_segments >= 1");
  if (!(segment_dt > 0.0) || !std::isfinite(segment_dt))
    throw DomainError("segment_dt must be finite and > 0");
  if (dims < 1 || dims > 3)
    throw DomainError("tracing supports 1 to 3 spatial components");

  const std::size_t m = seeds.size();
  const std::size_t s_points = n_segments + 1;
  std::vector<double> pos(m * s_points * dims);
  std::vector<double> vel(m * s_points * dims);

  for (std::size_t i = 0; i < m; ++i) {
    Vec3 p = seeds[i];
    for (std::size_t k = 0; k < s_points; ++k) {
      const Vec3 v = velocity(p);
      for (std::size_t c = 0; c < dims; ++c) {
        if (!std::isfinite(v[c]) || !std::isfinite(p[c]))
          throw TraceError(i, k);
        pos[(i * s_points + k) * dims + c] = p[c];
        vel[(i * s_points + k) * dims + c] = v[c];
      }
      if (k + 1 < s_points)
        for (std::size_t c = 0; c < 3; ++c) p[c] += segment_dt * v[c];
    }
  }
  return {m, s_points, dims, segment_dt, std::move(pos), std::move(vel)};
}

std::vector<double> pack_segment(const StreamlineSet& set, std::size_t k,
                                 std::size_t component, bool raw_tangents) {
  std::vector<double> p;
  pack_segment(set, k, component, raw_tangents, p);
  return p;
}

void pack_segment(const StreamlineSet& set, std::size_t k,
                  std::size_t component, bool raw_tangents,
                  std::vector<double>& out) {
  if (k >= set.n_segments()) throw DomainError("segment index out of range");
  if (component >= set.dims())
    throw DomainError("component index out of range");
  const std::size_t m = set.trajectories();
  const double scale = raw_tangents ? 1.0 : set.segment_dt();
  out.resize(4 * m);
  for (std::size_t i = 0; i < m; ++i) {
    out[4 * i + 0] = set.position(i, k, component);
    out[4 * i + 1] = set.position(i, k + 1, component);
    out[4 * i + 2] = set.velocity(i, k, component) * scale;
    out[4 * i + 3] = set.velocity(i, k + 1, component) * scale;
  }
}

namespace {

// Shared core of densify / densify_velocities: scatter evaluated rows into
// the dense layout, joint ticks owned by the left segment.
template <typename CoeffTransform>
std::vector<double> densify_tables(const StreamlineSet& set, std::size_t r,
                                   std::size_t workers, bool raw_tangents,
                                   CoeffTransform&& transform) {
  if (r == 0) throw DomainError("densify needs r >= 1");
  const std::size_t m = set.trajectories();
  const std::size_t nseg = set.n_segments();
  const std::size_t dims = set.dims();
  const std::size_t points = nseg * r + 1;

  const hermite::BlockDiagonalBasis basis(m);
  const hermite::EvaluationGrid grid(r);
  std::vector<double> out(m * points * dims);

  std::vector<double> packed, coeffs;
  hermite::DenseTable table;
  for (std::size_t c = 0; c < dims; ++c) {
    for (std::size_t k = 0; k < nseg; ++k) {
      pack_segment(set, k, c, raw_tangents, packed);
      hermite::batch_coefficients(basis, packed, coeffs);
      transform(coeffs);
      hermite::HermiteBatch batch(m, std::move(coeffs));
      hermite::evaluate_batch_partitioned(batch, grid, workers, table);
      coeffs = std::move(batch).release();
      const std::size_t q0 = (k == 0) ? 0 : 1;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t q = q0; q <= r; ++q)
          out[(i * points + (k * r + q)) * dims + c] = table.at(i, q);
    }
  }
  return out;
}

}  // namespace

DenseTrajectorySet densify(const StreamlineSet& set, std::size_t r,
                           std::size_t workers, bool raw_tangents) {
  auto positions = densify_tables(set, r, workers, raw_tangents,
                                  [](std::vector<double>&) {});
  return {set.trajectories(), r, set.dims(), set.n_segments() * r + 1,
          std::move(positions)};
}

std::vector<double> densify_velocities(const StreamlineSet& set, std::size_t r,
                                       std::size_t workers,
                                       bool raw_tangents) {
  const double inv_dt = raw_tangents ? 1.0 : 1.0 / set.segment_dt();
  return densify_tables(set, r, workers, raw_tangents,
                        [inv_dt](std::vector<double>& coeffs) {
                          // d/dt of (a,b,c,d) is the cubic (0, 3a, 2b, c),
                          // rescaled from parameter to physical units.
                          for (std::size_t i = 0; i < coeffs.size(); i += 4) {
                            const double a = coeffs[i], b = coeffs[i + 1],
                                         c = coeffs[i + 2];
                            coeffs[i] = 0.0;
                            coeffs[i + 1] = 3.0 * a * inv_dt;
                            coeffs[i + 2] = 2.0 * b * inv_dt;
                            coeffs[i + 3] = c * inv_dt;
                          }
                        });
}

EulerianSnapshot eulerian_snapshot(const StreamlineSet& set, std::size_t k,
                                   double t0,
                                   const hermite::EvaluationGrid& grid,
                                   bool raw_tangents) {
  if (k >= set.n_segments()) throw DomainError("segment index out of range");
  const double r = static_cast<double>(grid.ticks_per_cubic());
  const double pos = t0 * r;
  const double nearest = std::round(pos);
  if (std::fabs(pos - nearest) > 1e-9 || t0 < 0.0 || t0 > 1.0)
    throw DomainError("t0 must be one of the evaluation ticks k/r");
  const std::size_t col = static_cast<std::size_t>(nearest);

  const std::size_t m = set.trajectories();
  const std::size_t dims = set.dims();
  const double inv_dt = raw_tangents ? 1.0 : 1.0 / set.segment_dt();
  const hermite::BlockDiagonalBasis basis(m);
  const std::size_t n_ticks = grid.n_columns();

  EulerianSnapshot snap{m, dims, std::vector<double>(m * dims),
                        std::vector<double>(m * dims)};
  for (std::size_t c = 0; c < dims; ++c) {
    const auto coeffs =
        hermite::batch_coefficients(basis, pack_segment(set, k, c,
                                                        raw_tangents));
    for (std::size_t i = 0; i < m; ++i) {
      const double* cf = coeffs.data() + 4 * i;
      snap.positions[i * dims + c] =
          kernels::detail::cubic_eval_tick(cf, grid.rows_data(), n_ticks, col);
      const double deriv[4] = {0.0, 3.0 * cf[0], 2.0 * cf[1], cf[2]};
      snap.velocities[i * dims + c] =
          kernels::detail::cubic_eval_tick(deriv, grid.rows_data(), n_ticks,
                                           col) *
          inv_dt;
    }
  }
  return snap;
}

}  // namespace flowline::streamline
