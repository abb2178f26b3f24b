#include "flowline/cost_model.hpp"

#include <cmath>

#include "flowline/lf_solver.hpp"

namespace flowline::model {

void CostModel::validate() const {
  for (double e : domain_extents)
    if (!(e > 0.0)) throw DomainError("domain extents must be > 0");
  if (!(h > 0.0)) throw DomainError("grid step h must be > 0");
  if (!(v_max > 0.0)) throw DomainError("v_max must be > 0");
  if (!(duration >= 0.0)) throw DomainError("duration must be >= 0");
  if (!(cfl_constant > 0.0) || cfl_constant > 1.0)
    throw DomainError("CFL constant c must lie in (0, 1]");
  if (!(flops_per_cell_update > 0.0))
    throw DomainError("flops_per_cell_update must be > 0");
}

unsigned long long CostModel::cell_count() const {
  unsigned long long cells = 1;
  for (double e : domain_extents)
    cells *= static_cast<unsigned long long>(std::ceil(e / h));
  return cells;
}

FlopsBreakdown flops_estimate(const CostModel& model) {
  model.validate();
  FlopsBreakdown out;
  out.cells = model.cell_count();
  out.steps =
      model.duration / lf::cfl_max_dt(model.h, model.v_max, model.cfl_constant);
  out.total_flops = model.flops_per_cell_update *
                    static_cast<double>(out.cells) * out.steps;
  return out;
}

double memory_estimate(const CostModel& model, std::size_t fields_per_cell,
                       std::size_t snapshots_resident) {
  model.validate();
  if (fields_per_cell == 0 || snapshots_resident == 0)
    throw DomainError("field and snapshot counts must be >= 1");
  return static_cast<double>(model.cell_count()) *
         static_cast<double>(fields_per_cell) * 8.0 *
         static_cast<double>(snapshots_resident);
}

std::size_t snapshots_to_reach(const CostModel& model,
                               std::size_t fields_per_cell,
                               double target_bytes) {
  const double per_snapshot = memory_estimate(model, fields_per_cell, 1);
  if (!(target_bytes > 0.0)) throw DomainError("target_bytes must be > 0");
  return static_cast<std::size_t>(std::ceil(target_bytes / per_snapshot));
}

double spline_flops_estimate(std::size_t m, std::size_t n_segments,
                             std::size_t r, SplineCost mode) {
  if (m == 0 || n_segments == 0 || r == 0)
    throw DomainError("spline flops estimate needs counts >= 1");
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n_segments);
  switch (mode) {
    case SplineCost::coefficients_dense:
      return 10.0 * md * md * nd;
    case SplineCost::coefficients_sparse:
      return 28.0 * md * nd;
    case SplineCost::evaluation:
      return 8.0 * md * static_cast<double>(r + 1);
  }
  throw DomainError("unknown spline cost mode");
}

}  // namespace flowline::model
