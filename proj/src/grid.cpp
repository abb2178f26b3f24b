#include "flowline/grid.hpp"

#include <cmath>
#include <utility>

#include "flowline/kernels.hpp"

namespace flowline {

void GridSpec1D::validate() const {
  if (!(h > 0.0)) throw DomainError("grid step h must be > 0");
  if (n_nodes < 3)
    throw DomainError("grid needs at least 3 nodes for the 3-point stencil");
  if (!std::isfinite(x0) || !std::isfinite(h))
    throw DomainError("grid origin and step must be finite");
}

void TimeSpec::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw DomainError("time step dt must be finite and > 0");
  if (!(cfl_constant > 0.0) || cfl_constant > 1.0)
    throw DomainError("CFL constant c must lie in (0, 1]");
}

ScalarField1D::ScalarField1D(GridSpec1D grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  grid_.validate();
  if (values_.size() != grid_.n_nodes)
    throw DomainError("field length does not match grid node count");
  for (double v : values_)
    if (!std::isfinite(v)) throw DomainError("field values must be finite");
}

double ScalarField1D::sup_norm() const {
  return kernels::table().max_abs(values_.data(), values_.size());
}

void StabilityNorm::validate() const {
  if (!(k_constant > 0.0) || k_constant > 0.5)
    throw DomainError("stability norm constant K must lie in (0, 1/2]");
}

double StabilityNorm::operator()(const ScalarField1D& f) const {
  validate();
  return k_constant * f.sup_norm();
}

}  // namespace flowline
