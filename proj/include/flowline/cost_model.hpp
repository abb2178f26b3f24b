#pragma once

#include <array>
#include <cstddef>

#include "flowline/errors.hpp"

namespace flowline::model {

// Flops/memory model for an explicit solve on a 3D grid under CFL.
struct CostModel {
  std::array<double, 3> domain_extents{10.0, 10.0, 1000.0};  // cm
  double h = 0.5;                    // cm
  double v_max = 50.0;               // cm/s
  double duration = 60.0;            // simulated seconds
  double cfl_constant = 1.0;
  double flops_per_cell_update = 10.0;  // the model parameter k

  void validate() const;
  unsigned long long cell_count() const;  // product of ceil(extent/h)
};

struct FlopsBreakdown {
  double steps = 0.0;
  unsigned long long cells = 0;
  double total_flops = 0.0;
};

// steps = duration / cfl_max_dt(h, v_max, c); flops = k * cells * steps.
FlopsBreakdown flops_estimate(const CostModel& model);

// bytes = cells * fields_per_cell * 8 * snapshots_resident.
double memory_estimate(const CostModel& model, std::size_t fields_per_cell,
                       std::size_t snapshots_resident);

// Smallest resident snapshot count whose footprint reaches target_bytes.
std::size_t snapshots_to_reach(const CostModel& model,
                               std::size_t fields_per_cell,
                               double target_bytes);

enum class SplineCost { coefficients_dense, coefficients_sparse, evaluation };

// coefficients_dense: 10*M^2*N (the full 4M x 4M product);
// coefficients_sparse: 28*M*N (16 multiplies + 12 adds per T block);
// evaluation: 8*M*(r+1) per segment product.
double spline_flops_estimate(std::size_t m, std::size_t n_segments,
                             std::size_t r, SplineCost mode);

}  // namespace flowline::model
