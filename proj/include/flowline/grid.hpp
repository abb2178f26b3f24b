#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "flowline/errors.hpp"

namespace flowline {

// Uniform 1D grid. In periodic mode the first and last nodes are the same
// physical point (u[0] == u[n-1]); the stencil wraps through indices n-2
// and 1, and the period is (n_nodes - 1) * h.
struct GridSpec1D {
  double x0 = 0.0;
  double h = 1.0;
  std::size_t n_nodes = 0;

  void validate() const;
  double position(std::size_t j) const {
    return x0 + h * static_cast<double>(j);
  }
  double length() const { return h * static_cast<double>(n_nodes - 1); }
  bool operator==(const GridSpec1D&) const = default;
};

struct TimeSpec {
  double dt = 0.0;
  std::size_t n_steps = 0;
  double cfl_constant = 1.0;

  void validate() const;
};

enum class Boundary { periodic, dirichlet };

// Discrete solution on one time level. Immutable after construction;
// construction checks the length and finiteness invariants.
class ScalarField1D {
 public:
  ScalarField1D(GridSpec1D grid, std::vector<double> values);

  const GridSpec1D& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t j) const { return values_[j]; }
  std::size_t size() const { return values_.size(); }
  double sup_norm() const;

 private:
  GridSpec1D grid_;
  std::vector<double> values_;
};

// ||u|| = K * sup_j |u_j| with 0 < K <= 1/2.
struct StabilityNorm {
  double k_constant = 0.5;

  void validate() const;
  double operator()(const ScalarField1D& f) const;
};

struct SolutionHistory {
  std::vector<ScalarField1D> fields;
  std::vector<std::size_t> steps;  // time-step index of each stored level
  TimeSpec time_spec;
  std::vector<double> norm_history;  // sup norm per stored level
};

}  // namespace flowline
