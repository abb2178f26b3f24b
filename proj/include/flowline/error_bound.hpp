#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "flowline/grid.hpp"
#include "flowline/lf_solver.hpp"

namespace flowline::bounds {

struct BoundParams {
  double a_const = 8.0;
  double b_const = 2.0;
  std::size_t s = 1;       // coarsening factor
  double lambda_v = 0.0;   // CFL number v*dt/h of the fine grid
  std::size_t n_steps = 0;

  void validate() const;
};

struct ErrorReport {
  double m0 = 0.0;
  BoundParams params;
  double bound_theorem = 0.0;
  std::optional<double> bound_corollary;  // present iff lambda_v < 2
  double max_error = 0.0;
  std::size_t max_error_step = 0;
  std::vector<double> error_profile;  // |v - u| per fine node at that step
  std::vector<double> u_at_max;       // fine solution at that step
  std::vector<double> v_at_max;       // interpolated coarse solution there
  double margin_ratio = 0.0;          // max_error / bound used
};

// M_0 = max over adjacent node pairs of |u0[m] - u0[n]|.
double initial_roughness(const ScalarField1D& u0);

// (A + B*s) * M0 * sum_{i=0}^{N} (lambda_v/2)^i, summed in order i = 0..N.
// Requires M0 > 0 (theorem hypothesis).
double theorem_bound(const BoundParams& params, double m0);

// 2*(A + B*s)*M0 / (2 - lambda_v). Requires lambda_v < 2 and M0 > 0.
double corollary_bound(const BoundParams& params, double m0);

// Per coarse interval, the Hermite cubic with endpoint values w_m, w_{m+1}
// and central-difference tangents (one-sided at Dirichlet ends, wrapped in
// periodic mode), evaluated at s+1 equispaced ticks. Coarse-node values pass
// through exactly.
ScalarField1D interpolate_coarse_to_fine(const ScalarField1D& w, std::size_t s,
                                         Boundary bc = Boundary::periodic);

struct ComparisonScenario {
  std::size_t s = 10;
  TimeSpec time;
  lf::Equation equation = lf::Equation::burgers();
  Boundary boundary = Boundary::periodic;
  double a_const = 8.0;
  double b_const = 2.0;
  std::size_t compare_every = 1;
  // Reference speed defining lambda_v = flow_speed*dt/h. Zero means derive
  // it from the data: |speed| for advection, sup|u0| for burgers. The
  // per-step CFL gate is independent of this value.
  double flow_speed = 0.0;
};

// Runs fine LF (u) and coarse LF (w, same dt, step s*h), interpolates w to
// the fine grid at every compared instant, and reports the measured maximum
// of |v_n - u_n| against the theorem and corollary bounds.
ErrorReport run_comparison(const ScalarField1D& u0,
                           const ComparisonScenario& scenario);

}  // namespace flowline::bounds
