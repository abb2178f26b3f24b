#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "flowline/grid.hpp"

namespace flowline::lf {

// Largest admissible time step, c*h/v_max.
double cfl_max_dt(double h, double v_max, double c);

struct Equation {
  enum class Kind { advection, burgers };

  Kind kind = Kind::advection;
  double speed = 0.0;  // transport speed; unused for burgers

  static Equation advection(double speed) {
    return {Kind::advection, speed};
  }
  static Equation burgers() { return {Kind::burgers, 0.0}; }
};

// One explicit step of the modified (three-point average) Lax-Friedrichs
// schema. The step is rejected with CflError when the CFL number exceeds 1.
ScalarField1D step_advection(const ScalarField1D& u, double dt, double speed,
                             Boundary bc = Boundary::periodic);
ScalarField1D step_burgers(const ScalarField1D& u, double dt,
                           Boundary bc = Boundary::periodic);

// In-place sequential time stepping over raw buffers; the building block for
// run() and for the two-grid comparison harness. One Marcher per run; a
// single run is sequential, distinct Marchers are independent.
class Marcher {
 public:
  Marcher(const ScalarField1D& initial, const Equation& eq, double dt,
          Boundary bc, std::string label = {});

  // Advances one step. Throws CflError (gate at CFL number 1) or
  // BlowUpError, both carrying the attempted step index.
  void advance();

  std::size_t step() const { return step_; }
  std::span<const double> values() const { return cur_; }
  double sup() const { return sup_; }
  double cfl_number() const;  // for the NEXT step request
  const GridSpec1D& grid() const { return grid_; }
  ScalarField1D field() const { return {grid_, cur_}; }

 private:
  GridSpec1D grid_;
  Equation eq_;
  double dt_;
  Boundary bc_;
  std::string label_;
  std::vector<double> cur_, next_;
  double sup_ = 0.0;
  std::size_t step_ = 0;
};

// Time loop storing the initial level plus every store_every-th level.
SolutionHistory run(const ScalarField1D& initial, const TimeSpec& time,
                    const Equation& eq, std::size_t store_every,
                    Boundary bc = Boundary::periodic);

// Every s-th sample of a fine field, on grid step s*h. Requires
// (n_nodes - 1) divisible by s.
ScalarField1D restrict_field(const ScalarField1D& fine, std::size_t s);

}  // namespace flowline::lf
