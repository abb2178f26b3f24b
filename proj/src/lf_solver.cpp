#include "flowline/lf_solver.hpp"

#include <cmath>
#include <utility>

#include "flowline/kernels.hpp"
#include "kernels/kernels_detail.hpp"

namespace flowline::lf {

namespace kd = kernels::detail;

double cfl_max_dt(double h, double v_max, double c) {
  if (!(h > 0.0)) throw DomainError("cfl_max_dt: h must be > 0");
  if (!(v_max > 0.0)) throw DomainError("cfl_max_dt: v_max must be > 0");
  if (!(c > 0.0) || c > 1.0)
    throw DomainError("cfl_max_dt: c must lie in (0, 1]");
  return c * h / v_max;
}

namespace {

void step_buffers(std::vector<double>& next, const std::vector<double>& cur,
                  const Equation& eq, double dt, double h, Boundary bc) {
  const std::size_t n = cur.size();
  const auto& K = kernels::table();
  if (eq.kind == Equation::Kind::advection) {
    const double lam_half = eq.speed * dt / (2.0 * h);
    K.lf_advection_interior(next.data(), cur.data(), n, lam_half);
    if (bc == Boundary::periodic) {
      next[0] = kd::lf_advection_node(cur[n - 2], cur[0], cur[1], lam_half);
      next[n - 1] =
          kd::lf_advection_node(cur[n - 2], cur[n - 1], cur[1], lam_half);
    } else {
      next[0] = cur[0];
      next[n - 1] = cur[n - 1];
    }
  } else {
    const double mu = dt / (2.0 * h);
    K.lf_burgers_interior(next.data(), cur.data(), n, mu);
    if (bc == Boundary::periodic) {
      next[0] = kd::lf_burgers_node(cur[n - 2], cur[0], cur[1], mu);
      next[n - 1] = kd::lf_burgers_node(cur[n - 2], cur[n - 1], cur[1], mu);
    } else {
      next[0] = cur[0];
      next[n - 1] = cur[n - 1];
    }
  }
}

}  // namespace

Marcher::Marcher(const ScalarField1D& initial, const Equation& eq, double dt,
                 Boundary bc, std::string label)
    : grid_(initial.grid()),
      eq_(eq),
      dt_(dt),
      bc_(bc),
      label_(std::move(label)),
      cur_(initial.values().begin(), initial.values().end()),
      next_(initial.size()) {
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw DomainError("time step dt must be finite and > 0");
  sup_ = kernels::table().max_abs(cur_.data(), cur_.size());
}

double Marcher::cfl_number() const {
  const double v =
      eq_.kind == Equation::Kind::advection ? std::fabs(eq_.speed) : sup_;
  return v * dt_ / grid_.h;
}

void Marcher::advance() {
  const double cfl = cfl_number();
  if (cfl > 1.0) throw CflError(cfl, step_ + 1, label_);
  step_buffers(next_, cur_, eq_, dt_, grid_.h, bc_);
  cur_.swap(next_);
  ++step_;
  sup_ = kernels::table().max_abs(cur_.data(), cur_.size());
  if (!std::isfinite(sup_)) throw BlowUpError(step_, label_);
}

ScalarField1D step_advection(const ScalarField1D& u, double dt, double speed,
                             Boundary bc) {
  Marcher m(u, Equation::advection(speed), dt, bc);
  m.advance();
  return m.field();
}

ScalarField1D step_burgers(const ScalarField1D& u, double dt, Boundary bc) {
  Marcher m(u, Equation::burgers(), dt, bc);
  m.advance();
  return m.field();
}

SolutionHistory run(const ScalarField1D& initial, const TimeSpec& time,
                    const Equation& eq, std::size_t store_every, Boundary bc) {
  time.validate();
  if (store_every == 0) throw DomainError("store_every must be >= 1");

  SolutionHistory hist;
  hist.time_spec = time;
  Marcher m(initial, eq, time.dt, bc);
  auto store = [&] {
    hist.fields.push_back(m.field());
    hist.steps.push_back(m.step());
    hist.norm_history.push_back(m.sup());
  };
  store();
  for (std::size_t n = 1; n <= time.n_steps; ++n) {
    m.advance();
    if (n % store_every == 0) store();
  }
  return hist;
}

ScalarField1D restrict_field(const ScalarField1D& fine, std::size_t s) {
  if (s == 0) throw DomainError("coarsening factor s must be >= 1");
  const std::size_t n = fine.size();
  if ((n - 1) % s != 0)
    throw DomainError("restrict: (n_nodes - 1) must be divisible by s");
  const std::size_t nc = (n - 1) / s + 1;
  std::vector<double> vals(nc);
  for (std::size_t j = 0; j < nc; ++j) vals[j] = fine[j * s];
  GridSpec1D cg{fine.grid().x0, fine.grid().h * static_cast<double>(s), nc};
  return {cg, std::move(vals)};
}

}  // namespace flowline::lf
