#include "flowline/error_bound.hpp"

#include <cmath>
#include <utility>

#include "flowline/hermite.hpp"
#include "flowline/kernels.hpp"

namespace flowline::bounds {

void BoundParams::validate() const {
  if (!(a_const > 0.0) || !(b_const > 0.0))
    throw DomainError("bound constants A and B must be > 0");
  if (s == 0) throw DomainError("coarsening factor s must be >= 1");
  if (!(lambda_v >= 0.0) || !std::isfinite(lambda_v))
    throw DomainError("lambda_v must be finite and >= 0");
}

double initial_roughness(const ScalarField1D& u0) {
  if (u0.size() < 2)
    throw DomainError("initial roughness needs at least 2 nodes");
  double m0 = 0.0;
  const auto v = u0.values();
  for (std::size_t j = 0; j + 1 < v.size(); ++j) {
    const double d = std::fabs(v[j + 1] - v[j]);
    if (d > m0) m0 = d;
  }
  return m0;
}

double theorem_bound(const BoundParams& params, double m0) {
  params.validate();
  if (!(m0 > 0.0))
    throw HypothesisError("theorem bound requires M0 > 0");
  const double factor =
      (params.a_const + params.b_const * static_cast<double>(params.s)) * m0;
  const double q = params.lambda_v / 2.0;
  double sum = 0.0;
  double term = 1.0;
  for (std::size_t i = 0; i <= params.n_steps; ++i) {
    sum += term;
    term *= q;
  }
  return factor * sum;
}

double corollary_bound(const BoundParams& params, double m0) {
  params.validate();
  if (!(m0 > 0.0))
    throw HypothesisError("corollary bound requires M0 > 0");
  if (!(params.lambda_v < 2.0))
    throw HypothesisError("corollary bound requires lambda_v < 2");
  const double factor =
      params.a_const + params.b_const * static_cast<double>(params.s);
  return 2.0 * factor * m0 / (2.0 - params.lambda_v);
}

namespace {

// Tangents in coarse-index (parameter) units: central differences, wrapped
// in periodic mode (shared-endpoint convention), one-sided at Dirichlet ends.
std::vector<double> coarse_tangents(std::span<const double> w, Boundary bc) {
  const std::size_t n = w.size();
  std::vector<double> tan(n);
  for (std::size_t m = 1; m + 1 < n; ++m)
    tan[m] = (w[m + 1] - w[m - 1]) / 2.0;
  if (bc == Boundary::periodic) {
    tan[0] = (w[1] - w[n - 2]) / 2.0;
    tan[n - 1] = tan[0];
  } else {
    tan[0] = w[1] - w[0];
    tan[n - 1] = w[n - 1] - w[n - 2];
  }
  return tan;
}

std::vector<double> interpolate_values(std::span<const double> w,
                                       std::size_t s, Boundary bc,
                                       const hermite::BlockDiagonalBasis& basis,
                                       const hermite::EvaluationGrid& grid) {
  const std::size_t nc = w.size();
  const std::size_t intervals = nc - 1;
  const std::size_t nf = intervals * s + 1;
  const auto tan = coarse_tangents(w, bc);

  std::vector<double> packed(4 * intervals);
  for (std::size_t m = 0; m < intervals; ++m) {
    packed[4 * m + 0] = w[m];
    packed[4 * m + 1] = w[m + 1];
    packed[4 * m + 2] = tan[m];
    packed[4 * m + 3] = tan[m + 1];
  }
  const auto batch = hermite::HermiteBatch::from_packed(
      hermite::batch_coefficients(basis, packed));
  const auto table = hermite::evaluate_batch(batch, grid);

  std::vector<double> out(nf);
  for (std::size_t m = 0; m < intervals; ++m)
    for (std::size_t q = 1; q < s; ++q) out[m * s + q] = table.at(m, q);
  // Coarse nodes pass through verbatim (the t=0 column equals them bitwise;
  // the t=1 column only up to rounding).
  for (std::size_t m = 0; m < nc; ++m) out[m * s] = w[m];
  return out;
}

}  // namespace

ScalarField1D interpolate_coarse_to_fine(const ScalarField1D& w, std::size_t s,
                                         Boundary bc) {
  if (s == 0) throw DomainError("interpolation needs s >= 1");
  const hermite::BlockDiagonalBasis basis(w.size() - 1);
  const hermite::EvaluationGrid grid(s);
  auto vals = interpolate_values(w.values(), s, bc, basis, grid);
  GridSpec1D fine{w.grid().x0, w.grid().h / static_cast<double>(s),
                  vals.size()};
  return {fine, std::move(vals)};
}

ErrorReport run_comparison(const ScalarField1D& u0,
                           const ComparisonScenario& sc) {
  sc.time.validate();
  if (sc.compare_every == 0)
    throw DomainError("compare_every must be >= 1");

  const ScalarField1D w0 = lf::restrict_field(u0, sc.s);
  const double h = u0.grid().h;
  const auto& K = kernels::table();

  double v_ref = sc.flow_speed;
  if (v_ref <= 0.0) {
    v_ref = sc.equation.kind == lf::Equation::Kind::advection
                ? std::fabs(sc.equation.speed)
                : K.max_abs(u0.values().data(), u0.size());
  }

  ErrorReport report;
  report.params = {sc.a_const, sc.b_const, sc.s, v_ref * sc.time.dt / h,
                   sc.time.n_steps};
  report.params.validate();
  report.m0 = initial_roughness(u0);
  report.bound_theorem = theorem_bound(report.params, report.m0);
  if (report.params.lambda_v < 2.0)
    report.bound_corollary = corollary_bound(report.params, report.m0);

  lf::Marcher fine(u0, sc.equation, sc.time.dt, sc.boundary, "fine grid");
  lf::Marcher coarse(w0, sc.equation, sc.time.dt, sc.boundary, "coarse grid");

  const hermite::BlockDiagonalBasis basis(w0.size() - 1);
  const hermite::EvaluationGrid grid(sc.s);
  const std::size_t nf = u0.size();
  std::vector<double> err(nf);

  auto compare = [&](std::size_t step) {
    const auto v =
        interpolate_values(coarse.values(), sc.s, sc.boundary, basis, grid);
    const auto u = fine.values();
    double emax = 0.0;
    for (std::size_t j = 0; j < nf; ++j) {
      err[j] = std::fabs(v[j] - u[j]);
      if (err[j] > emax) emax = err[j];
    }
    if (emax >= report.max_error) {
      // ">=" so step 0 populates the profile even for the s=1 zero-error case
      if (emax > report.max_error || report.u_at_max.empty()) {
        report.max_error = emax;
        report.max_error_step = step;
        report.error_profile = err;
        report.u_at_max.assign(u.begin(), u.end());
        report.v_at_max = v;
      }
    }
  };

  compare(0);
  for (std::size_t n = 1; n <= sc.time.n_steps; ++n) {
    fine.advance();
    coarse.advance();
    if (n % sc.compare_every == 0) compare(n);
  }

  const double bound_used =
      report.bound_corollary ? *report.bound_corollary : report.bound_theorem;
  report.margin_ratio = report.max_error / bound_used;
  return report;
}

}  // namespace flowline::bounds
