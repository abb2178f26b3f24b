#include <cmath>

#include "kernels_detail.hpp"
#include "tables.hpp"

namespace flowline::kernels {
namespace {

void lf_advection_scalar(double* dst, const double* u, std::size_t n,
                         double lam_half) {
  for (std::size_t j = 1; j + 1 < n; ++j)
    dst[j] = detail::lf_advection_node(u[j - 1], u[j], u[j + 1], lam_half);
}

void lf_burgers_scalar(double* dst, const double* u, std::size_t n,
                       double mu) {
  for (std::size_t j = 1; j + 1 < n; ++j)
    dst[j] = detail::lf_burgers_node(u[j - 1], u[j], u[j + 1], mu);
}

void hermite_blocks_scalar(double* dst, const double* p, std::size_t m) {
  for (std::size_t i = 0; i < m; ++i)
    detail::hermite_block(dst + 4 * i, p + 4 * i);
}

void cubic_eval_rows_scalar(double* dst, const double* coeffs, std::size_t m,
                            const double* ticks, std::size_t n_ticks) {
  for (std::size_t i = 0; i < m; ++i) {
    const double* c = coeffs + 4 * i;
    double* out = dst + i * n_ticks;
    for (std::size_t k = 0; k < n_ticks; ++k)
      out[k] = detail::cubic_eval_tick(c, ticks, n_ticks, k);
  }
}

double max_abs_scalar(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = std::fabs(x[i]);
    if (a > m) m = a;
  }
  return m;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable t{lf_advection_scalar, lf_burgers_scalar,
                             hermite_blocks_scalar, cubic_eval_rows_scalar,
                             max_abs_scalar};
  return t;
}

}  // namespace flowline::kernels
