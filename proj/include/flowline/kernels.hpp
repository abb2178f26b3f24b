#pragma once

#include <cstddef>
#include <string_view>

namespace flowline::kernels {

// Inner arithmetic kernels. Each entry has a scalar reference implementation
// and may have SIMD variants; all variants of one entry produce bitwise
// identical output (same operation order, no FMA), so higher layers may use
// whatever the dispatcher selected without affecting results.
struct KernelTable {
  // dst[j] = (1/3)*((u[j+1]+u[j])+u[j-1]) - lam_half*(u[j+1]-u[j-1]),
  // interior nodes j in [1, n-2]; boundary nodes untouched.
  void (*lf_advection_interior)(double* dst, const double* u, std::size_t n,
                                double lam_half);

  // dst[j] = (1/3)*((u[j+1]+u[j])+u[j-1]) - (mu*u[j])*(u[j+1]-u[j-1]),
  // interior nodes j in [1, n-2].
  void (*lf_burgers_interior)(double* dst, const double* u, std::size_t n,
                              double mu);

  // For each of m consecutive 4-blocks (p1,p2,v1,v2) of p, writes the cubic
  // coefficients (a,b,c,d) = T*(p1,p2,v1,v2) to the matching block of dst.
  void (*hermite_blocks)(double* dst, const double* p, std::size_t m);

  // coeffs: m x 4 row-major (a,b,c,d per row); ticks: 4 rows of n_ticks
  // (t^3 row, t^2 row, t row, ones row); dst: m x n_ticks row-major.
  void (*cubic_eval_rows)(double* dst, const double* coeffs, std::size_t m,
                          const double* ticks, std::size_t n_ticks);

  // max_i |x[i]|; 0 for n == 0.
  double (*max_abs)(const double* x, std::size_t n);
};

enum class Backend { scalar, avx2 };

bool available(Backend b);
Backend active_backend();
// Throws std::invalid_argument if the backend is unavailable on this host.
// Not safe against concurrently running kernels; set it up front.
void set_backend(Backend b);

const KernelTable& table();           // active backend
const KernelTable& table(Backend b);  // explicit backend, throws if unavailable
std::string_view backend_name(Backend b);

}  // namespace flowline::kernels
