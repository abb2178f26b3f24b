#pragma once

#include <cstddef>

namespace flowline::kernels::detail {

inline constexpr double kThird = 1.0 / 3.0;

// The operation order in these node-level helpers is the contract: SIMD
// variants replicate it exactly (no FMA, no reassociation), and boundary
// fixups in the solver reuse them, so every code path agrees bitwise.

inline double lf_advection_node(double um, double uc, double up,
                                double lam_half) {
  return kThird * ((up + uc) + um) - lam_half * (up - um);
}

inline double lf_burgers_node(double um, double uc, double up, double mu) {
  return kThird * ((up + uc) + um) - (mu * uc) * (up - um);
}

// (a,b,c,d) = T*(p1,p2,v1,v2) with T rows (2,-2,1,1), (-3,3,-2,-1),
// (0,0,1,0), (1,0,0,0).
inline void hermite_block(double* dst, const double* p) {
  const double p1 = p[0], p2 = p[1], v1 = p[2], v2 = p[3];
  dst[0] = ((2.0 * p1 - 2.0 * p2) + v1) + v2;
  dst[1] = ((-3.0 * p1 + 3.0 * p2) - 2.0 * v1) - v2;
  dst[2] = v1;
  dst[3] = p1;
}

// One entry of the C*R product: row (a,b,c,d) against tick column k.
inline double cubic_eval_tick(const double* c, const double* ticks,
                              std::size_t n_ticks, std::size_t k) {
  return ((c[0] * ticks[k] + c[1] * ticks[n_ticks + k]) +
          c[2] * ticks[2 * n_ticks + k]) +
         c[3] * ticks[3 * n_ticks + k];
}

}  // namespace flowline::kernels::detail
