// AVX2 variants. Element-for-element the same multiply/add trees as the
// scalar reference (no FMA), so outputs are bitwise identical; the scalar
// helpers handle loop tails.

#if defined(FLOWLINE_HAVE_AVX2)

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "kernels_detail.hpp"
#include "tables.hpp"

namespace flowline::kernels {
namespace {

void lf_advection_avx2(double* dst, const double* u, std::size_t n,
                       double lam_half) {
  const __m256d third = _mm256_set1_pd(detail::kThird);
  const __m256d lam = _mm256_set1_pd(lam_half);
  std::size_t j = 1;
  if (n >= 5) {
    for (; j + 4 <= n - 1; j += 4) {
      const __m256d um = _mm256_loadu_pd(u + j - 1);
      const __m256d uc = _mm256_loadu_pd(u + j);
      const __m256d up = _mm256_loadu_pd(u + j + 1);
      const __m256d sum = _mm256_add_pd(_mm256_add_pd(up, uc), um);
      const __m256d diff = _mm256_sub_pd(up, um);
      _mm256_storeu_pd(dst + j, _mm256_sub_pd(_mm256_mul_pd(third, sum),
                                              _mm256_mul_pd(lam, diff)));
    }
  }
  for (; j + 1 < n; ++j)
    dst[j] = detail::lf_advection_node(u[j - 1], u[j], u[j + 1], lam_half);
}

void lf_burgers_avx2(double* dst, const double* u, std::size_t n, double mu) {
  const __m256d third = _mm256_set1_pd(detail::kThird);
  const __m256d vmu = _mm256_set1_pd(mu);
  std::size_t j = 1;
  if (n >= 5) {
    for (; j + 4 <= n - 1; j += 4) {
      const __m256d um = _mm256_loadu_pd(u + j - 1);
      const __m256d uc = _mm256_loadu_pd(u + j);
      const __m256d up = _mm256_loadu_pd(u + j + 1);
      const __m256d sum = _mm256_add_pd(_mm256_add_pd(up, uc), um);
      const __m256d diff = _mm256_sub_pd(up, um);
      const __m256d adv = _mm256_mul_pd(_mm256_mul_pd(vmu, uc), diff);
      _mm256_storeu_pd(dst + j,
                       _mm256_sub_pd(_mm256_mul_pd(third, sum), adv));
    }
  }
  for (; j + 1 < n; ++j)
    dst[j] = detail::lf_burgers_node(u[j - 1], u[j], u[j + 1], mu);
}

// Four trajectory blocks at a time: transpose to component vectors, apply T,
// transpose back.
void hermite_blocks_avx2(double* dst, const double* p, std::size_t m) {
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d three = _mm256_set1_pd(3.0);
  const __m256d mthree = _mm256_set1_pd(-3.0);
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    const double* q = p + 4 * i;
    const __m256d r0 = _mm256_loadu_pd(q);
    const __m256d r1 = _mm256_loadu_pd(q + 4);
    const __m256d r2 = _mm256_loadu_pd(q + 8);
    const __m256d r3 = _mm256_loadu_pd(q + 12);
    const __m256d t0 = _mm256_unpacklo_pd(r0, r1);
    const __m256d t1 = _mm256_unpackhi_pd(r0, r1);
    const __m256d t2 = _mm256_unpacklo_pd(r2, r3);
    const __m256d t3 = _mm256_unpackhi_pd(r2, r3);
    const __m256d p1 = _mm256_permute2f128_pd(t0, t2, 0x20);
    const __m256d p2 = _mm256_permute2f128_pd(t1, t3, 0x20);
    const __m256d v1 = _mm256_permute2f128_pd(t0, t2, 0x31);
    const __m256d v2 = _mm256_permute2f128_pd(t1, t3, 0x31);

    // a = ((2*p1 - 2*p2) + v1) + v2
    const __m256d a = _mm256_add_pd(
        _mm256_add_pd(
            _mm256_sub_pd(_mm256_mul_pd(two, p1), _mm256_mul_pd(two, p2)), v1),
        v2);
    // b = ((-3*p1 + 3*p2) - 2*v1) - v2
    const __m256d b = _mm256_sub_pd(
        _mm256_sub_pd(_mm256_add_pd(_mm256_mul_pd(mthree, p1),
                                    _mm256_mul_pd(three, p2)),
                      _mm256_mul_pd(two, v1)),
        v2);
    const __m256d c = v1;
    const __m256d d = p1;

    const __m256d u0 = _mm256_unpacklo_pd(a, b);
    const __m256d u1 = _mm256_unpackhi_pd(a, b);
    const __m256d u2 = _mm256_unpacklo_pd(c, d);
    const __m256d u3 = _mm256_unpackhi_pd(c, d);
    double* out = dst + 4 * i;
    _mm256_storeu_pd(out, _mm256_permute2f128_pd(u0, u2, 0x20));
    _mm256_storeu_pd(out + 4, _mm256_permute2f128_pd(u1, u3, 0x20));
    _mm256_storeu_pd(out + 8, _mm256_permute2f128_pd(u0, u2, 0x31));
    _mm256_storeu_pd(out + 12, _mm256_permute2f128_pd(u1, u3, 0x31));
  }
  for (; i < m; ++i) detail::hermite_block(dst + 4 * i, p + 4 * i);
}

void cubic_eval_rows_avx2(double* dst, const double* coeffs, std::size_t m,
                          const double* ticks, std::size_t n_ticks) {
  const double* row_t3 = ticks;
  const double* row_t2 = ticks + n_ticks;
  const double* row_t1 = ticks + 2 * n_ticks;
  const double* row_1 = ticks + 3 * n_ticks;
  for (std::size_t i = 0; i < m; ++i) {
    const double* c = coeffs + 4 * i;
    double* out = dst + i * n_ticks;
    const __m256d a = _mm256_set1_pd(c[0]);
    const __m256d b = _mm256_set1_pd(c[1]);
    const __m256d cc = _mm256_set1_pd(c[2]);
    const __m256d d = _mm256_set1_pd(c[3]);
    std::size_t k = 0;
    for (; k + 4 <= n_ticks; k += 4) {
      // ((a*t^3 + b*t^2) + c*t) + d*1, same tree as the scalar helper
      const __m256d y = _mm256_add_pd(
          _mm256_add_pd(
              _mm256_add_pd(_mm256_mul_pd(a, _mm256_loadu_pd(row_t3 + k)),
                            _mm256_mul_pd(b, _mm256_loadu_pd(row_t2 + k))),
              _mm256_mul_pd(cc, _mm256_loadu_pd(row_t1 + k))),
          _mm256_mul_pd(d, _mm256_loadu_pd(row_1 + k)));
      _mm256_storeu_pd(out + k, y);
    }
    for (; k < n_ticks; ++k)
      out[k] = detail::cubic_eval_tick(c, ticks, n_ticks, k);
  }
}

double max_abs_avx2(const double* x, std::size_t n) {
  const __m256d absmask =
      _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  __m256d vm = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    vm = _mm256_max_pd(vm, _mm256_and_pd(absmask, _mm256_loadu_pd(x + i)));
  double lanes[4];
  _mm256_storeu_pd(lanes, vm);
  double m = std::max(std::max(lanes[0], lanes[1]),
                      std::max(lanes[2], lanes[3]));
  for (; i < n; ++i) {
    const double a = std::fabs(x[i]);
    if (a > m) m = a;
  }
  return m;
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable t{lf_advection_avx2, lf_burgers_avx2,
                             hermite_blocks_avx2, cubic_eval_rows_avx2,
                             max_abs_avx2};
  return t;
}

}  // namespace flowline::kernels

#endif  // FLOWLINE_HAVE_AVX2
