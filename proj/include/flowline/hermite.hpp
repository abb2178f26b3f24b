#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "flowline/errors.hpp"

namespace flowline::hermite {

// Row-major table of doubles; the shape of C*R products.
struct DenseTable {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;

  double at(std::size_t r, std::size_t c) const {
    return values[r * cols + c];
  }
};

// s(t) = a*t^3 + b*t^2 + c*t + d on t in [0, 1], one spatial component.
struct HermiteCubic {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

  double value(double t) const { return ((a * t + b) * t + c) * t + d; }
  double derivative(double t) const { return (3.0 * a * t + 2.0 * b) * t + c; }
};

// Segment endpoints and tangents in parameter units (length per unit t).
struct SegmentData {
  double p1 = 0.0, p2 = 0.0, v1 = 0.0, v2 = 0.0;
};

using Matrix4 = std::array<std::array<double, 4>, 4>;

// The constant 4x4 basis matrix T with (a,b,c,d) = T*(p1,p2,v1,v2).
Matrix4 basis_matrix_t();

// Coefficients of the cubic through (p1, v1) at t=0 and (p2, v2) at t=1.
HermiteCubic coefficients(const SegmentData& seg);

// The 4M x 4M global matrix G = block-diag(T, ..., T), stored as one shared
// T block plus the trajectory count. Density is exactly 1/M.
class BlockDiagonalBasis {
 public:
  explicit BlockDiagonalBasis(std::size_t m_trajectories);

  std::size_t trajectories() const { return m_; }
  std::size_t logical_dim() const { return 4 * m_; }
  std::size_t nonzero_count() const { return 16 * m_; }
  unsigned long long dense_entry_count() const {
    const unsigned long long d = 4ull * m_;
    return d * d;
  }
  double density() const { return 1.0 / static_cast<double>(m_); }
  std::size_t stored_bytes() const { return sizeof(*this); }
  const Matrix4& block() const { return block_; }

  // Full 4M x 4M matrix for verification only; rejected above 64 blocks.
  std::vector<std::vector<double>> to_dense() const;

 private:
  std::size_t m_;
  Matrix4 block_;
};

// Generic block-diagonal storage (every block held explicitly, one offset per
// block). Exists to benchmark the shared-structure representation against;
// the product matches batch_coefficients bitwise.
class GenericBlockDiagonal {
 public:
  static GenericBlockDiagonal replicate(const BlockDiagonalBasis& basis);

  std::size_t trajectories() const { return offsets_.size(); }
  std::size_t stored_bytes() const;
  std::vector<double> multiply(std::span<const double> p) const;

 private:
  GenericBlockDiagonal() = default;
  std::vector<double> blocks_;        // 16 values per block
  std::vector<std::size_t> offsets_;  // start of each block's diagonal
};

// The product Gp: block i of the result is T*(block i of p). Layout is
// trajectory-major blocks (p1, p2, v1, v2).
std::vector<double> batch_coefficients(const BlockDiagonalBasis& basis,
                                       std::span<const double> p);
// In-place variant for callers reusing the output across many products.
void batch_coefficients(const BlockDiagonalBasis& basis,
                        std::span<const double> p, std::vector<double>& out);

// The M x 4 coefficient table C, rows (a_i, b_i, c_i, d_i).
class HermiteBatch {
 public:
  HermiteBatch(std::size_t m_trajectories, std::vector<double> coeffs);

  // Adopts a Gp product (length 4M) as the coefficient table; the layouts
  // coincide.
  static HermiteBatch from_packed(std::vector<double> gp_output);

  std::size_t trajectories() const { return m_; }
  std::span<const double> coefficients() const { return coeffs_; }
  HermiteCubic cubic(std::size_t i) const {
    const double* c = coeffs_.data() + 4 * i;
    return {c[0], c[1], c[2], c[3]};
  }
  // Hands the coefficient storage back for reuse across segment products.
  std::vector<double> release() && { return std::move(coeffs_); }

 private:
  std::size_t m_;
  std::vector<double> coeffs_;
};

// The constant 4 x (r+1) matrix R: column k is ((k/r)^3, (k/r)^2, k/r, 1).
// Stored as four contiguous rows for the row-partitioned product.
class EvaluationGrid {
 public:
  explicit EvaluationGrid(std::size_t r);

  std::size_t ticks_per_cubic() const { return r_; }
  std::size_t n_columns() const { return r_ + 1; }
  double tick(std::size_t k) const;  // k/r
  std::array<double, 4> column(std::size_t k) const;
  const double* rows_data() const { return rows_.data(); }

 private:
  std::size_t r_;
  std::vector<double> rows_;  // 4 rows of (r+1) values
};

// The M x (r+1) product C*R: entry (i,k) = a_i*t_k^3 + b_i*t_k^2 + c_i*t_k + d_i.
DenseTable evaluate_batch(const HermiteBatch& batch,
                          const EvaluationGrid& grid);

// Same product with rows split into `workers` contiguous ranges, one thread
// each, writing disjoint slices of a pre-sized table. Bitwise identical to
// evaluate_batch for every admissible worker count. Requires mod(M, p) = 0.
DenseTable evaluate_batch_partitioned(const HermiteBatch& batch,
                                      const EvaluationGrid& grid,
                                      std::size_t workers);
// In-place variant; resizes `out` to M x (r+1).
void evaluate_batch_partitioned(const HermiteBatch& batch,
                                const EvaluationGrid& grid,
                                std::size_t workers, DenseTable& out);

}  // namespace flowline::hermite
