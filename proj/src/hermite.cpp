#include "flowline/hermite.hpp"

#include <cmath>
#include <thread>
#include <utility>

#include "flowline/kernels.hpp"
#include "kernels/kernels_detail.hpp"

namespace flowline::hermite {

Matrix4 basis_matrix_t() {
  return {{{2.0, -2.0, 1.0, 1.0},
           {-3.0, 3.0, -2.0, -1.0},
           {0.0, 0.0, 1.0, 0.0},
           {1.0, 0.0, 0.0, 0.0}}};
}

HermiteCubic coefficients(const SegmentData& seg) {
  for (double v : {seg.p1, seg.p2, seg.v1, seg.v2})
    if (!std::isfinite(v))
      throw DomainError("hermite coefficients need finite segment data");
  const double p[4] = {seg.p1, seg.p2, seg.v1, seg.v2};
  double c[4];
  kernels::detail::hermite_block(c, p);
  return {c[0], c[1], c[2], c[3]};
}

BlockDiagonalBasis::BlockDiagonalBasis(std::size_t m_trajectories)
    : m_(m_trajectories), block_(basis_matrix_t()) {
  if (m_ == 0) throw DomainError("global basis needs at least one trajectory");
}

std::vector<std::vector<double>> BlockDiagonalBasis::to_dense() const {
  if (m_ > 64)
    throw DomainError("dense form of G is only materialized for M <= 64");
  const std::size_t n = logical_dim();
  std::vector<std::vector<double>> g(n, std::vector<double>(n, 0.0));
  for (std::size_t blk = 0; blk < m_; ++blk)
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c)
        g[4 * blk + r][4 * blk + c] = block_[r][c];
  return g;
}

GenericBlockDiagonal GenericBlockDiagonal::replicate(
    const BlockDiagonalBasis& basis) {
  GenericBlockDiagonal g;
  const std::size_t m = basis.trajectories();
  g.blocks_.resize(16 * m);
  g.offsets_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    g.offsets_[i] = 4 * i;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c)
        g.blocks_[16 * i + 4 * r + c] = basis.block()[r][c];
  }
  return g;
}

std::size_t GenericBlockDiagonal::stored_bytes() const {
  return blocks_.size() * sizeof(double) +
         offsets_.size() * sizeof(std::size_t);
}

std::vector<double> GenericBlockDiagonal::multiply(
    std::span<const double> p) const {
  const std::size_t m = offsets_.size();
  if (p.size() != 4 * m)
    throw DomainError("generic block-diagonal product: length(p) != 4M");
  std::vector<double> out(4 * m);
  for (std::size_t i = 0; i < m; ++i) {
    const double* blk = blocks_.data() + 16 * i;
    const double* x = p.data() + offsets_[i];
    double* y = out.data() + offsets_[i];
    for (std::size_t r = 0; r < 4; ++r) {
      const double* row = blk + 4 * r;
      y[r] = ((row[0] * x[0] + row[1] * x[1]) + row[2] * x[2]) +
             row[3] * x[3];
    }
  }
  return out;
}

std::vector<double> batch_coefficients(const BlockDiagonalBasis& basis,
                                       std::span<const double> p) {
  std::vector<double> out;
  batch_coefficients(basis, p, out);
  return out;
}

void batch_coefficients(const BlockDiagonalBasis& basis,
                        std::span<const double> p, std::vector<double>& out) {
  const std::size_t m = basis.trajectories();
  if (p.size() != 4 * m)
    throw DomainError("batch_coefficients: length(p) != 4M");
  out.resize(4 * m);
  kernels::table().hermite_blocks(out.data(), p.data(), m);
}

HermiteBatch::HermiteBatch(std::size_t m_trajectories,
                           std::vector<double> coeffs)
    : m_(m_trajectories), coeffs_(std::move(coeffs)) {
  if (m_ == 0) throw DomainError("coefficient batch needs M >= 1");
  if (coeffs_.size() != 4 * m_)
    throw DomainError("coefficient batch must be M x 4");
}

HermiteBatch HermiteBatch::from_packed(std::vector<double> gp_output) {
  if (gp_output.empty() || gp_output.size() % 4 != 0)
    throw DomainError("packed coefficient vector length must be 4M");
  const std::size_t m = gp_output.size() / 4;
  return {m, std::move(gp_output)};
}

EvaluationGrid::EvaluationGrid(std::size_t r) : r_(r) {
  if (r_ == 0) throw DomainError("evaluation grid needs r >= 1");
  const std::size_t k = r_ + 1;
  rows_.resize(4 * k);
  for (std::size_t i = 0; i <= r_; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(r_);
    rows_[i] = (t * t) * t;
    rows_[k + i] = t * t;
    rows_[2 * k + i] = t;
    rows_[3 * k + i] = 1.0;
  }
}

double EvaluationGrid::tick(std::size_t k) const {
  if (k > r_) throw DomainError("tick index out of range");
  return rows_[2 * (r_ + 1) + k];
}

std::array<double, 4> EvaluationGrid::column(std::size_t k) const {
  if (k > r_) throw DomainError("tick index out of range");
  const std::size_t n = r_ + 1;
  return {rows_[k], rows_[n + k], rows_[2 * n + k], rows_[3 * n + k]};
}

DenseTable evaluate_batch(const HermiteBatch& batch,
                          const EvaluationGrid& grid) {
  return evaluate_batch_partitioned(batch, grid, 1);
}

DenseTable evaluate_batch_partitioned(const HermiteBatch& batch,
                                      const EvaluationGrid& grid,
                                      std::size_t workers) {
  DenseTable out;
  evaluate_batch_partitioned(batch, grid, workers, out);
  return out;
}

void evaluate_batch_partitioned(const HermiteBatch& batch,
                                const EvaluationGrid& grid,
                                std::size_t workers, DenseTable& out) {
  const std::size_t m = batch.trajectories();
  const std::size_t cols = grid.n_columns();
  if (workers == 0) throw DomainError("worker count must be >= 1");
  if (m % workers != 0)
    throw DomainError("row partitioning requires mod(M, p) = 0");

  out.rows = m;
  out.cols = cols;
  out.values.resize(m * cols);
  const auto& K = kernels::table();
  const std::size_t rows_per = m / workers;
  auto span_job = [&](std::size_t first_row, std::size_t n_rows) {
    K.cubic_eval_rows(out.values.data() + first_row * cols,
                      batch.coefficients().data() + 4 * first_row, n_rows,
                      grid.rows_data(), cols);
  };

  if (workers == 1) {
    span_job(0, m);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w)
    pool.emplace_back(span_job, w * rows_per, rows_per);
  span_job(0, rows_per);
  for (auto& t : pool) t.join();
}

}  // namespace flowline::hermite
