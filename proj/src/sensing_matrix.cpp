#include "umacs/sensing_matrix.hpp"

#include <omp.h>

#include <cmath>
#include <numbers>

#include "umacs/rng.hpp"

namespace umacs {

SensingMatrix::SensingMatrix(int prefix_bits, int rows, double symbol_power,
                             std::uint64_t seed, int workers)
    : prefix_bits_(prefix_bits),
      n_(std::int64_t{1} << prefix_bits),
      rows_(rows),
      symbol_power_(symbol_power),
      seed_(seed),
      table_mask_(4 * n_ - 1) {
  if (prefix_bits < 1 || prefix_bits > 20)
    throw config_error("prefix_bits must be in [1, 20]");
  if (rows < 1 || rows > n_)
    throw config_error("row count must be in [1, 2^prefix_bits]");
  if (!(symbol_power > 0.0))
    throw config_error("symbol power must be > 0");

  cos_table_.resize(4 * n_);
  const double step = std::numbers::pi / static_cast<double>(2 * n_);
  for (std::int64_t m = 0; m < 4 * n_; ++m)
    cos_table_[m] = std::cos(step * static_cast<double>(m));

  // Uniform row selection without replacement: partial Fisher-Yates.
  Rng rng(seed);
  std::vector<int> perm(n_);
  for (std::int64_t i = 0; i < n_; ++i) perm[i] = static_cast<int>(i);
  row_selection_.resize(rows);
  for (int i = 0; i < rows; ++i) {
    const std::int64_t pick =
        i + static_cast<std::int64_t>(rng.uniform_index(n_ - i));
    std::swap(perm[i], perm[pick]);
    row_selection_[i] = perm[i];
  }

  const double w0 = std::sqrt(1.0 / static_cast<double>(n_));
  const double wk = std::sqrt(2.0 / static_cast<double>(n_));
  row_weight_.resize(rows);
  for (int r = 0; r < rows; ++r)
    row_weight_[r] = row_selection_[r] == 0 ? w0 : wk;

  // Per-column rescale to hit ||a_j||^2 = Np * P1. Each column's norm is
  // accumulated serially, so the result is identical for any worker count.
  column_scale_.assign(n_, 1.0);
  const double target = std::sqrt(static_cast<double>(rows) * symbol_power);
  if (workers <= 0) workers = omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(workers)
  for (std::int64_t j = 0; j < n_; ++j) {
    double sum = 0.0;
    for (int r = 0; r < rows_; ++r) {
      const std::int64_t m =
          static_cast<std::int64_t>(row_selection_[r]) * (2 * j + 1) &
          table_mask_;
      const double e = row_weight_[r] * cos_table_[m];
      sum += e * e;
    }
    column_scale_[j] = target / std::sqrt(sum);
  }
}

void SensingMatrix::column(std::int64_t j, std::span<double> out) const {
  const double s = column_scale_[j];
  for (int r = 0; r < rows_; ++r) {
    const std::int64_t m =
        static_cast<std::int64_t>(row_selection_[r]) * (2 * j + 1) &
        table_mask_;
    out[r] = s * row_weight_[r] * cos_table_[m];
  }
}

double SensingMatrix::column_norm_squared(std::int64_t j) const {
  double sum = 0.0;
  for (int r = 0; r < rows_; ++r) {
    const double e = entry(r, j);
    sum += e * e;
  }
  return sum;
}

SensingMatrix build_sensing_matrix(int prefix_bits, int rows,
                                   double symbol_power, std::uint64_t seed,
                                   int workers) {
  return SensingMatrix(prefix_bits, rows, symbol_power, seed, workers);
}

}  // namespace umacs
