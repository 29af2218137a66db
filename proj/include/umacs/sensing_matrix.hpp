#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "umacs/common.hpp"

namespace umacs {

// Real Np x 2^bp sensing matrix: Np rows drawn uniformly without
// replacement from the orthonormal type-II DCT matrix of size 2^bp, then
// every column rescaled so that ||a_j||^2 = Np * p1 exactly.
//
// Entries are generated on demand from a cosine table instead of being
// stored (the full matrix at bp=15, Np=2000 would be ~0.5 GB). The table
// holds cos(pi*m/(2n)) for m in [0, 4n); entry (k, j) of the parent DCT is
// w(k) * table[k*(2j+1) mod 4n] with w(0)=sqrt(1/n), w(k>0)=sqrt(2/n).
class SensingMatrix {
 public:
  SensingMatrix(int prefix_bits, int rows, double symbol_power,
                std::uint64_t seed, int workers = 0);

  int prefix_bits() const { return prefix_bits_; }
  int rows() const { return rows_; }                    // Np
  std::int64_t columns() const { return n_; }           // 2^bp
  double symbol_power() const { return symbol_power_; } // P1
  std::uint64_t seed() const { return seed_; }

  std::span<const int> row_selection() const { return row_selection_; }
  std::span<const double> column_scales() const { return column_scale_; }

  // A[r][j]
  double entry(int r, std::int64_t j) const {
    const std::int64_t m = static_cast<std::int64_t>(row_selection_[r]) *
                           (2 * j + 1) & table_mask_;
    return column_scale_[j] * row_weight_[r] * cos_table_[m];
  }

  // Writes column j into out (out.size() == rows()).
  void column(std::int64_t j, std::span<double> out) const;

  // ||a_j||^2, computed directly from the entries.
  double column_norm_squared(std::int64_t j) const;

  // Internals used by the correlation kernels.
  std::span<const double> cos_table() const { return cos_table_; }
  std::span<const double> row_weights() const { return row_weight_; }
  std::int64_t table_mask() const { return table_mask_; }

 private:
  int prefix_bits_;
  std::int64_t n_;
  int rows_;
  double symbol_power_;
  std::uint64_t seed_;
  std::int64_t table_mask_;            // 4n - 1 (4n is a power of two)
  std::vector<int> row_selection_;     // Np distinct indices in [0, n)
  std::vector<double> row_weight_;     // w(row_selection[r])
  std::vector<double> column_scale_;   // per-column rescale factor
  std::vector<double> cos_table_;      // cos(pi*m/(2n)), m in [0, 4n)
};

// Factory mirroring the construction contract; `workers` bounds the number
// of threads used for the column-norm pass (0 = all available).
SensingMatrix build_sensing_matrix(int prefix_bits, int rows,
                                   double symbol_power, std::uint64_t seed,
                                   int workers = 0);

}  // namespace umacs
