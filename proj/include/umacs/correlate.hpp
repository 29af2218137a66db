#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "umacs/sensing_matrix.hpp"

namespace umacs {

// How A^T r is evaluated over all 2^bp columns.
//   serial   - reference row-by-row scan, O(Np * 2^bp)
//   openmp   - the same scan parallelized over column blocks
//   fast_dct - scatter the residual into the selected DCT rows and apply
//              one inverse (type-III) transform, O(2^bp log 2^bp)
// All three agree to rounding; serial is the oracle the others are tested
// against. fast_dct is the default for decoding.
enum class CorrelationBackend { serial, openmp, fast_dct };

class Correlator {
 public:
  Correlator(const SensingMatrix& matrix, CorrelationBackend backend);
  ~Correlator();

  Correlator(const Correlator&) = delete;
  Correlator& operator=(const Correlator&) = delete;

  const SensingMatrix& matrix() const { return *matrix_; }
  CorrelationBackend backend() const { return backend_; }

  // Fills out[j] = <residual, a_j> for every column j. out.size() == 2^bp.
  void correlate(std::span<const double> residual, std::span<double> out);

 private:
  void correlate_direct(std::span<const double> residual,
                        std::span<double> out, bool parallel) const;
  void correlate_fast(std::span<const double> residual, std::span<double> out);

  const SensingMatrix* matrix_;
  CorrelationBackend backend_;
  void* plan_ = nullptr;     // fftw_plan for the type-III transform
  double* fft_in_ = nullptr; // fftw-allocated, length 2^bp
  double* fft_out_ = nullptr;
};

// Indices of the `count` largest |values| outside `excluded`, ordered by
// decreasing magnitude; ties broken toward the smaller index. `excluded`
// is a 0/1 mask over all columns. Throws if fewer than `count` columns are
// available.
std::vector<std::int64_t> top_correlated(std::span<const double> values,
                                         std::span<const std::uint8_t> excluded,
                                         int count);

}  // namespace umacs
