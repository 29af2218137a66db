#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "umacs/sensing_matrix.hpp"

namespace umacs {

struct EncodedMessage {
  std::int64_t index = 0;            // integer value of the prefix bits
  std::vector<std::uint8_t> one_hot; // length 2^bp, single 1 at `index`
};

// Converts a prefix bit-string ('0'/'1', MSB first) into its column index
// and one-hot vector.
EncodedMessage encode_message(std::string_view bits, int prefix_bits);

// Active column indices for one channel realization. With duplicates
// allowed the same index may appear more than once (stored sorted, with
// multiplicity); by default indices are distinct.
struct SupportSet {
  std::vector<std::int64_t> indices;  // sorted
  bool duplicates_allowed = false;

  std::size_t size() const { return indices.size(); }
};

SupportSet sample_supports(int active_users, int prefix_bits,
                           std::uint64_t seed, bool allow_duplicates = false);

// Noiseless superposition: sum of the supported columns (with multiplicity).
std::vector<double> transmit(const SensingMatrix& matrix,
                             const SupportSet& supports);

// Adds i.i.d. N(0, noise_power) samples; noise_power == 0 returns the input.
std::vector<double> add_noise(std::span<const double> signal,
                              double noise_power, std::uint64_t seed);

}  // namespace umacs
