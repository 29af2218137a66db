#pragma once

#include <cstdint>

#include "umacs/common.hpp"

namespace umacs {

// Dimensional parameters of one simulated system. Defaults reproduce the
// setup used throughout: 100-bit messages, 15-bit prefix carried by the
// compressed-sensing phase over 2000 of 30000 channel uses, unit noise.
struct SystemConfig {
  int total_bits = 100;        // b, bits per message
  int prefix_bits = 15;        // bp, bits carried by the CS phase
  int total_channel_uses = 30000;  // Nt
  int cs_channel_uses = 2000;      // Np
  int active_users = 100;          // Ka
  double noise_power = 1.0;        // N, per-sample noise variance

  int data_bits() const { return total_bits - prefix_bits; }        // bd
  int second_phase_uses() const {                                    // Nc
    return total_channel_uses - cs_channel_uses;
  }
  std::int64_t codebook_size() const { return std::int64_t{1} << prefix_bits; }

  void validate() const {
    if (prefix_bits < 1 || prefix_bits > 20)
      throw config_error("prefix_bits must be in [1, 20]");
    if (total_bits < prefix_bits)
      throw config_error("total_bits must be >= prefix_bits");
    if (cs_channel_uses < 1)
      throw config_error("cs_channel_uses must be >= 1");
    if (cs_channel_uses > codebook_size())
      throw config_error("cs_channel_uses must be <= 2^prefix_bits");
    if (second_phase_uses() < 0)
      throw config_error("cs_channel_uses must be <= total_channel_uses");
    if (active_users < 1 || active_users > codebook_size())
      throw config_error("active_users must be in [1, 2^prefix_bits]");
    if (noise_power < 0.0) throw config_error("noise_power must be >= 0");
  }
};

}  // namespace umacs
