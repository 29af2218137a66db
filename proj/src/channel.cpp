#include "umacs/channel.hpp"

#include <algorithm>
#include <cmath>

#include "umacs/rng.hpp"

namespace umacs {

EncodedMessage encode_message(std::string_view bits, int prefix_bits) {
  if (static_cast<int>(bits.size()) != prefix_bits)
    throw config_error("bit-string length does not match prefix_bits");
  std::int64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw config_error("bit-string may contain only '0' and '1'");
    index = (index << 1) | (c == '1');
  }
  EncodedMessage msg;
  msg.index = index;
  msg.one_hot.assign(std::size_t{1} << prefix_bits, 0);
  msg.one_hot[index] = 1;
  return msg;
}

SupportSet sample_supports(int active_users, int prefix_bits,
                           std::uint64_t seed, bool allow_duplicates) {
  const std::int64_t n = std::int64_t{1} << prefix_bits;
  if (active_users < 1) throw config_error("active_users must be >= 1");
  if (!allow_duplicates && active_users > n)
    throw config_error("active_users exceeds 2^prefix_bits without duplicates");

  Rng rng(seed);
  SupportSet result;
  result.duplicates_allowed = allow_duplicates;
  result.indices.reserve(active_users);
  if (allow_duplicates) {
    for (int i = 0; i < active_users; ++i)
      result.indices.push_back(static_cast<std::int64_t>(rng.uniform_index(n)));
  } else {
    // Partial Fisher-Yates over [0, n).
    std::vector<std::int64_t> perm(n);
    for (std::int64_t i = 0; i < n; ++i) perm[i] = i;
    for (int i = 0; i < active_users; ++i) {
      const std::int64_t pick =
          i + static_cast<std::int64_t>(rng.uniform_index(n - i));
      std::swap(perm[i], perm[pick]);
      result.indices.push_back(perm[i]);
    }
  }
  std::sort(result.indices.begin(), result.indices.end());
  return result;
}

std::vector<double> transmit(const SensingMatrix& matrix,
                             const SupportSet& supports) {
  std::vector<double> signal(matrix.rows(), 0.0);
  std::vector<double> col(matrix.rows());
  for (std::int64_t j : supports.indices) {
    if (j < 0 || j >= matrix.columns())
      throw config_error("support index out of range");
    matrix.column(j, col);
    for (int r = 0; r < matrix.rows(); ++r) signal[r] += col[r];
  }
  return signal;
}

std::vector<double> add_noise(std::span<const double> signal,
                              double noise_power, std::uint64_t seed) {
  std::vector<double> out(signal.begin(), signal.end());
  if (noise_power == 0.0) return out;
  Rng rng(seed);
  const double sigma = std::sqrt(noise_power);
  for (double& v : out) v += sigma * rng.standard_normal();
  return out;
}

}  // namespace umacs
