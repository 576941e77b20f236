#pragma once

#include <array>
#include <cstdint>

#include <Eigen/Core>

#include "rppi/types.hpp"

namespace rppi {

/// Deterministic splittable generator. A (master_seed, stream_id) pair fully
/// determines the output sequence: the pair is expanded through SplitMix64
/// into the state of a xoshiro256++ generator, so distinct stream ids yield
/// statistically independent substreams of the same master seed. Not
/// shareable across workers; derive one substream per worker instead.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t master_seed, std::uint64_t stream_id = 0);

  std::uint64_t master_seed() const { return master_; }
  std::uint64_t stream_id() const { return stream_; }

  /// New generator for the same master seed on a different stream.
  SeededRng substream(std::uint64_t id) const { return SeededRng(master_, id); }

  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform();
  double uniform(double lo, double hi);

  /// Standard normal via Box-Muller (two uniforms per draw, no cached twin).
  double normal();

  /// Fills in column-major order with standard normal draws.
  void fill_normal(Eigen::Ref<Mat> out);
  Vec normal_vec(int n);

 private:
  std::uint64_t master_ = 0;
  std::uint64_t stream_ = 0;
  std::array<std::uint64_t, 4> state_{};
};

}  // namespace rppi
