#pragma once

#include <array>
#include <cstdint>

namespace plantssl {

/// Counter-based pseudo-random stream (Philox4x32-10).
///
/// A stream is identified by a 64-bit key; drawing values advances a counter
/// only, so streams can be created and consumed in any order without
/// interfering with each other. `child(id)` derives an independent stream
/// from the current key, which is how per-image / per-view / per-step
/// substreams are split off a single master seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Independent stream derived from (this stream's key, id).
  Rng child(std::uint64_t id) const;

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer in [0, n), n >= 1.
  int uniform_int(int n);
  /// Uniform integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi);
  /// Standard normal via Box-Muller.
  double normal();

  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
  std::array<std::uint32_t, 4> block_{};
  int block_pos_ = 4;  // empty
  double spare_normal_ = 0.0;
  bool has_spare_normal_ = false;

  void refill();
};

}  // namespace plantssl
