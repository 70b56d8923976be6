#pragma once

#include <array>
#include <cstdint>

namespace icurve {

//! Philox4x32-10 block function (Salmon et al., SC'11): a keyed bijection on
//! 128-bit counters. Multipliers 0xD2511F53 / 0xCD9E8D57, Weyl key
//! increments 0x9E3779B9 / 0xBB67AE85, ten rounds.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

//! Sequential generator over one Philox substream.
//!
//! The key is the 64-bit seed and the upper half of the counter is the
//! 64-bit stream index, so (seed, stream) names an independent sequence and
//! draws never depend on thread scheduling.
class CounterRng
{
public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint32_t next_u32();
  //! Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  //! Standard normal by Box-Muller.
  double normal();

private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int used_ = 4;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

//! Stream index for a (replication, purpose) pair.
constexpr std::uint64_t substream(std::uint64_t replication, std::uint32_t purpose)
{
  return (replication << 8) | (purpose & 0xffu);
}

}  // namespace icurve
