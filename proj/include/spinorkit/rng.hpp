#pragma once

#include <array>
#include <cstdint>

namespace spinorkit::rng {

// Philox4x64-10, the counter-based generator of Salmon et al. (Random123).
// A block is a pure function of (counter, key), so any consumer can index
// into a stream without sequential state, and distinct keys give
// non-overlapping streams.
std::array<std::uint64_t, 4> philox4x64(const std::array<std::uint64_t, 4>& counter,
                                        const std::array<std::uint64_t, 2>& key);

// Stream layout for one user seed: key = {seed, stream id}. The high half of
// the stream id names the consumer, the low half its shard index, so the coin
// stream of shard k and, say, the settings sampler never collide.
enum class StreamPurpose : std::uint32_t {
  TrialCoins = 1,
  Settings = 2,
  Elements = 3,
  Tests = 15,
};

constexpr std::uint64_t stream_id(StreamPurpose purpose, std::uint32_t shard) {
  return (static_cast<std::uint64_t>(purpose) << 32) | shard;
}

// Uniform double in [0, 1) from the high 53 bits.
constexpr double to_unit_double(std::uint64_t x) {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

// Sequential buffered view over one (seed, stream) Philox stream. The n-th
// draw is a pure function of (seed, stream, n).
class Sequence {
 public:
  Sequence(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  double next_double();    // uniform in [0, 1)
  double next_gaussian();  // standard normal via Box-Muller

 private:
  void refill();

  std::array<std::uint64_t, 2> key_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 4> buffer_{};
  int cursor_ = 4;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace spinorkit::rng
