#include "spinorkit/rng.hpp"

#include <cmath>
#include <numbers>

namespace spinorkit::rng {

namespace {

constexpr std::uint64_t kMult0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kMult1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                    std::uint64_t& lo) {
  const unsigned __int128 p =
      static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b);
  hi = static_cast<std::uint64_t>(p >> 64);
  lo = static_cast<std::uint64_t>(p);
}

}  // namespace

std::array<std::uint64_t, 4> philox4x64(const std::array<std::uint64_t, 4>& counter,
                                        const std::array<std::uint64_t, 2>& key) {
  std::array<std::uint64_t, 4> x = counter;
  std::uint64_t k0 = key[0];
  std::uint64_t k1 = key[1];
  for (int round = 0; round < 10; ++round) {
    std::uint64_t hi0, lo0, hi1, lo1;
    mulhilo(kMult0, x[0], hi0, lo0);
    mulhilo(kMult1, x[2], hi1, lo1);
    x = {hi1 ^ x[1] ^ k0, lo1, hi0 ^ x[3] ^ k1, lo0};
    k0 += kWeyl0;
    k1 += kWeyl1;
  }
  return x;
}

Sequence::Sequence(std::uint64_t seed, std::uint64_t stream)
    : key_{seed, stream} {}

void Sequence::refill() {
  buffer_ = philox4x64({block_, 0, 0, 0}, key_);
  ++block_;
  cursor_ = 0;
}

std::uint64_t Sequence::next_u64() {
  if (cursor_ >= 4) refill();
  return buffer_[static_cast<std::size_t>(cursor_++)];
}

double Sequence::next_double() { return to_unit_double(next_u64()); }

double Sequence::next_gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller; shift into (0,1] so the log is finite.
  const double u1 =
      (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = next_double();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(angle);
  has_spare_ = true;
  return r * std::cos(angle);
}

}  // namespace spinorkit::rng
