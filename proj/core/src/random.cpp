#include "symdisc/random.hpp"

#include <cmath>

namespace symdisc {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// splitmix64 finalizer
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

}  // namespace

namespace detail {

// One Philox4x32 block: 10 rounds with the standard multipliers and
// Weyl key schedule.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> c,
                                        std::uint32_t k0, std::uint32_t k1) {
  constexpr std::uint32_t kM0 = 0xD2511F53u;
  constexpr std::uint32_t kM1 = 0xCD9E8D57u;
  constexpr std::uint32_t kW0 = 0x9E3779B9u;
  constexpr std::uint32_t kW1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kM0, c[0], hi0, lo0);
    mulhilo(kM1, c[2], hi1, lo1);
    c = {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
    k0 += kW0;
    k1 += kW1;
  }
  return c;
}

}  // namespace detail

RandomStream::RandomStream(std::uint64_t seed)
    : key_(mix64(seed + kGolden)) {}

RandomStream::RandomStream(std::uint64_t key, raw_tag) : key_(key) {}

RandomStream RandomStream::split(std::uint64_t index) const {
  return RandomStream(mix64(key_ + (index + 1) * kGolden), raw_tag{});
}

void RandomStream::refill() {
  const std::array<std::uint32_t, 4> ctr = {
      static_cast<std::uint32_t>(counter_),
      static_cast<std::uint32_t>(counter_ >> 32), 0u, 0u};
  const auto out = detail::philox4x32(ctr, static_cast<std::uint32_t>(key_),
                                      static_cast<std::uint32_t>(key_ >> 32));
  ++counter_;
  buf_[0] = out[0] | (static_cast<std::uint64_t>(out[1]) << 32);
  buf_[1] = out[2] | (static_cast<std::uint64_t>(out[3]) << 32);
  avail_ = 2;
}

std::uint64_t RandomStream::next_u64() {
  if (avail_ == 0) refill();
  return buf_[2 - avail_--];
}

double RandomStream::next_uniform() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomStream::next_gaussian() {
  // J. L. Leva's ratio-of-uniforms rejection scheme; ~1.37 uniform pairs
  // per deviate, no trig calls.
  for (;;) {
    const double u = next_uniform();
    const double v = 1.7156 * (next_uniform() - 0.5);
    const double x = u - 0.449871;
    const double y = std::fabs(v) + 0.386595;
    const double q = x * x + y * (0.19600 * y - 0.25472 * x);
    if (q < 0.27597) return v / u;
    if (q > 0.27846) continue;
    if (v * v <= -4.0 * u * u * std::log(u)) return v / u;
  }
}

}  // namespace symdisc
