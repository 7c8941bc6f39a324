#pragma once

#include <array>
#include <cstdint>

namespace symdisc {

namespace detail {
/// One Philox4x32-10 block, exposed so its output can be pinned against the
/// published reference vectors.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::uint32_t key0, std::uint32_t key1);
}  // namespace detail

/// Deterministic counter-based random stream (Philox4x32-10).
///
/// A stream is identified by a 64-bit key; drawing values only advances a
/// counter, so a stream's output is a pure function of (key, counter).
/// split(i) derives an independent child stream from (key, i), which lets
/// parallel workers consume disjoint streams while keeping every result
/// bit-identical for a fixed seed regardless of thread count.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  /// Child stream i; deterministic, independent of this stream's position.
  RandomStream split(std::uint64_t index) const;

  std::uint64_t next_u64();

  /// Uniform on the open interval (0, 1).
  double next_uniform();

  /// Standard normal deviate (Leva's ratio-of-uniforms method).
  double next_gaussian();

 private:
  struct raw_tag {};
  RandomStream(std::uint64_t key, raw_tag);
  void refill();

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  std::array<std::uint64_t, 2> buf_{};
  int avail_ = 0;
};

}  // namespace symdisc
