#pragma once

#include <array>
#include <cstdint>

namespace colorsim {

// Philox 4x32-10 counter-based generator. A stream is addressed by
// (seed, stream_id); draws within the stream advance a 64-bit block
// counter. Identical (seed, stream_id) always reproduces the same
// sequence, independent of which thread runs it.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream_id)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        stream_{static_cast<std::uint32_t>(stream_id),
                static_cast<std::uint32_t>(stream_id >> 32)} {}

  std::uint64_t next_u64() {
    if (avail_ == 0) refill();
    --avail_;
    std::uint64_t hi = buf_[2 * avail_];
    std::uint64_t lo = buf_[2 * avail_ + 1];
    return (hi << 32) | lo;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound) (bound > 0); rejection-free modulo is
  // fine for the small biases we tolerate in tests.
  std::uint64_t uniform_below(std::uint64_t bound) { return next_u64() % bound; }

 private:
  static constexpr std::uint32_t kW32A = 0x9E3779B9u;
  static constexpr std::uint32_t kW32B = 0xBB67AE85u;
  static constexpr std::uint32_t kM4x32A = 0xD2511F53u;
  static constexpr std::uint32_t kM4x32B = 0xCD9E8D57u;

  static void mul_hi_lo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                        std::uint32_t& lo) {
    std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
  }

  void refill() {
    std::uint32_t c0 = static_cast<std::uint32_t>(block_);
    std::uint32_t c1 = static_cast<std::uint32_t>(block_ >> 32);
    std::array<std::uint32_t, 4> s{c0, c1, stream_[0], stream_[1]};
    std::array<std::uint32_t, 2> k{key_[0], key_[1]};
    for (int round = 0; round < 10; ++round) {
      std::uint32_t hi0, lo0, hi1, lo1;
      mul_hi_lo(kM4x32A, s[0], hi0, lo0);
      mul_hi_lo(kM4x32B, s[2], hi1, lo1);
      s = {hi1 ^ s[1] ^ k[0], lo1, hi0 ^ s[3] ^ k[1], lo0};
      k[0] += kW32A;
      k[1] += kW32B;
    }
    buf_ = s;
    ++block_;
    avail_ = 2;
  }

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 2> stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int avail_ = 0;
};

}  // namespace colorsim
