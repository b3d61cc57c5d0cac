#pragma once

#include <bit>
#include <cstdint>
#include <limits>

namespace rlc {

// SplitMix64 output function.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Counter-based 64-bit generator. Output i of the stream with key K is
/// mix64(K + (i + 1) * 0x9E3779B97F4A7C15), i.e. SplitMix64 started at K.
///
/// Trial t of a run seeded with S uses the key
///   mix64(S ^ mix64(t + 0x632BE59BD9B4E019)),
/// so every trial owns an independent stream and results do not depend on
/// how trials are spread over workers.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit constexpr CounterRng(std::uint64_t key) noexcept : key_(key) {}

  static constexpr CounterRng for_trial(std::uint64_t master_seed, std::uint64_t trial) noexcept {
    return CounterRng(mix64(master_seed ^ mix64(trial + 0x632BE59BD9B4E019ull)));
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() noexcept { return mix64(key_ + (++counter_) * 0x9E3779B97F4A7C15ull); }

  constexpr std::uint64_t key() const noexcept { return key_; }
  constexpr std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Uniform draws from {0, ..., q-1}: take ceil(log2 q) bits at a time from
/// the generator (low bits first) and reject values >= q.
class ElementSampler {
 public:
  explicit ElementSampler(unsigned q) noexcept : q_(q), bits_(std::bit_width(q - 1)), mask_((1ull << bits_) - 1) {}

  template <class Rng>
  unsigned operator()(Rng& rng) noexcept {
    while (true) {
      if (avail_ < bits_) {
        buffer_ = rng();
        avail_ = 64;
      }
      const unsigned x = static_cast<unsigned>(buffer_ & mask_);
      buffer_ >>= bits_;
      avail_ -= bits_;
      if (x < q_) return x;
    }
  }

 private:
  unsigned q_;
  int bits_;
  std::uint64_t mask_;
  std::uint64_t buffer_ = 0;
  int avail_ = 0;
};

}  // namespace rlc
