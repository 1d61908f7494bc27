#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace nestlogit {

/// Identifies an independent random sequence. The same (seed, stream_index)
/// always reproduces the same draws.
struct SeededStream {
  std::uint64_t seed = 0;
  std::uint64_t stream_index = 0;

  /// Per-draw substream used by the Monte Carlo routines: draw i of stream s
  /// maps to stream index (s << 40) | i. Requires s < 2^24 and i < 2^40.
  SeededStream substream(std::uint64_t draw_index) const;

  friend bool operator==(const SeededStream&, const SeededStream&) = default;
};

/// Philox4x32-10 block function (Salmon et al., Random123).
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key) noexcept;

/// Counter-based generator: the key is the seed, the upper half of the
/// counter is the stream index, the lower half counts blocks.
/// Satisfies UniformRandomBitGenerator.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(SeededStream stream) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }
  result_type operator()() noexcept { return next_u64(); }

  std::uint64_t next_u64() noexcept;
  /// Uniform on the open interval (0, 1), 53 bits of resolution.
  double uniform() noexcept;
  /// Standard exponential.
  double exponential() noexcept;

 private:
  void refill() noexcept;

  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int used_ = 4;  // in 64-bit halves of buffer_: 0, 2 or 4 (empty)
};

}  // namespace nestlogit
