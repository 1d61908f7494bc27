#include "nestlogit/random.hpp"

#include <cmath>

#include "nestlogit/errors.hpp"

namespace nestlogit {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53;
constexpr std::uint32_t kMul1 = 0xCD9E8D57;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85;

constexpr int kDrawBits = 40;

}  // namespace

SeededStream SeededStream::substream(std::uint64_t draw_index) const {
  if (stream_index >> (64 - kDrawBits))
    throw Error(ErrorKind::DomainError, "stream index too large for per-draw substreams");
  if (draw_index >> kDrawBits) throw Error(ErrorKind::DomainError, "draw index exceeds 2^40");
  return {seed, (stream_index << kDrawBits) | draw_index};
}

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key) noexcept {
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
    const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

RandomStream::RandomStream(SeededStream stream) noexcept
    : key_{static_cast<std::uint32_t>(stream.seed), static_cast<std::uint32_t>(stream.seed >> 32)},
      stream_(stream.stream_index) {}

void RandomStream::refill() noexcept {
  buffer_ = philox4x32_10({static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
                           static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)},
                          key_);
  ++block_;
  used_ = 0;
}

std::uint64_t RandomStream::next_u64() noexcept {
  if (used_ >= 4) refill();
  const std::uint64_t out = (std::uint64_t{buffer_[used_ + 1]} << 32) | buffer_[used_];
  used_ += 2;
  return out;
}

double RandomStream::uniform() noexcept {
  // (k + 0.5) / 2^53 never hits 0 or 1.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomStream::exponential() noexcept { return -std::log(uniform()); }

}  // namespace nestlogit
