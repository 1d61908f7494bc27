#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace nestlogit {

/// Draw ranges are cut into chunks of this size regardless of the thread
/// count; partial results are reduced in chunk order, which makes every
/// estimate bit-identical for any degree of parallelism.
inline constexpr std::uint64_t kChunkDraws = 16384;

struct SimulationOptions {
  unsigned threads = 1;  ///< 0 means std::thread::hardware_concurrency()
};

inline unsigned resolve_threads(unsigned requested) noexcept {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Evaluates fn(begin, end) on every chunk of [0, n) and returns the partial
/// results indexed by chunk.
template <class Partial, class Fn>
std::vector<Partial> map_chunks(std::uint64_t n, const SimulationOptions& opts, Fn&& fn) {
  const std::uint64_t chunks = (n + kChunkDraws - 1) / kChunkDraws;
  std::vector<Partial> out(chunks);
  const auto work = [&](std::atomic<std::uint64_t>& next) {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      const std::uint64_t begin = c * kChunkDraws;
      out[c] = fn(begin, std::min(n, begin + kChunkDraws));
    }
  };
  std::atomic<std::uint64_t> next{0};
  const auto threads = static_cast<std::uint64_t>(resolve_threads(opts.threads));
  const std::uint64_t workers = std::min<std::uint64_t>(threads, chunks);
  if (workers <= 1) {
    work(next);
    return out;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (std::uint64_t t = 1; t < workers; ++t) pool.emplace_back([&] { work(next); });
  work(next);
  pool.clear();
  return out;
}

}  // namespace nestlogit
