#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "fplab/limits.hpp"

namespace fplab {

// Deterministic parallel map-reduce over an index range. The range is split
// into fixed-size blocks; workers claim blocks dynamically but block results
// are folded in block order, so the result is independent of the thread count
// and of scheduling. `map_block(begin, end)` returns a partial result,
// `combine(acc, partial)` folds it in.
template <typename T, typename MapBlock, typename Combine>
T parallel_reduce(std::uint64_t count, T init, MapBlock map_block,
                  Combine combine) {
  constexpr std::uint64_t kBlock = std::uint64_t(1) << 14;
  const int threads = resolved_threads();
  if (threads <= 1 || count <= kBlock) {
    T acc = std::move(init);
    for (std::uint64_t begin = 0; begin < count; begin += kBlock) {
      const std::uint64_t end = std::min(begin + kBlock, count);
      acc = combine(std::move(acc), map_block(begin, end));
    }
    return acc;
  }

  const std::uint64_t blocks = (count + kBlock - 1) / kBlock;
  std::vector<T> partial(static_cast<std::size_t>(blocks), init);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t b = next.fetch_add(1);
      if (b >= blocks) return;
      const std::uint64_t begin = b * kBlock;
      const std::uint64_t end = std::min(begin + kBlock, count);
      partial[static_cast<std::size_t>(b)] = map_block(begin, end);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  T acc = std::move(init);
  for (auto& part : partial) acc = combine(std::move(acc), std::move(part));
  return acc;
}

}  // namespace fplab
