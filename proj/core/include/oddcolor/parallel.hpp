#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace oddcolor {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs fn(chunk_index, begin, end) over [0, total) split into contiguous
// chunks, one per worker. Each chunk writes into its own slot, so results
// merged in chunk order do not depend on scheduling.
template <typename Fn>
void parallel_chunks(std::uint64_t total, unsigned threads, Fn&& fn) {
  threads = resolve_threads(threads);
  if (total == 0) return;
  const std::uint64_t nchunks =
      std::min<std::uint64_t>(threads, total);
  if (nchunks <= 1) {
    fn(0u, std::uint64_t{0}, total);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(nchunks);
  const std::uint64_t per = total / nchunks;
  const std::uint64_t extra = total % nchunks;
  std::uint64_t begin = 0;
  for (std::uint64_t c = 0; c < nchunks; ++c) {
    const std::uint64_t len = per + (c < extra ? 1 : 0);
    const std::uint64_t end = begin + len;
    workers.emplace_back([&fn, c, begin, end] {
      fn(static_cast<unsigned>(c), begin, end);
    });
    begin = end;
  }
  for (auto& w : workers) w.join();
}

}  // namespace oddcolor
