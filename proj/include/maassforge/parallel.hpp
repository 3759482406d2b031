#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace maassforge {

/// Worker count: an explicit request wins, then MAASSFORGE_THREADS, then
/// the hardware concurrency.
int resolve_threads(int requested = 0);

/// Calls f(lo, hi) on fixed-size chunks of [begin, end) from `threads`
/// workers. Chunk boundaries depend only on `chunk`, so any per-chunk
/// results are reproducible for every thread count.
template <class F>
void parallel_chunks(std::int64_t begin, std::int64_t end, std::int64_t chunk, int threads, F&& f) {
  if (end <= begin) return;
  chunk = std::max<std::int64_t>(chunk, 1);
  const std::int64_t nchunks = (end - begin + chunk - 1) / chunk;
  threads = static_cast<int>(std::clamp<std::int64_t>(threads, 1, nchunks));
  if (threads == 1) {
    for (std::int64_t c = 0; c < nchunks; ++c) f(begin + c * chunk, std::min(end, begin + (c + 1) * chunk));
    return;
  }
  std::mutex mu;
  std::int64_t next = 0;
  std::exception_ptr err;
  auto worker = [&] {
    while (true) {
      std::int64_t c;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next >= nchunks || err) return;
        c = next++;
      }
      try {
        f(begin + c * chunk, std::min(end, begin + (c + 1) * chunk));
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace maassforge
