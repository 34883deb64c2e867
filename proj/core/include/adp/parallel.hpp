#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace adp {

// Number of worker threads used by the block helpers below. 0 means
// "use hardware concurrency". Set once from the CLI before running work.
void set_thread_count(unsigned n);
unsigned thread_count();

namespace detail {

inline std::atomic<unsigned>& thread_count_storage() {
  static std::atomic<unsigned> n{0};
  return n;
}

}  // namespace detail

inline void set_thread_count(unsigned n) { detail::thread_count_storage().store(n); }

inline unsigned thread_count() {
  unsigned n = detail::thread_count_storage().load();
  if (n == 0) {
    n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
  }
  return n;
}

// Splits [lo, hi) into fixed-size blocks and runs fn(block_index, blo, bhi)
// for each. The block grid depends only on the range and block_size, never on
// the thread count, and per-block results are merged by the caller in block
// order, so any thread count yields identical output.
template <typename R, typename Fn>
std::vector<R> parallel_blocks(uint64_t lo, uint64_t hi, uint64_t block_size, Fn&& fn) {
  if (hi < lo) hi = lo;
  uint64_t nblocks = (hi - lo + block_size - 1) / block_size;
  std::vector<R> results(static_cast<size_t>(nblocks));
  if (nblocks == 0) return results;

  unsigned workers = thread_count();
  if (workers > nblocks) workers = static_cast<unsigned>(nblocks);

  if (workers <= 1) {
    for (uint64_t b = 0; b < nblocks; ++b) {
      uint64_t blo = lo + b * block_size;
      uint64_t bhi = std::min(hi, blo + block_size);
      results[static_cast<size_t>(b)] = fn(b, blo, bhi);
    }
    return results;
  }

  std::atomic<uint64_t> next{0};
  auto work = [&] {
    for (;;) {
      uint64_t b = next.fetch_add(1);
      if (b >= nblocks) break;
      uint64_t blo = lo + b * block_size;
      uint64_t bhi = std::min(hi, blo + block_size);
      results[static_cast<size_t>(b)] = fn(b, blo, bhi);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace adp
