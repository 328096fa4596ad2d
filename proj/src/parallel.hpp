#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace hq::detail {

// Splits [0, n) into contiguous chunks, one per worker, and runs
// body(chunk, begin, end). The first exception thrown is rethrown.
template <class Body>
void parallel_chunks(size_t n, unsigned threads, Body body) {
  const size_t workers = std::max<size_t>(1, std::min<size_t>(threads, n));
  if (workers == 1) {
    body(size_t{0}, size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const size_t step = (n + workers - 1) / workers;
  for (size_t w = 0; w < workers; ++w) {
    const size_t begin = std::min(n, w * step), end = std::min(n, begin + step);
    pool.emplace_back([&, w, begin, end] {
      try {
        body(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

inline size_t chunk_count(size_t n, unsigned threads) {
  return std::max<size_t>(1, std::min<size_t>(threads, n));
}

}  // namespace hq::detail
