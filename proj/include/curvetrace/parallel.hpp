#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace curvetrace {

namespace detail {
inline std::atomic<unsigned> thread_override{0};
}

/// Worker count: a ScopedThreadLimit if one is active, else
/// CURVETRACE_THREADS when set to a positive integer, else the hardware
/// concurrency.
inline unsigned thread_count() {
  if (const unsigned n = detail::thread_override.load()) return n;
  if (const char* env = std::getenv("CURVETRACE_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1u : hw;
}

/// Pins the worker count for the lifetime of the object (process-wide).
class ScopedThreadLimit {
 public:
  explicit ScopedThreadLimit(unsigned n) : previous_(detail::thread_override.exchange(n)) {}
  ~ScopedThreadLimit() { detail::thread_override.store(previous_); }
  ScopedThreadLimit(const ScopedThreadLimit&) = delete;
  ScopedThreadLimit& operator=(const ScopedThreadLimit&) = delete;

 private:
  unsigned previous_;
};

namespace detail {
inline thread_local bool in_parallel_region = false;
}

/// Calls body(i) for i in [0, n) over a static partition. Each index is
/// written by exactly one worker, so results placed in preallocated slots
/// do not depend on the thread count. The first exception is rethrown.
/// Nested calls from inside a worker run serially.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(thread_count(), n);
  if (workers <= 1 || detail::in_parallel_region) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = n * w / workers;
    const std::size_t hi = n * (w + 1) / workers;
    pool.emplace_back([&, lo, hi] {
      detail::in_parallel_region = true;
      try {
        for (std::size_t i = lo; i < hi; ++i) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace curvetrace
