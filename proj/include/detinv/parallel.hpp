#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace detinv {

/// Worker cap: INVARIANTS_THREADS if set to a positive integer, otherwise the hardware concurrency.
inline unsigned thread_limit() {
  if (const char* env = std::getenv("INVARIANTS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// out[i] = fn(items[i]), evaluated on up to thread_limit() threads. Results keep input order,
/// so callers merging them sequentially stay deterministic. The first exception is rethrown.
template <typename T, typename Fn>
auto parallel_map(const std::vector<T>& items, Fn&& fn) -> std::vector<decltype(fn(items.front()))> {
  using R = decltype(fn(items.front()));
  std::vector<R> out(items.size());
  const unsigned workers = std::min<unsigned>(thread_limit(), static_cast<unsigned>(items.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(items.size());
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
          try {
            out[i] = fn(items[i]);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace detinv
