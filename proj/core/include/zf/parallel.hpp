#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace zf {

// Evaluates fn(0..count-1) on up to `jobs` threads. Results are returned in
// index order, so output does not depend on the worker count. The first
// exception thrown by any call is rethrown after all workers stop.
template <typename Fn>
auto parallel_map(std::size_t count, int jobs, Fn&& fn) -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
  using Result = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<Result> results(count);
  const auto workers = static_cast<std::size_t>(std::clamp<long long>(jobs, 1, static_cast<long long>(std::max<std::size_t>(count, 1))));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count && !stop; i = next++) {
          try {
            results[i] = fn(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            stop = true;
          }
        }
      });
  }
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace zf
