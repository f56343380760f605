#pragma once

#include <algorithm>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace gksum {

/**
 * Sums f(0) + ... + f(count - 1) with up to `threads` workers over contiguous chunks.
 * Partial sums are combined in chunk order; with exact arithmetic the result does
 * not depend on the thread count.
 */
template <class T, class F>
T parallel_sum(std::size_t count, unsigned threads, T zero, F f) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    T acc = zero;
    for (std::size_t i = 0; i < count; ++i) f(acc, i);
    return acc;
  }
  std::vector<std::optional<T>> partial(threads);
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          T acc = zero;
          for (std::size_t i = t * chunk; i < std::min(count, (t + 1) * chunk); ++i) f(acc, i);
          partial[t] = std::move(acc);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  T acc = zero;
  for (auto& p : partial) acc += *p;
  return acc;
}

}  // namespace gksum
