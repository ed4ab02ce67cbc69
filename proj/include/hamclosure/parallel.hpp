#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <type_traits>
#include <vector>

namespace hamclosure {

/// Applies fn to every item, in parallel when `parallel` is set, and returns
/// results in input order. If items throw, the exception of the lowest
/// failing index is rethrown after the loop.
template <typename Item, typename Fn>
auto parallel_map(const std::vector<Item>& items, Fn fn, bool parallel = true)
    -> std::vector<std::invoke_result_t<Fn&, const Item&>> {
  using Result = std::invoke_result_t<Fn&, const Item&>;
  std::vector<Result> out(items.size());
  std::exception_ptr failure;
  long failure_index = -1;
  std::mutex failure_lock;
  const long count = static_cast<long>(items.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(items[static_cast<std::size_t>(i)]);
    } catch (...) {
      std::lock_guard lock(failure_lock);
      if (failure_index == -1 || i < failure_index) {
        failure = std::current_exception();
        failure_index = i;
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace hamclosure
