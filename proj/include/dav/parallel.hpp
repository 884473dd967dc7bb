#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace dav {

// Runs fn(0..count-1) on up to `threads` workers. Callers own output slots,
// so result order never depends on scheduling.
template <class Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  if (threads < 2 || count < 2) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  const int workers = std::min(threads, count);
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      int i;
      while ((i = next.fetch_add(1)) < count) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace dav
