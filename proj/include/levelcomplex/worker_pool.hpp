#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace levelcomplex {

/// Fixed-size worker capability handed to the engines. Work is split into
/// contiguous index blocks, so callers that write results per index get the
/// same output for every thread count.
class WorkerPool {
 public:
  explicit WorkerPool(std::size_t threads = 1) : threads_(std::max<std::size_t>(1, threads)) {}

  std::size_t size() const { return threads_; }

  /// Calls fn(index, worker) for every index in [0, count).
  template <class Fn>
  void parallel_for(std::size_t count, Fn&& fn) const {
    const std::size_t workers = std::min(threads_, std::max<std::size_t>(1, count));
    if (workers <= 1) {
      for (std::size_t i = 0; i < count; ++i) fn(i, std::size_t{0});
      return;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          const std::size_t begin = count * w / workers;
          const std::size_t end = count * (w + 1) / workers;
          try {
            for (std::size_t i = begin; i < end; ++i) fn(i, w);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

 private:
  std::size_t threads_;
};

}  // namespace levelcomplex
