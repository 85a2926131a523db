#pragma once

#include <atomic>
#include <algorithm>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace sylvan {

template <class Result>
void run_ordered(std::size_t count, int jobs, const std::function<Result(std::size_t)>& work,
                 const std::function<void(std::size_t, Result&)>& emit) {
  std::vector<std::optional<Result>> done(count);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex mu;
  std::size_t flushed = 0;

  auto worker = [&] {
    for (std::size_t i = next++; i < count && !failed; i = next++) {
      try {
        Result r = work(i);
        std::lock_guard lock(mu);
        done[i] = std::move(r);
        while (flushed < count && done[flushed]) {
          if (emit) emit(flushed, *done[flushed]);
          ++flushed;
        }
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };

  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace sylvan
