#include "affdet/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "affdet/config.hpp"

namespace affdet {

namespace {
thread_local int in_parallel_region = 0;
}

int worker_count() {
  int t = config().threads;
  if (t <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    t = hw ? static_cast<int>(hw) : 1;
  }
  return t;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  int workers = worker_count();
  if (n <= 1 || workers <= 1 || in_parallel_region) {
    ++in_parallel_region;
    try {
      for (std::size_t i = 0; i < n; ++i) fn(i);
    } catch (...) {
      --in_parallel_region;
      throw;
    }
    --in_parallel_region;
    return;
  }

  if (static_cast<std::size_t>(workers) > n) workers = static_cast<int>(n);
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::exception_ptr first_error;

  auto body = [&]() {
    in_parallel_region = 1;
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) break;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!first_error) first_error = std::current_exception();
        break;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int w = 1; w < workers; ++w) pool.emplace_back(body);
  body();
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace affdet
