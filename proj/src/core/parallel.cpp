#include "semilab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace semilab {

std::size_t default_parallelism() {
  if (const char* env = std::getenv("SEMILAB_PARALLELISM")) {
    try {
      const long value = std::stol(env);
      if (value > 0) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::size_t effective_workers(std::size_t tasks, std::size_t workers) {
  return std::max<std::size_t>(1, std::min(tasks, workers));
}

void parallel_for(std::size_t tasks, std::size_t workers,
                  const std::function<void(std::size_t, std::size_t)>& body) {
  const std::size_t used = effective_workers(tasks, workers);
  if (used <= 1) {
    for (std::size_t task = 0; task < tasks; ++task) body(task, 0);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(used);
  for (std::size_t w = 0; w < used; ++w) {
    const std::size_t begin = tasks * w / used;
    const std::size_t end = tasks * (w + 1) / used;
    threads.emplace_back([&, w, begin, end] {
      try {
        for (std::size_t task = begin; task < end; ++task) body(task, w);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace semilab
