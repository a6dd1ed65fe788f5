#pragma once

// Chunked parallel map over an index range. Results keep index order, so
// output does not depend on the number of jobs.

#include <cstddef>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace pfpoly {

/// Jobs from the PFPOLY_JOBS environment variable, or 1.
inline int default_jobs() {
  if (const char* env = std::getenv("PFPOLY_JOBS")) {
    const int j = std::atoi(env);
    if (j >= 1) return j;
  }
  return 1;
}

template <class R>
std::vector<R> parallel_map(std::size_t count, const std::function<R(std::size_t)>& f, int jobs = 1) {
  std::vector<R> out(count);
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w)
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) out[i] = f(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace pfpoly
