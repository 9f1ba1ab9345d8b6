// Static partition of an index range over worker threads.

#ifndef OMEGA_PARALLEL_HPP_
#define OMEGA_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace omega {

// Calls body(begin, end, worker) on disjoint slices covering [0, n). The first
// exception thrown by a worker is rethrown on the calling thread.
template <typename Body>
void parallel_ranges(std::size_t n, unsigned threads, Body&& body) {
  std::size_t const workers =
      std::max<std::size_t>(1, std::min<std::size_t>(threads, n / 64 + 1));
  if (workers == 1) {
    body(std::size_t{0}, n, 0u);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread>        pool;
  std::size_t const               step = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t begin = std::min(n, w * step);
    std::size_t end   = std::min(n, begin + step);
    pool.emplace_back([&, begin, end, w] {
      try {
        body(begin, end, static_cast<unsigned>(w));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  for (auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
}

}  // namespace omega

#endif  // OMEGA_PARALLEL_HPP_
