// Minimal fork-join helpers. Work is split into contiguous blocks; results
// are written to caller-owned slots so output order never depends on the
// schedule.

#ifndef BRAIDREP_PARALLEL_HPP_
#define BRAIDREP_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "perm.hpp"

namespace braidrep {

  struct EnumerationOptions {
    // 0 means std::thread::hardware_concurrency().
    unsigned workers    = 0;
    int      max_degree = kDefaultMaxDegree;
  };

  [[nodiscard]] inline unsigned resolve_workers(unsigned requested) noexcept {
    if (requested != 0) {
      return requested;
    }
    return std::max(1U, std::thread::hardware_concurrency());
  }

  inline void require_enumerable(Degree d, EnumerationOptions const& opts) {
    if (d.value() > opts.max_degree) {
      throw std::invalid_argument("degree " + std::to_string(d.value())
                                  + " exceeds the enumeration limit "
                                  + std::to_string(opts.max_degree));
    }
  }

  // Calls body(begin, end) on disjoint blocks covering [0, count).
  template <typename Body>
  void parallel_blocks(std::size_t count, unsigned workers, Body&& body) {
    workers = static_cast<unsigned>(
        std::min<std::size_t>(std::max(1U, workers), std::max<std::size_t>(count, 1)));
    if (workers == 1) {
      body(std::size_t{0}, count);
      return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr       failure;
    std::mutex               failure_mtx;
    std::size_t const        chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      std::size_t const begin = std::min(count, w * chunk);
      std::size_t const end   = std::min(count, begin + chunk);
      pool.emplace_back([&, begin, end] {
        try {
          body(begin, end);
        } catch (...) {
          std::lock_guard lock(failure_mtx);
          if (!failure) {
            failure = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) {
      t.join();
    }
    if (failure) {
      std::rethrow_exception(failure);
    }
  }

  template <typename Body>
  void parallel_for(std::size_t count, unsigned workers, Body&& body) {
    parallel_blocks(count, workers, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        body(i);
      }
    });
  }

}  // namespace braidrep

#endif  // BRAIDREP_PARALLEL_HPP_
