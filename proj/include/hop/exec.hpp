#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace hop {

/// Every data-parallel kernel has an OpenMP path and a serial reference path
/// that must produce identical results.
enum class Exec { Serial, Parallel };

/// Worker count for Exec::Parallel; <= 0 keeps the OpenMP default.
void set_workers(int n);
int workers();

/// Runs body(i) for i in [0, count), serially or under OpenMP.
/// Exceptions are captured per index and the first one is rethrown on the calling thread.
template <class Body>
void for_each_index(std::size_t count, Exec exec, Body&& body) {
  std::vector<std::exception_ptr> errors(count);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < static_cast<long>(count); ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace hop
