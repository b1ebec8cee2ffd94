// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pmbpqm {

// Resolves a user-facing thread-count knob (0 = use all hardware threads)
// to a value usable in an OpenMP num_threads clause.
inline int resolve_threads(int requested) {
#ifdef _OPENMP
  return requested > 0 ? requested : omp_get_max_threads();
#else
  (void)requested;
  return 1;
#endif
}

// Exceptions may not escape an OpenMP region; loop bodies run through this
// collector and the first captured exception is rethrown afterwards.
class ParallelErrors {
public:
  template <typename F>
  void run(F&& body) noexcept {
    try {
      body();
    } catch (...) {
#pragma omp critical(pmbpqm_parallel_errors)
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

private:
  std::exception_ptr error_;
};

}  // namespace pmbpqm
