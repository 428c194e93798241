#include "turan/execution.hpp"

#include <omp.h>

#include <cstdint>
#include <exception>
#include <mutex>

namespace turan {

void run_tasks(std::size_t count, const ExecutionPolicy& policy,
               const std::function<void(std::size_t)>& task) {
  if (policy.mode == Execution::kSerial) {
    for (std::size_t t = 0; t < count; ++t) task(t);
    return;
  }
  const int threads = policy.threads > 0 ? policy.threads : omp_get_max_threads();
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t t = 0; t < total; ++t) {
    try {
      task(static_cast<std::size_t>(t));
    } catch (...) {
      const std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace turan
