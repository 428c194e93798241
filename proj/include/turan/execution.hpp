#pragma once

#include <cstddef>
#include <functional>

namespace turan {

// Every kernel with a parallel path keeps its serial reference; the two
// must produce identical results.
enum class Execution { kSerial, kParallel };

struct ExecutionPolicy {
  Execution mode = Execution::kParallel;
  int threads = 0;  // 0 = OpenMP default
};

// Calls task(0..count-1). Under kParallel the indices are scheduled
// dynamically over OpenMP threads; the first exception thrown by any task
// is rethrown once all tasks finish.
void run_tasks(std::size_t count, const ExecutionPolicy& policy,
               const std::function<void(std::size_t)>& task);

}  // namespace turan
