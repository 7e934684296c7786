#pragma once

#include <cstddef>
#include <functional>

namespace affdet {

// Runs fn(0), ..., fn(n-1) across the configured worker pool. Callers hand
// each index its own output slot, so the result is identical for any worker
// count. Nested calls from inside a worker run serially. The first exception
// thrown by any index is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

int worker_count();

}  // namespace affdet
