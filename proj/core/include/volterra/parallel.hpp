#pragma once

#include <cstddef>
#include <functional>

namespace volterra {

/// Environment variable selecting the worker count.
inline constexpr const char* kWorkersEnv = "VOLTERRA_WORKERS";

/// Worker count: an explicit override if set, else $VOLTERRA_WORKERS, else the
/// hardware concurrency. Always >= 1.
std::size_t worker_count();

/// Overrides the worker count for this process; 0 restores the default.
void set_worker_count(std::size_t workers);

/// Calls body(i) for i in [0, n). Each index is visited exactly once; callers
/// write results into index-addressed slots so the outcome is independent of
/// the schedule. Nested calls run serially on the calling worker.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace volterra
