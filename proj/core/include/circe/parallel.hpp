#pragma once

#include <cstddef>
#include <functional>

namespace circe {

/// Environment variable consulted when a caller asks for the default worker count.
inline constexpr const char* kThreadsEnv = "CIRCE_THREADS";

/// requested > 0 is returned as is. Otherwise CIRCE_THREADS if set and
/// positive, else std::thread::hardware_concurrency() (at least 1).
unsigned resolve_workers(unsigned requested);

/// Runs body(i) for i in [0, count) on up to `workers` threads. Chunks are
/// handed out dynamically; callers write results into per-index slots so the
/// outcome does not depend on scheduling. The first exception is rethrown.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body);

}  // namespace circe
