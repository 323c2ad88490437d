#pragma once

#include <cstddef>
#include <functional>

namespace adelic {

/// Thread count resolved from ADELIC_THREADS (0 or unset = hardware auto).
unsigned thread_count();

/// Runs body(i) for i in [0, count). Work is partitioned by index, so the
/// results are identical for every thread count, including 1.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

} // namespace adelic
