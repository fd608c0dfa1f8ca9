#pragma once

#include <cstddef>
#include <functional>

namespace fsind {

/// Worker count: FSIND_THREADS if set to a positive integer, else the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Splits [0, n) into `chunks` contiguous ranges and calls body(chunk, begin, end)
/// for each, spread over worker_count() threads. Chunk boundaries depend only
/// on n and `chunks`, so per-chunk partial results can be reduced in a fixed order.
void parallel_chunks(std::size_t n, std::size_t chunks,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

}  // namespace fsind
