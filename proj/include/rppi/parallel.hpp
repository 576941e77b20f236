#pragma once

#include <functional>

namespace rppi {

/// Number of worker threads to use: hardware concurrency, capped by the
/// RPPI_THREADS environment variable when set. Always >= 1.
int thread_budget();

/// Runs fn(begin, end) on contiguous chunks of [0, n) across up to
/// `threads` workers. With threads <= 1 the call is inline. Chunk
/// boundaries depend only on (n, threads), so results must not be
/// order-sensitive across chunks.
void parallel_for(int n, int threads, const std::function<void(int, int)>& fn);

}  // namespace rppi
