#pragma once

#include <functional>

namespace qbracket {

// Worker count: QBRACKET_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
int thread_count();

// Runs body(i) for i in [0, n) on up to thread_count() threads. Work items are
// claimed dynamically; callers must not depend on execution order.
void parallel_for(int n, const std::function<void(int)> &body);

} // namespace qbracket
