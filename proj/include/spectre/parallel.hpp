#pragma once

#include <cstddef>
#include <functional>

namespace spectre {

// Worker cap: SPECTRE_THREADS if set and positive, else hardware concurrency.
unsigned thread_cap();

// Runs body(i) for i in [0, count) on up to thread_cap() threads.
// Each index is handled by exactly one call; slot identifies the worker.
void parallel_for(size_t count, const std::function<void(size_t i, unsigned slot)>& body, unsigned* used = nullptr);

}  // namespace spectre
