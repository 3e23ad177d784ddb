#pragma once

#include <cstddef>
#include <functional>

namespace tgi::parallel {

/// Caps the number of worker threads used for slice-parallel work. 0 restores
/// the default (hardware concurrency).
void setMaxThreads(unsigned threads);
unsigned maxThreads();

/// Runs fn(i) for i in [0, count). Each index writes only its own output, so
/// results do not depend on the thread count. Small jobs (work below a fixed
/// threshold of scalar operations) run inline.
void forEachSlice(std::ptrdiff_t count, double workPerSlice,
                  const std::function<void(std::ptrdiff_t)>& fn);

} // namespace tgi::parallel
