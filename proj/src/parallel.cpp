#include "tgi/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tgi::parallel {

namespace {

std::atomic<unsigned> gMaxThreads{0};

// Below this many scalar operations per call the thread start-up dominates.
constexpr double kMinParallelWork = 2.0e5;

} // namespace

void setMaxThreads(unsigned threads) { gMaxThreads.store(threads); }

unsigned maxThreads()
{
    const unsigned cap = gMaxThreads.load();
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    return cap == 0 ? hw : std::min(cap, hw);
}

void forEachSlice(std::ptrdiff_t count, double workPerSlice,
                  const std::function<void(std::ptrdiff_t)>& fn)
{
    const auto workers = static_cast<std::ptrdiff_t>(
        std::min<std::ptrdiff_t>(maxThreads(), count));
    if (workers <= 1 || workPerSlice * static_cast<double>(count) < kMinParallelWork) {
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }

    std::atomic<std::ptrdiff_t> next{0};
    std::exception_ptr failure;
    std::mutex failureMutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (std::ptrdiff_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::ptrdiff_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(failureMutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

} // namespace tgi::parallel
