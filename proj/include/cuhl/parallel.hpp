#ifndef CUHL_PARALLEL_HPP
#define CUHL_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace cuhl {

// Runs f(i) for i in [begin, end). Work items must write to disjoint state;
// results are then independent of the schedule.
template <typename F>
void parallel_for(std::uint32_t begin, std::uint32_t end, unsigned threads, F&& f) {
    if (threads <= 1 || end <= begin + 1) {
        for (std::uint32_t i = begin; i < end; ++i) f(i);
        return;
    }
    unsigned workers = std::min<unsigned>(threads, end - begin);
    std::atomic<std::uint32_t> next{begin};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                std::uint32_t i = next.fetch_add(1);
                if (i >= end) return;
                f(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace cuhl

#endif
