#ifndef POSET_SHELL_PARALLEL_HPP
#define POSET_SHELL_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace posets {

// Runs f(i) for every i in [0, count) on up to `jobs` threads.  Callers
// write results into per-index slots, so the output never depends on the
// number of workers or on scheduling.
template <class F>
void parallel_for_index(std::size_t count, unsigned jobs, F&& f) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                f(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace posets

#endif
