#include "xx0/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace xx0 {

namespace {
std::atomic<unsigned> g_cap{0};
}

void set_thread_cap(unsigned n) { g_cap.store(n); }

unsigned thread_cap() {
    unsigned cap = g_cap.load();
    if (cap == 0) {
        cap = std::thread::hardware_concurrency();
        if (cap == 0) cap = 1;
    }
    return cap;
}

void parallel_for(std::size_t begin, std::size_t end, const std::function<void(std::size_t)>& fn) {
    const std::size_t n = end > begin ? end - begin : 0;
    if (n == 0) return;
    unsigned workers = thread_cap();
    if (workers > n) workers = static_cast<unsigned>(n);
    if (workers <= 1 || n < 4) {
        for (std::size_t i = begin; i < end; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{begin};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= end) break;
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace xx0
