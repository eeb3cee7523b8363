#include "lpbk/util.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace lpbk {
namespace {
std::atomic<int> thread_cap{1};
}

void set_threads(int t) { thread_cap.store(std::max(1, t)); }
int get_threads() { return thread_cap.load(); }

void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body) {
    const int workers = std::min<std::size_t>(get_threads(), count ? count : 1);
    if (workers <= 1) {
        body(0, count);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk, hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(body, lo, hi);
    }
    for (auto& t : pool) t.join();
}

}  // namespace lpbk
