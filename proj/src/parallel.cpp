#include "wsicl/parallel.hpp"

#include <cstdlib>
#include <thread>
#include <vector>

namespace wsicl {

int num_workers() {
    static const int n = [] {
        const char* env = std::getenv("WSICL_NUM_WORKERS");
        if (env == nullptr) return 0;
        const int v = std::atoi(env);
        return v > 0 ? v : 0;
    }();
    return n;
}

void parallel_for_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
    const int workers = num_workers();
    if (workers <= 1 || n < 2) {
        fn(0, n);
        return;
    }
    const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
    std::vector<std::thread> threads;
    threads.reserve(k);
    for (std::size_t t = 0; t < k; ++t) {
        const std::size_t begin = n * t / k;
        const std::size_t end = n * (t + 1) / k;
        threads.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& th : threads) th.join();
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    parallel_for_chunks(n, [&fn](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) fn(i);
    });
}

}  // namespace wsicl
