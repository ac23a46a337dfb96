#include "multider/scan.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace multider {

int default_parallelism() {
    if (const char* env = std::getenv("MULTIDER_JOBS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

std::vector<Json> scan_parallel(const std::vector<std::function<Json()>>& tasks,
                                int parallelism) {
    if (parallelism < 1) throw DomainError("parallelism must be >= 1");
    std::vector<Json> results(tasks.size());
    if (tasks.empty()) return results;

    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                results[i] = tasks[i]();
            } catch (const std::exception& e) {
                results[i] = Json{{"error", e.what()}};
            }
        }
    };

    size_t n_threads = std::min(static_cast<size_t>(parallelism), tasks.size());
    if (n_threads <= 1) {
        worker();
        return results;
    }
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (size_t i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return results;
}

} // namespace multider
