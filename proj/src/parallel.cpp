#include "cocycle/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace cocycle {

int thread_count() {
    if (const char* env = std::getenv("COCYCLE_FORGE_THREADS")) {
        try {
            int t = std::stoi(env);
            if (t >= 1) return t;
        } catch (const std::exception&) {
        }
    }
    return int(std::max(1u, std::thread::hardware_concurrency()));
}

void parallel_for(size_t count, const std::function<void(size_t)>& body) {
    size_t workers = std::min(size_t(thread_count()), count);
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        for (size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (size_t w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

double pairwise_sum(const double* values, size_t count) {
    if (count <= 8) {
        double s = 0.0;
        for (size_t i = 0; i < count; ++i) s += values[i];
        return s;
    }
    size_t half = count / 2;
    return pairwise_sum(values, half) + pairwise_sum(values + half, count - half);
}

}  // namespace cocycle
