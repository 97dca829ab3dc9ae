#include "fuzzy/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace fuzzy {

std::vector<ChernReport<double>> sweep(int n_from, int n_to, const std::vector<Sign>& signs, unsigned threads)
{
    if (n_from < 2) throw DomainError("sweep: N must be at least 2");
    if (n_to < n_from || signs.empty()) throw DomainError("sweep: empty range");

    std::vector<Sign> ordered = signs;
    std::sort(ordered.begin(), ordered.end());
    ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());

    struct Case {
        int n;
        Sign sign;
    };
    std::vector<Case> cases;
    for (int n = n_from; n <= n_to; ++n)
        for (Sign s : ordered) cases.push_back({n, s});

    std::vector<ChernReport<double>> out(cases.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
            try {
                out[i] = fuzzy_chern_report<double>(cases[i].n, cases[i].sign);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(cases.size()));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace fuzzy
