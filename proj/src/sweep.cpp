#include "twoarm/sweep.hpp"

#include <mutex>
#include <thread>

#include "twoarm/power.hpp"

namespace twoarm {

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    if (spec.rho1_values.empty() || spec.rho2_values.empty() || spec.r_values.empty())
        throw ValidationError("sweep grids must be non-empty");

    std::vector<Request> requests;
    requests.reserve(spec.rho1_values.size() * spec.rho2_values.size() *
                     spec.r_values.size());
    for (double rho1 : spec.rho1_values)
        for (double rho2 : spec.rho2_values)
            for (double r : spec.r_values) {
                Request point = spec.base;
                point.adj = AdjustmentProfile{rho1, rho2, r};
                requests.push_back(validate_request(point).request);
            }

    std::vector<SweepRow> rows(requests.size());
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto evaluate = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            try {
                SweepRow row;
                row.rho1 = requests[i].adj.rho1;
                row.rho2 = requests[i].adj.rho2;
                row.r = requests[i].adj.r;
                row.result = compute_size(requests[i], spec.options);
                if (spec.power_at)
                    row.power_at_base_n =
                        achieved_power(requests[i], *spec.power_at, spec.options).power;
                rows[i] = std::move(row);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    const std::size_t n = requests.size();
    const std::size_t workers =
        std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        evaluate(0, n);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = n * w / workers;
            const std::size_t end = n * (w + 1) / workers;
            pool.emplace_back(evaluate, begin, end);
        }
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

} // namespace twoarm
