#pragma once

#include <cstdint>

#include "twoarm/trial_model.hpp"

// Monte Carlo trial simulator: empirical power at a given per-arm size under
// treatment-switching noncompliance and missing-completely-at-random
// attrition. This is the behavioral verification harness for the analytic
// size formulas; it shares nothing with the engines beyond the request types
// and the normal quantile.

namespace twoarm {

struct SimConfig {
    Request request;
    long long n2 = 0;          // treatment arm size; control gets ceil(k*n2)
    int replicates = 10000;    // >= 100
    std::uint64_t master_seed = 0;
    int threads = 0;           // <= 0: hardware concurrency
};

struct SimResult {
    double power = 0.0;
    double mc_se = 0.0;
    int replicates = 0;
    std::uint64_t seed = 0;
};

// Deterministic, collision-resistant per-replicate seed derivation. Identical
// (master, index) pairs always yield identical streams, independent of
// evaluation order across threads.
std::uint64_t derive_replicate_seed(std::uint64_t master_seed, std::uint64_t replicate_index);

// Replicates are independent; results reduce by integer summation, so the
// estimate is bit-identical for any thread count.
SimResult simulate_power(const SimConfig& config);

} // namespace twoarm
