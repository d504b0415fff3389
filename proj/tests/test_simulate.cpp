#include <doctest.h>

#include <cmath>
#include <unordered_set>

#include "golden.hpp"
#include "twoarm/simulate.hpp"

using namespace twoarm;

namespace {

SimConfig config_for(const Request& req, long long n2, int replicates = 10000,
                     std::uint64_t seed = 20240817, int threads = 1) {
    SimConfig cfg;
    cfg.request = req;
    cfg.n2 = n2;
    cfg.replicates = replicates;
    cfg.master_seed = seed;
    cfg.threads = threads;
    return cfg;
}

} // namespace

TEST_CASE("seed derivation is deterministic and collision free") {
    CHECK(derive_replicate_seed(42, 7) == derive_replicate_seed(42, 7));
    CHECK(derive_replicate_seed(42, 7) != derive_replicate_seed(42, 8));
    CHECK(derive_replicate_seed(42, 7) != derive_replicate_seed(43, 7));

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(2000000);
    for (std::uint64_t i = 0; i < 1000000; ++i)
        CHECK(seen.insert(derive_replicate_seed(987654321, i)).second);
}

TEST_CASE("identical configs give bit-identical estimates for any thread count") {
    const SimResult one = simulate_power(config_for(golden::example1(), 113, 2000, 5, 1));
    const SimResult three = simulate_power(config_for(golden::example1(), 113, 2000, 5, 3));
    const SimResult eight = simulate_power(config_for(golden::example1(), 113, 2000, 5, 8));
    CHECK(one.power == three.power);
    CHECK(one.power == eight.power);
    CHECK(one.mc_se == three.mc_se);
}

TEST_CASE("empirical power at the analytic sizes (10k replicates)") {
    // continuous equivalence design at 113 per arm
    const SimResult ex1 = simulate_power(config_for(golden::example1(), 113));
    CHECK(std::fabs(ex1.power - 0.80) <= 0.03);
    CHECK(ex1.mc_se == doctest::Approx(std::sqrt(ex1.power * (1 - ex1.power) / 10000.0)));

    // crossover binary superiority at 86 per arm: the mirrored one-sided test
    const SimResult ex2 = simulate_power(config_for(golden::example2(), 86));
    CHECK(std::fabs(ex2.power - 0.80) <= 0.03);
}

TEST_CASE("type-I calibration under a zero-effect equality design") {
    Request req;
    req.layout = {Design::parallel, 1.0, 0};
    req.frame = {TestKind::equality, 0.0};
    req.sig = {0.05, 0.20};
    req.endpoint = ContinuousEndpoint{1.0, 0.0};
    req.adj = {0.0, 0.0, 0.0};
    const SimResult r = simulate_power(config_for(req, 150));
    CHECK(std::fabs(r.power - 0.05) <= 3.0 * std::max(r.mc_se, 0.0022));
}

TEST_CASE("power saturates far above the analytic size") {
    const SimResult r = simulate_power(config_for(golden::example3(), 5600, 500));
    CHECK(r.power >= 0.999);
}

TEST_CASE("equal-arm noncompliance strictly drains power at fixed size") {
    auto at_rho = [&](double rho) {
        Request req;
        req.layout = {Design::parallel, 1.0, 0};
        req.frame = {TestKind::equality, 0.0};
        req.sig = {0.05, 0.20};
        req.endpoint = BinaryEndpoint::proportions(0.6, 0.8);
        req.adj = {rho, rho, 0.0};
        return simulate_power(config_for(req, 120, 4000)).power;
    };
    const double p0 = at_rho(0.0);
    const double p1 = at_rho(0.1);
    const double p2 = at_rho(0.2);
    CHECK(p0 > p1);
    CHECK(p1 > p2);
}

TEST_CASE("simulation rejects malformed configs") {
    CHECK_THROWS_AS(simulate_power(config_for(golden::example1(), 113, 50)),
                    ValidationError);
    CHECK_THROWS_AS(simulate_power(config_for(golden::example1(), 1)), ValidationError);

    // an infeasible binary difference distribution
    Request bad = golden::example2();
    bad.endpoint = BinaryEndpoint::sd_of_difference(1.2, 0.0); // second moment > 1
    CHECK_THROWS_AS(simulate_power(config_for(bad, 86)), ValidationError);

    Request unsupported = golden::example3();
    unsupported.layout = {Design::crossover, 1.0, 2};
    CHECK_THROWS_AS(simulate_power(config_for(unsupported, 56)), ValidationError);
}
