// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "golden.hpp"
#include "oracles.hpp"
#include "twoarm/adjustments.hpp"
#include "twoarm/bioeq.hpp"
#include "twoarm/engines.hpp"
#include "twoarm/numerics.hpp"
#include "twoarm/power.hpp"
#include "twoarm/simulate.hpp"
#include "twoarm/sweep.hpp"

using namespace twoarm;
namespace num = twoarm::num;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what) {
    std::printf("criterion %2d: %s  %s\n", criterion, ok ? "PASS" : "FAIL", what.c_str());
    if (!ok) ++failures;
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
}

std::string run_command(const std::string& args, int* exit_code) {
    const std::string cmd = std::string(TWOARM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    if (!pipe) {
        *exit_code = -1;
        return out;
    }
    char buffer[4096];
    while (std::size_t n = std::fread(buffer, 1, sizeof(buffer), pipe)) out.append(buffer, n);
    const int status = pclose(pipe);
    *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

void criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    const SizeResult r = size_mean(golden::example1());
    const double elapsed = ms_since(start);
    const bool ok = r.n2 == 113 && r.n1 == 113 && r.unadjusted_n2 &&
                    *r.unadjusted_n2 == 108 && elapsed < 10.0;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "continuous equivalence: n2=%lld n1=%lld unadjusted=%lld (%.2f ms)",
                  r.n2, r.n1, r.unadjusted_n2.value_or(-1), elapsed);
    report(1, ok, buf);
}

void criterion_2() {
    const SizeResult r = size_prop(golden::example2());
    const bool ok = r.n2 == 86 && r.n1 == 86 && r.unadjusted_n2 && *r.unadjusted_n2 == 78;
    char buf[120];
    std::snprintf(buf, sizeof(buf), "crossover binary superiority: n2=%lld unadjusted=%lld",
                  r.n2, r.unadjusted_n2.value_or(-1));
    report(2, ok, buf);
}

void criterion_3() {
    const SizeResult r = size_tte(golden::example3());
    const bool ok = r.n2 == 56 && r.unadjusted_n2 &&
                    std::llabs(*r.unadjusted_n2 - 40) <= 1;
    char buf[120];
    std::snprintf(buf, sizeof(buf),
                  "time-to-event equality: n2=%lld unadjusted=%lld (target 40 +- 1)", r.n2,
                  r.unadjusted_n2.value_or(-1));
    report(3, ok, buf);
}

void criterion_4() {
    const SizeResult r = size_ord(golden::example4());
    const bool ok = r.n2 == 135 && r.unadjusted_n2 && *r.unadjusted_n2 == 94;
    char buf[120];
    std::snprintf(buf, sizeof(buf), "ordinal equality: n2=%lld unadjusted=%lld", r.n2,
                  r.unadjusted_n2.value_or(-1));
    report(4, ok, buf);
}

void criterion_5() {
    SweepSpec spec;
    spec.base = golden::device_trial(0.0, 0.0, 0.1);
    spec.rho1_values = {0.0, 0.01, 0.02, 0.03, 0.05, 0.08, 0.13};
    spec.rho2_values = spec.rho1_values;
    spec.r_values = {0.1};

    const auto start = std::chrono::steady_clock::now();
    const auto rows = run_sweep(spec);
    const double elapsed = ms_since(start);

    auto total_at = [&](double rho1, double rho2) -> long long {
        for (const auto& row : rows)
            if (row.rho1 == rho1 && row.rho2 == rho2) return row.result.total;
        return -1;
    };
    const std::vector<double> grid = spec.rho1_values;
    const long long equal_expect[7] = {804, 838, 872, 910, 994, 1142, 1472};
    const long long le_expect[7] = {804, 822, 856, 892, 954, 1068, 1302};
    const long long ge_expect[7] = {804, 818, 854, 890, 948, 1058, 1282};

    bool ok = elapsed < 1000.0;
    for (int i = 0; i < 7; ++i) {
        ok = ok && total_at(grid[i], grid[i]) == equal_expect[i];
        const double lo = i == 0 ? grid[0] : grid[i - 1];
        ok = ok && total_at(lo, grid[i]) == le_expect[i];
        ok = ok && total_at(grid[i], lo) == ge_expect[i];
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "device-trial sweep: 21 totals across three rho patterns (%.1f ms)",
                  elapsed);
    report(5, ok, buf);
}

void criterion_6() {
    const AchievedPower a = achieved_power(golden::example1(), 113);
    const AchievedPower b = achieved_power(golden::device_trial(0.03, 0.03, 0.1), 402);
    const bool ok = std::fabs(a.power - 0.80138) <= 0.005 && std::fabs(b.power - 0.755) <= 0.01;
    char buf[120];
    std::snprintf(buf, sizeof(buf),
                  "power inversion: %.5f (target 0.80138 +- 0.005), %.4f (target 0.755 +- 0.01)",
                  a.power, b.power);
    report(6, ok, buf);
}

void criterion_7() {
    oracle::Rng rng(20240807);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double t1 = rng.uniform(-10.0, 10.0);
        const double t2 = rng.uniform(-10.0, 10.0);
        const double rho1 = rng.uniform(0.0, 0.5);
        const double rho2 = rng.uniform(0.0, 0.49);
        const MixedParams m = mix_noncompliance(t1, t2, rho1, rho2);
        worst = std::max(worst, std::fabs((m.theta2_star - m.theta1_star) -
                                          m.compliance_prob * m.cace));
    }
    char buf[120];
    std::snprintf(buf, sizeof(buf), "compliance mixing identity: max |error| = %.3e", worst);
    report(7, worst <= 1e-12, buf);
}

void criterion_8() {
    const auto start = std::chrono::steady_clock::now();
    struct Case {
        Request req;
        long long n2;
        double target;
    };
    const Case cases[] = {
        {golden::example1(), 113, 0.80},
        {golden::example2(), 86, 0.80},
        {golden::example3(), 56, 0.80},
        {golden::example4(), 135, 0.90},
    };
    bool ok = true;
    std::string detail;
    for (const Case& c : cases) {
        SimConfig cfg;
        cfg.request = c.req;
        cfg.n2 = c.n2;
        cfg.replicates = 10000;
        cfg.master_seed = 424242;
        const SimResult r = simulate_power(cfg);
        ok = ok && std::fabs(r.power - c.target) <= 0.03;
        char buf[48];
        std::snprintf(buf, sizeof(buf), " %.4f/%.2f", r.power, c.target);
        detail += buf;
    }

    // type-I calibration at zero effect
    Request null_mean;
    null_mean.layout = {Design::parallel, 1.0, 0};
    null_mean.frame = {TestKind::equality, 0.0};
    null_mean.sig = {0.05, 0.20};
    null_mean.endpoint = ContinuousEndpoint{1.0, 0.0};
    SimConfig cal;
    cal.request = null_mean;
    cal.n2 = 200;
    cal.replicates = 10000;
    cal.master_seed = 7;
    const SimResult mean_cal = simulate_power(cal);

    Request null_prop = null_mean;
    null_prop.endpoint = BinaryEndpoint::proportions(0.5, 0.5);
    cal.request = null_prop;
    cal.master_seed = 8;
    const SimResult prop_cal = simulate_power(cal);

    ok = ok && std::fabs(mean_cal.power - 0.05) <= 0.01 &&
         std::fabs(prop_cal.power - 0.05) <= 0.01;
    const double elapsed = ms_since(start);
    ok = ok && elapsed < 60000.0;
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "simulated power%s, type-I %.4f/%.4f (target 0.05 +- 0.01) (%.0f ms)",
                  detail.c_str(), mean_cal.power, prop_cal.power, elapsed);
    report(8, ok, buf);
}

void criterion_9() {
    double worst_normal = 0.0;
    for (double x = -8.0; x <= 8.0; x += 0.5)
        worst_normal =
            std::max(worst_normal, std::fabs(num::normal_cdf(x) - oracle::normal_cdf(x)));

    double worst_t = 0.0;
    for (double df : {3.0, 10.0, 30.0})
        for (double t : {-2.5, -1.0, 0.0, 0.7, 2.0, 3.5})
            worst_t = std::max(worst_t, std::fabs(num::noncentral_t_cdf(t, df, 0.0) -
                                                  oracle::central_t_cdf(t, df)));
    for (double df : {5.0, 12.0, 30.0})
        for (double ncp : {-1.0, 0.5, 3.0})
            for (double t : {-2.0, 0.0, 1.5, 3.0})
                worst_t = std::max(worst_t, std::fabs(num::noncentral_t_cdf(t, df, ncp) -
                                                      oracle::noncentral_t_cdf(t, df, ncp)));
    const bool ok = worst_normal <= 1e-12 && worst_t <= 1e-8;
    char buf[120];
    std::snprintf(buf, sizeof(buf),
                  "special functions: normal max |err| = %.2e, t max |err| = %.2e",
                  worst_normal, worst_t);
    report(9, ok, buf);
}

void criterion_10() {
    EngineOptions exact;
    exact.mean_method = MeanMethod::exact_t;
    const SizeResult approx_r = size_mean(golden::example1());
    const SizeResult exact_r = size_mean(golden::example1(), exact);
    bool ok = std::llabs(exact_r.n2 - approx_r.n2) <= 2;

    oracle::Rng rng(77);
    int violations = 0;
    for (int i = 0; i < 10000; ++i) {
        if (i % 2 == 0) {
            const double d1 = rng.uniform(-1.0, 1.0);
            const double d2 = d1 + rng.uniform(0.001, 1.0);
            const double t1 = rng.uniform(-2.0, 2.0);
            const double t2 = rng.uniform(-2.0, 2.0);
            const bool original = d1 < t2 - t1 && t2 - t1 < d2;
            const EquivalenceMap m = additive_to_equivalence(t1, t2, {d1, d2});
            if (original != (std::fabs(m.theta2 - m.theta1) < m.delta)) ++violations;
        } else {
            const double d1 = rng.uniform(0.05, 1.5);
            const double d2 = d1 * rng.uniform(1.001, 4.0);
            const double t1 = rng.uniform(0.05, 3.0);
            const double t2 = rng.uniform(0.05, 3.0);
            const bool original = d1 < t2 / t1 && t2 / t1 < d2;
            const EquivalenceMap m = multiplicative_to_equivalence(t1, t2, {d1, d2});
            if (original != (std::fabs(m.theta2 - m.theta1) < m.delta)) ++violations;
        }
    }
    ok = ok && violations == 0;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "exact-t %lld vs normal %lld (within 2); bioeq region violations = %d",
                  exact_r.n2, approx_r.n2, violations);
    report(10, ok, buf);
}

void criterion_11() {
    const std::string flags =
        "simulate --endpoint mean --n2 113 --design parallel --test equivalence "
        "--alpha 0.05 --beta 0.20 --sigma 0.10 --k 1 --delta 0.05 --TTE 0.01 "
        "--rho 0.05,0.07 --r 0.1 --replicates 4000 --seed 99";
    int code_a = 0, code_b = 0;
    const std::string a = run_command(flags + " --threads 1", &code_a);
    const std::string b = run_command(flags + " --threads 4", &code_b);
    const bool ok = code_a == 0 && code_b == 0 && !a.empty() && a == b;
    report(11, ok, "simulate JSON is bit-identical across thread counts");
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    if (failures == 0) std::printf("all acceptance criteria passed\n");
    else std::printf("%d acceptance criteria FAILED\n", failures);
    return failures;
}
