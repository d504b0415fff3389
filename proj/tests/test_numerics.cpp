#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "twoarm/numerics.hpp"

using namespace twoarm;
namespace num = twoarm::num;

TEST_CASE("normal_cdf matches symmetry and known points") {
    CHECK(num::normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(num::normal_cdf(1.959964) == doctest::Approx(0.975).epsilon(1e-6));
    const double deep_tail = num::normal_cdf(-38.0);
    CHECK(deep_tail >= 0.0);
    CHECK(deep_tail <= 1e-300);
    CHECK_THROWS_AS(num::normal_cdf(std::nan("")), ValidationError);

    for (double x = -8.0; x <= 8.0; x += 0.25)
        CHECK(std::fabs(num::normal_cdf(x) + num::normal_cdf(-x) - 1.0) <= 1e-12);
}

TEST_CASE("normal_cdf against quadrature oracle") {
    const std::vector<double> grid = {-8, -6, -4, -2.5, -1, -0.3, 0, 0.4, 1, 1.96, 3, 5, 8};
    for (double x : grid)
        CHECK(std::fabs(num::normal_cdf(x) - oracle::normal_cdf(x)) <= 1e-12);
}

TEST_CASE("normal_upper_quantile known points and inverse round trip") {
    CHECK(num::normal_upper_quantile(0.5) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(num::normal_upper_quantile(0.025) == doctest::Approx(1.959964).epsilon(1e-5));
    CHECK(num::normal_upper_quantile(0.2) == doctest::Approx(0.841621).epsilon(1e-5));
    CHECK(num::normal_upper_quantile(0.025) ==
          doctest::Approx(oracle::normal_upper_quantile(0.025)).epsilon(1e-9));

    for (int i = 1; i <= 1000; ++i) {
        const double q = static_cast<double>(i) / 1001.0;
        const double z = num::normal_upper_quantile(q);
        CHECK(std::fabs(num::normal_cdf(z) - (1.0 - q)) <= 1e-9);
    }
    CHECK_THROWS_AS(num::normal_upper_quantile(0.0), ValidationError);
    CHECK_THROWS_AS(num::normal_upper_quantile(1.0), ValidationError);
    CHECK_THROWS_AS(num::normal_upper_quantile(-0.1), ValidationError);
}

TEST_CASE("noncentral t reduces to the central t and the normal limit") {
    CHECK(num::noncentral_t_cdf(2.228, 10.0, 0.0) == doctest::Approx(0.975).epsilon(1e-4));
    CHECK(num::noncentral_t_cdf(0.0, 5.0, 0.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(num::noncentral_t_cdf(1.0, 10000.0, 3.0) ==
          doctest::Approx(num::normal_cdf(-2.0)).epsilon(1e-3));
    CHECK_THROWS_AS(num::noncentral_t_cdf(1.0, 0.0, 0.0), ValidationError);
    CHECK_THROWS_AS(num::noncentral_t_cdf(1.0, -3.0, 0.0), ValidationError);

    // monotone in t
    double prev = -1.0;
    for (double t = -6.0; t <= 6.0; t += 0.5) {
        const double v = num::noncentral_t_cdf(t, 7.0, 1.3);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("noncentral t against quadrature oracles") {
    // central case: independent density quadrature
    for (double df : {3.0, 10.0, 30.0})
        for (double t : {-2.5, -1.0, 0.0, 0.7, 2.0, 3.5})
            CHECK(std::fabs(num::noncentral_t_cdf(t, df, 0.0) - oracle::central_t_cdf(t, df)) <=
                  1e-8);

    // noncentral case: chi-square mixture quadrature
    for (double df : {5.0, 12.0, 30.0})
        for (double ncp : {-1.0, 0.5, 3.0})
            for (double t : {-2.0, 0.0, 1.5, 3.0})
                CHECK(std::fabs(num::noncentral_t_cdf(t, df, ncp) -
                                oracle::noncentral_t_cdf(t, df, ncp)) <= 1e-8);
}

TEST_CASE("central t upper quantile") {
    CHECK(num::central_t_upper_quantile(0.5, 3.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(num::central_t_upper_quantile(0.025, 10.0) == doctest::Approx(2.228).epsilon(1e-3));
    CHECK(num::central_t_upper_quantile(0.025, 1e6) == doctest::Approx(1.95996).epsilon(1e-3));
    for (double q : {0.01, 0.1, 0.4, 0.8})
        for (double df : {2.0, 9.0, 120.0}) {
            const double t = num::central_t_upper_quantile(q, df);
            CHECK(std::fabs(num::noncentral_t_cdf(t, df, 0.0) - (1.0 - q)) <= 1e-8);
        }
    CHECK_THROWS_AS(num::central_t_upper_quantile(0.0, 5.0), ValidationError);
    CHECK_THROWS_AS(num::central_t_upper_quantile(0.1, 0.0), ValidationError);
}

TEST_CASE("find_root locates smooth roots and step discontinuities") {
    CHECK(num::find_root([](double x) { return x - 2.0; }, 0.0, 5.0, 1e-10) ==
          doctest::Approx(2.0).epsilon(1e-9));
    CHECK(num::find_root([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-10) ==
          doctest::Approx(1.41421356).epsilon(1e-8));
    const double step = num::find_root([](double x) { return x < 0.3 ? -1.0 : 1.0; },
                                       0.0, 1.0, 1e-6);
    CHECK(std::fabs(step - 0.3) <= 1e-6);
    CHECK_THROWS_AS(num::find_root([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-9),
                    ValidationError);
    CHECK_THROWS_AS(num::find_root([](double) { return std::nan(""); }, -1.0, 1.0, 1e-9),
                    NoFiniteSizeError);
}

TEST_CASE("integer_infimum finds the least satisfying integer") {
    auto ge = [](std::uint64_t bound) {
        return [bound](std::uint64_t m) { return m >= bound; };
    };
    CHECK(num::integer_infimum(ge(5), 1) == 5);
    CHECK(num::integer_infimum(ge(1), 100) == 1);
    CHECK(num::integer_infimum(ge(123456), 7) == 123456);
    CHECK(num::integer_infimum(ge(3), 1000000) == 3);
    CHECK_THROWS_AS(num::integer_infimum([](std::uint64_t) { return false; }, 1, 1000),
                    NoFiniteSizeError);

    oracle::Rng rng(20240817);
    for (int rep = 0; rep < 200; ++rep) {
        const auto bound = static_cast<std::uint64_t>(rng.uniform(1.0, 2e6));
        const auto hint = static_cast<std::uint64_t>(rng.uniform(1.0, 2e6));
        const std::uint64_t found = num::integer_infimum(ge(bound), hint);
        CHECK(found == bound);
        CHECK(ge(bound)(found));
        if (found > 1) CHECK_FALSE(ge(bound)(found - 1));
    }
}
