#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "twoarm/hypothesis.hpp"

using namespace twoarm;

TEST_CASE("resolve maps each frame to its tail and power arguments") {
    const Significance sig{0.05, 0.20};

    const auto eq = resolve({TestKind::equality, 0.0}, sig);
    CHECK(eq.tail_prob == doctest::Approx(0.025));
    CHECK(eq.beta_quantile_arg == doctest::Approx(0.20));
    CHECK(eq.power_level == doctest::Approx(0.80));

    const auto ni = resolve({TestKind::noninferiority, 0.1}, sig);
    CHECK(ni.tail_prob == doctest::Approx(0.05));
    CHECK(ni.beta_quantile_arg == doctest::Approx(0.20));

    const auto sup = resolve({TestKind::superiority, 0.1}, sig);
    CHECK(sup.tail_prob == doctest::Approx(0.05));

    const auto eqv = resolve({TestKind::equivalence, 0.1}, sig);
    CHECK(eqv.tail_prob == doctest::Approx(0.05));
    CHECK(eqv.beta_quantile_arg == doctest::Approx(0.10));
    CHECK(eqv.power_level == doctest::Approx(0.90));
}

TEST_CASE("frame effects") {
    const Significance sig{0.05, 0.20};

    const auto eq = resolve({TestKind::equality, 0.0}, sig);
    CHECK(eq.effect(1.0, 3.5) == doctest::Approx(2.5));
    CHECK(eq.effect(3.5, 1.0) == doctest::Approx(2.5)); // swap invariance

    const auto sup = resolve({TestKind::superiority, 0.1}, sig);
    CHECK(sup.effect(0.0, 0.0) == doctest::Approx(-0.1));

    const auto ni = resolve({TestKind::noninferiority, 0.1}, sig);
    CHECK(ni.effect(0.0, 0.0) == doctest::Approx(0.1)); // margin -delta substituted

    const auto ni_strict = resolve({TestKind::noninferiority, 0.1}, sig, true);
    CHECK(ni_strict.effect(0.0, 0.0) == doctest::Approx(-0.1)); // verbatim sign

    const auto eqv = resolve({TestKind::equivalence, 0.2}, sig);
    CHECK(eqv.effect(0.0, 0.1) == doctest::Approx(0.1));
    CHECK(eqv.effect(0.0, -0.3) == doctest::Approx(-0.1));
}

TEST_CASE("equivalence effect is positive exactly on the alternative region") {
    const Significance sig{0.05, 0.10};
    oracle::Rng rng(7);
    for (int i = 0; i < 2000; ++i) {
        const double delta = rng.uniform(0.01, 2.0);
        const double t1 = rng.uniform(-2.0, 2.0);
        const double t2 = rng.uniform(-2.0, 2.0);
        const auto rf = resolve({TestKind::equivalence, delta}, sig);
        CHECK((rf.effect(t1, t2) > 0.0) == (std::fabs(t2 - t1) < delta));
    }
}

TEST_CASE("resolve rejects malformed frames") {
    CHECK_THROWS_AS(resolve({TestKind::equality, 0.1}, {0.05, 0.2}), ValidationError);
    CHECK_THROWS_AS(resolve({TestKind::equivalence, 0.0}, {0.05, 0.2}), ValidationError);
    CHECK_THROWS_AS(resolve({TestKind::superiority, -0.1}, {0.05, 0.2}), ValidationError);
    CHECK_THROWS_AS(resolve({TestKind::equality, 0.0}, {0.0, 0.2}), ValidationError);
    CHECK_THROWS_AS(resolve({TestKind::equality, 0.0}, {0.05, 1.0}), ValidationError);
}

TEST_CASE("test kind names round trip") {
    for (auto kind : {TestKind::equality, TestKind::noninferiority, TestKind::superiority,
                      TestKind::equivalence})
        CHECK(test_kind_from_name(test_kind_name(kind)) == kind);
    CHECK_THROWS_AS(test_kind_from_name("both"), ValidationError);
}
