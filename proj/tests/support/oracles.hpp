#pragma once

#include <cstdint>
#include <functional>

// Independent reference evaluations used to freeze expected test values.
// Everything here is deliberately implemented along different routes than the
// library: quadrature instead of series, bisection instead of rational
// approximations, Monte Carlo instead of closed forms.

namespace oracle {

// Adaptive Simpson quadrature in long double.
long double integrate(const std::function<long double(long double)>& f,
                      long double a, long double b, long double eps);

// Standard normal CDF by quadrature of the density (tail-integrated for
// negative arguments, so no cancellation).
double normal_cdf(double x);

// Upper quantile by bisection on the quadrature CDF.
double normal_upper_quantile(double q);

// Central t CDF by quadrature of the density.
double central_t_cdf(double t, double df);

// Noncentral t CDF as a chi-square mixture of normal CDFs, by quadrature.
double noncentral_t_cdf(double t, double df, double ncp);

// Tiny deterministic generator for property-test draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    double uniform01();                      // (0,1]
    double uniform(double lo, double hi);
private:
    std::uint64_t state_;
};

// Monte Carlo expected event probability under exponential survival,
// exponential dropout and uniform accrual.
double event_probability_mc(double lambda, double gamma, double t_total,
                            double t_accrual, int draws, std::uint64_t seed);

} // namespace oracle
