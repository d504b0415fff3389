#pragma once

#include <cstdint>
#include <functional>

#include "twoarm/errors.hpp"

// Special functions and generic solvers shared by the size engines.
// Everything here is pure and reentrant.

namespace twoarm::num {

// A probability constrained to the open interval (0,1).
class Probability {
public:
    explicit Probability(double v) : value_(v) {
        if (!(v > 0.0 && v < 1.0))
            throw ValidationError("probability must lie strictly inside (0,1)");
    }
    double value() const { return value_; }

private:
    double value_;
};

struct NoncentralTParams {
    double df;  // degrees of freedom, > 0
    double ncp; // noncentrality
};

// Standard normal CDF. Rejects non-finite input.
double normal_cdf(double x);

// Lower-tail inverse of the standard normal CDF, p in (0,1).
double normal_quantile(double p);

// z with P(Z > z) = q, q in (0,1). normal_upper_quantile(0.5) == 0.
double normal_upper_quantile(double q);
inline double normal_upper_quantile(Probability q) { return normal_upper_quantile(q.value()); }

// Regularized incomplete beta I_x(a,b), continued-fraction evaluation.
double incomplete_beta(double x, double a, double b);

// CDF of the noncentral t distribution, series of Poisson-weighted
// incomplete-beta terms with relative tail truncation at 1e-12.
double noncentral_t_cdf(double t, double df, double ncp);
inline double noncentral_t_cdf(double t, const NoncentralTParams& p) {
    return noncentral_t_cdf(t, p.df, p.ncp);
}

// t with P(T_df > t) = q.
double central_t_upper_quantile(double q, double df);

// Bracketed scalar root finder: bisection with inverse-quadratic/secant
// acceleration (Brent). Requires a sign change on [lo,hi]; the bracket is
// shrunk below tol, so step discontinuities are located to within tol.
double find_root(const std::function<double(double)>& f, double lo, double hi, double tol);

// Least positive integer m with pred(m) true, for a false-then-true monotone
// predicate. Geometric bracketing from the hint, then bisection. Throws
// NoFiniteSizeError if no solution exists at or below the cap.
std::uint64_t integer_infimum(const std::function<bool(std::uint64_t)>& pred,
                              std::uint64_t hint,
                              std::uint64_t cap = 1000000000ull);

} // namespace twoarm::num
