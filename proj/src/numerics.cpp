#include "twoarm/numerics.hpp"

#include <cmath>
#include <limits>

namespace twoarm::num {

namespace {

constexpr double kSqrt1_2 = 0.70710678118654752440;

double ppnd16(double p);

} // namespace

double normal_cdf(double x) {
    if (!std::isfinite(x))
        throw ValidationError("normal_cdf: non-finite argument");
    return 0.5 * std::erfc(-x * kSqrt1_2);
}

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw ValidationError("normal_quantile: argument must lie in (0,1)");
    return ppnd16(p);
}

double normal_upper_quantile(double q) {
    if (!(q > 0.0 && q < 1.0))
        throw ValidationError("normal_upper_quantile: argument must lie in (0,1)");
    // -quantile(q) keeps full precision for small q, where 1-q would round.
    return -ppnd16(q);
}

namespace {

// Wichura's algorithm AS 241 (PPND16), accurate to ~1 ulp over (0,1).
double ppnd16(double p) {
    const double q = p - 0.5;
    if (std::fabs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                     6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
                   1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
                 1.3314166789178437745e+2) * r + 3.3871328727963666080e+0) /
               (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                     3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
                   5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
                 4.2313330701600911252e+1) * r + 1.0);
    }
    double r = q < 0.0 ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double z;
    if (r <= 5.0) {
        r -= 1.6;
        z = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                  2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
                3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
              4.63033784615654529590e+0) * r + 1.42343711074968357734e+0) /
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                  1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
              2.05319162663775882187e+0) * r + 1.0);
    } else {
        r -= 5.0;
        z = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                  1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
              5.46378491116411436990e+0) * r + 6.65790464350110377720e+0) /
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                  1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
              5.99832206555887937690e-1) * r + 1.0);
    }
    return q < 0.0 ? -z : z;
}

double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Continued fraction for the incomplete beta (modified Lentz).
double beta_cf(double x, double a, double b) {
    constexpr double eps = 1e-15;
    constexpr double tiny = 1e-300;
    constexpr int max_iter = 500;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < eps) break;
    }
    return h;
}

} // namespace

double incomplete_beta(double x, double a, double b) {
    if (!(a > 0.0 && b > 0.0))
        throw ValidationError("incomplete_beta: shape parameters must be positive");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double front = std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta(a, b));
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * beta_cf(x, a, b) / a;
    return 1.0 - front * beta_cf(1.0 - x, b, a) / b;
}

double noncentral_t_cdf(double t, double df, double ncp) {
    if (!(df > 0.0))
        throw ValidationError("noncentral_t_cdf: degrees of freedom must be positive");
    if (!std::isfinite(t))
        throw ValidationError("noncentral_t_cdf: non-finite argument");
    if (t < 0.0)
        return 1.0 - noncentral_t_cdf(-t, df, -ncp);

    const double del = ncp;
    const double lambda = 0.5 * del * del;
    if (lambda > 700.0) {
        // exp(-lambda) underflows; fall back to the Abramowitz-Stegun 26.7.10
        // normal approximation, adequate this deep in a tail.
        const double num = t * (1.0 - 1.0 / (4.0 * df)) - del;
        const double den = std::sqrt(1.0 + t * t / (2.0 * df));
        return normal_cdf(num / den);
    }

    const double x = (t == 0.0) ? 0.0 : t * t / (t * t + df);
    double value = normal_cdf(-del);
    if (x > 0.0) {
        // Series of Poisson-weighted incomplete-beta terms (Lenth's AS 243
        // scheme). Terms decay geometrically past the Poisson mode, so stop
        // once a term past the mode falls below the relative truncation level.
        double p = std::exp(-lambda);
        double q = del * std::exp(-lambda) * std::sqrt(2.0 / M_PI);
        double sum = 0.0;
        const double half_df = 0.5 * df;
        for (int j = 0; j <= 4000; ++j) {
            const double ib_p = incomplete_beta(x, j + 0.5, half_df);
            const double ib_q = incomplete_beta(x, j + 1.0, half_df);
            const double term = p * ib_p + q * ib_q;
            sum += term;
            // q-terms carry the sign of the noncentrality, so bound by |term|
            if (j > lambda && std::fabs(term) < 1e-12 * (std::fabs(sum) + 1e-300)) break;
            p *= lambda / (j + 1.0);
            q *= lambda / (j + 1.5);
        }
        value += 0.5 * sum;
    }
    if (value < 0.0) return 0.0;
    if (value > 1.0) return 1.0;
    return value;
}

double central_t_upper_quantile(double q, double df) {
    if (!(q > 0.0 && q < 1.0))
        throw ValidationError("central_t_upper_quantile: tail probability must lie in (0,1)");
    if (!(df > 0.0))
        throw ValidationError("central_t_upper_quantile: degrees of freedom must be positive");
    const double target = 1.0 - q;
    if (q == 0.5) return 0.0;
    // bracket the quantile by geometric expansion around the normal guess
    double guess = normal_upper_quantile(q);
    double width = std::max(1.0, 2.0 * std::fabs(guess));
    double lo = guess - width;
    double hi = guess + width;
    while (noncentral_t_cdf(lo, df, 0.0) > target) {
        hi = lo;
        lo *= 2.0;
        if (lo < -1e300) throw NoFiniteSizeError("central_t_upper_quantile: bracketing failed");
        if (lo > -1.0) lo = -2.0;
    }
    while (noncentral_t_cdf(hi, df, 0.0) < target) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e300) throw NoFiniteSizeError("central_t_upper_quantile: bracketing failed");
        if (hi < 1.0) hi = 2.0;
    }
    return find_root([&](double v) { return noncentral_t_cdf(v, df, 0.0) - target; },
                     lo, hi, 1e-12);
}

double find_root(const std::function<double(double)>& f, double lo, double hi, double tol) {
    if (!(lo < hi)) throw ValidationError("find_root: requires lo < hi");
    if (!(tol > 0.0)) throw ValidationError("find_root: tolerance must be positive");

    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (!std::isfinite(fa) || !std::isfinite(fb))
        throw NoFiniteSizeError("find_root: non-finite evaluation at bracket endpoint");
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw ValidationError("find_root: no sign change on the bracket");

    // Brent: keep [a,b] bracketing, prefer inverse-quadratic/secant steps.
    double c = a, fc = fa;
    double d = b - a, e = d;
    constexpr int max_iter = 200;
    for (int iter = 0; iter < max_iter; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a; fc = fa; d = b - a; e = d;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::fabs(b) + 0.5 * tol;
        const double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || fb == 0.0) return b;
        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            double p, q_, r_;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q_ = 1.0 - s;
            } else {
                q_ = fa / fc;
                r_ = fb / fc;
                p = s * (2.0 * xm * q_ * (q_ - r_) - (b - a) * (r_ - 1.0));
                q_ = (q_ - 1.0) * (r_ - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q_ = -q_;
            p = std::fabs(p);
            const double min1 = 3.0 * xm * q_ - std::fabs(tol1 * q_);
            const double min2 = std::fabs(e * q_);
            if (2.0 * p < std::min(min1, min2)) {
                e = d; d = p / q_;
            } else {
                d = xm; e = d;
            }
        } else {
            d = xm; e = d;
        }
        a = b; fa = fb;
        if (std::fabs(d) > tol1) b += d;
        else b += (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if (!std::isfinite(fb))
            throw NoFiniteSizeError("find_root: non-finite evaluation");
        if (fb == 0.0) return b;
    }
    return b;
}

std::uint64_t integer_infimum(const std::function<bool(std::uint64_t)>& pred,
                              std::uint64_t hint, std::uint64_t cap) {
    if (hint == 0) hint = 1;
    if (hint > cap) hint = cap;

    std::uint64_t lo = 0; // greatest value known false (0: virtual sentinel)
    std::uint64_t hi = 0; // least value known true
    if (pred(hint)) {
        hi = hint;
        std::uint64_t probe = hint;
        while (probe > 1) {
            probe /= 2;
            if (pred(probe)) {
                hi = probe;
            } else {
                lo = probe;
                break;
            }
        }
    } else {
        lo = hint;
        std::uint64_t probe = hint;
        while (true) {
            if (probe >= cap)
                throw NoFiniteSizeError("integer_infimum: no solution at or below the search cap");
            probe = (probe > cap / 2) ? cap : probe * 2;
            if (pred(probe)) {
                hi = probe;
                break;
            }
            lo = probe;
        }
    }
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (pred(mid)) hi = mid;
        else lo = mid;
    }
    return hi;
}

} // namespace twoarm::num
