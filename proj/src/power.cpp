#include "twoarm/power.hpp"

#include "twoarm/numerics.hpp"

namespace twoarm {

AchievedPower achieved_power(const Request& request, long long n2,
                             const EngineOptions& opt) {
    if (n2 < 1)
        throw ValidationError("n2 must be a positive integer");
    const Request req = validate_request(request).request;

    constexpr double beta_lo = 0.005; // power 0.995
    constexpr double beta_hi = 0.995; // power 0.005

    auto raw_at = [&](double beta) { return raw_size_at_beta(req, beta, opt); };

    const double target = static_cast<double>(n2);
    if (raw_at(beta_hi) > target)
        throw PowerRangeError("power out of range: n2 is below the size at power 0.005");
    if (raw_at(beta_lo) < target)
        return {1.0 - beta_lo, true};

    const double beta_root = num::find_root(
        [&](double beta) { return raw_at(beta) - target; }, beta_lo, beta_hi, 1e-10);
    return {1.0 - beta_root, false};
}

} // namespace twoarm
